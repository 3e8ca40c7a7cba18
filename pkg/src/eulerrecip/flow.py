"""Oriented multigraphs, flow polynomials, flows and totally cyclic reorientations.

An edge is a record (head, tail) and runs from its tail to its head.  Loops
and parallel edges are allowed; edges are identified by position.

Euler-level quantities over groups with real-line factors are never computed
pointwise.  The flows of G supported inside an edge set S form a group
isomorphic to A^{b1(V, S)}, so its Euler characteristic is e(A)^{b1(V, S)};
Moebius inversion over subsets gives the Euler characteristic of the flows
with support exactly Z.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterable, Iterator, Sequence

from .errors import BudgetError, SizeError
from .polynomial import RationalPoly, eval_int
from .report import Report, digest, stopwatch

FLOW_BUDGET = 10**7
REORIENT_EDGES = 16
MAX_POLY_EDGES = 14


@dataclass(frozen=True)
class OrientedMultigraph:
    n: int
    edges: tuple[tuple[int, int], ...]  # (head, tail)

    def __post_init__(self):
        edges = tuple((int(h), int(t)) for h, t in self.edges)
        for h, t in edges:
            if not (0 <= h < self.n and 0 <= t < self.n):
                raise ValueError(f"edge {(h, t)} out of range")
        object.__setattr__(self, "edges", edges)

    @classmethod
    def of(cls, n: int, edges: Iterable[Sequence[int]] = ()) -> "OrientedMultigraph":
        return cls(n, tuple(tuple(e) for e in edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    def delete(self, i: int) -> "OrientedMultigraph":
        return OrientedMultigraph(self.n, self.edges[:i] + self.edges[i + 1:])

    def reorient(self, sigma: Iterable[int]) -> "OrientedMultigraph":
        sigma = set(sigma)
        return OrientedMultigraph(
            self.n, tuple((t, h) if i in sigma else (h, t) for i, (h, t) in enumerate(self.edges))
        )

    def to_json(self) -> dict:
        return {"vertices": self.n, "edges": [{"head": h, "tail": t} for h, t in self.edges]}


def cycle(n: int) -> OrientedMultigraph:
    """Cyclically oriented n-cycle (n = 1 is a loop, n = 2 a digon)."""
    return OrientedMultigraph.of(n, [((i + 1) % n, i) for i in range(n)])


def oriented_graph_from_json(doc) -> OrientedMultigraph:
    """Load ``{"vertices": n, "edges": [{"head": u, "tail": v}, ...]}``."""
    if isinstance(doc, str):
        doc = json.loads(doc)
    if not isinstance(doc, dict):
        raise ValueError("oriented graph document must be a JSON object")
    if "vertices" not in doc:
        raise ValueError("oriented graph document: missing field 'vertices'")
    n = doc["vertices"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise ValueError("oriented graph document: 'vertices' must be a nonnegative integer")
    edges = doc.get("edges", [])
    if not isinstance(edges, list):
        raise ValueError("oriented graph document: 'edges' must be a list")
    out = []
    for idx, e in enumerate(edges):
        if not isinstance(e, dict) or "head" not in e or "tail" not in e:
            raise ValueError(f"oriented graph document: edges[{idx}] needs 'head' and 'tail'")
        h, t = e["head"], e["tail"]
        for name, x in (("head", h), ("tail", t)):
            if not isinstance(x, int) or isinstance(x, bool) or not 0 <= x < n:
                raise ValueError(f"oriented graph document: edges[{idx}].{name} invalid")
        out.append((h, t))
    return OrientedMultigraph.of(n, out)


class _DSU:
    def __init__(self, n):
        self.parent = list(range(n))
        self.count = n

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        a, b = self.find(a), self.find(b)
        if a != b:
            self.parent[b] = a
            self.count -= 1
            return True
        return False


def _components(n: int, edges) -> int:
    dsu = _DSU(n)
    for h, t in edges:
        dsu.union(h, t)
    return dsu.count


def betti(G: OrientedMultigraph) -> tuple[int, int]:
    b0 = _components(G.n, G.edges)
    return b0, G.m - G.n + b0


def _subset_b1(G: OrientedMultigraph) -> list[int]:
    """b1(V, S) for every edge subset S, indexed by bitmask."""
    out = []
    for mask in range(1 << G.m):
        sub = [e for i, e in enumerate(G.edges) if mask >> i & 1]
        out.append(len(sub) - G.n + _components(G.n, sub))
    return out


# -- flow polynomial ---------------------------------------------------------

def _flow_key(n: int, edges) -> tuple:
    # orientation and isolated vertices do not affect the flow polynomial
    used = sorted({v for e in edges for v in e})
    pos = {v: i for i, v in enumerate(used)}
    return len(used), tuple(sorted(tuple(sorted((pos[a], pos[b]))) for a, b in edges))


@lru_cache(maxsize=None)
def _flow(key: tuple) -> RationalPoly:
    n, edges = key
    if not edges:
        return RationalPoly.constant(1)
    a, b = edges[0]
    rest = edges[1:]
    if a == b:
        return RationalPoly((-1, 1)) * _flow(_flow_key(n, rest))
    if _components(n, rest) > _components(n, edges):
        return RationalPoly()

    def merge(x):
        x = a if x == b else x
        return x - 1 if x > b else x

    contracted = [(merge(x), merge(y)) for x, y in rest]
    return _flow(_flow_key(n - 1, contracted)) - _flow(_flow_key(n, rest))


def flow_polynomial(G: OrientedMultigraph) -> RationalPoly:
    """Flow polynomial by deletion-contraction (loop, coloop and generic rules)."""
    if G.m > MAX_POLY_EDGES:
        raise SizeError(f"{G.m} edges exceeds {MAX_POLY_EDGES}")
    return _flow(_flow_key(G.n, G.edges))


def subgraph_expansion_polynomial(G: OrientedMultigraph) -> RationalPoly:
    """sum over S of (-1)^(|E|-|S|) t^b1(V,S)."""
    if G.m > MAX_POLY_EDGES:
        raise SizeError(f"{G.m} edges exceeds {MAX_POLY_EDGES}")
    coeffs = [0] * (G.m + 1)
    for mask, b1 in enumerate(_subset_b1(G)):
        coeffs[b1] += (-1) ** (G.m - bin(mask).count("1"))
    return RationalPoly(coeffs)


# -- flows over Z/k ----------------------------------------------------------

def _check_flow_budget(G: OrientedMultigraph, k: int) -> None:
    if k < 1:
        raise ValueError("k must be >= 1")
    if k ** G.m > FLOW_BUDGET:
        raise BudgetError(f"{k}^{G.m} edge labelings exceeds budget {FLOW_BUDGET}")


def is_flow(G: OrientedMultigraph, values: Sequence[int], k: int) -> bool:
    net = [0] * G.n
    for (h, t), x in zip(G.edges, values):
        net[h] += x
        net[t] -= x
    return all(v % k == 0 for v in net)


def enumerate_flows(G: OrientedMultigraph, k: int, nowhere_zero: bool) -> int:
    """Count Z/k-flows by testing every edge labeling."""
    _check_flow_budget(G, k)
    labels = range(1, k) if nowhere_zero else range(k)
    return sum(1 for values in product(labels, repeat=G.m) if is_flow(G, values, k))


def iter_flows(G: OrientedMultigraph, k: int) -> Iterator[tuple[int, ...]]:
    """Every Z/k-flow, parametrised by its values off a spanning forest."""
    _check_flow_budget(G, k)
    parent_edge = [None] * G.n
    seen = [False] * G.n
    incident = [[] for _ in range(G.n)]
    for i, (h, t) in enumerate(G.edges):
        if h != t:
            incident[h].append(i)
            incident[t].append(i)
    bfs = []
    for root in range(G.n):
        if seen[root]:
            continue
        seen[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            bfs.append(v)
            for i in incident[v]:
                h, t = G.edges[i]
                w = t if h == v else h
                if not seen[w]:
                    seen[w] = True
                    parent_edge[w] = i
                    queue.append(w)
    tree = {i for i in parent_edge if i is not None}
    free = [i for i in range(G.m) if i not in tree]
    for choice in product(range(k), repeat=len(free)):
        f = [0] * G.m
        net = [0] * G.n
        for i, x in zip(free, choice):
            f[i] = x
            h, t = G.edges[i]
            net[h] += x
            net[t] -= x
        for v in reversed(bfs):
            i = parent_edge[v]
            if i is None:
                continue
            h, t = G.edges[i]
            # pick f[i] so that v balances
            x = (-net[v]) % k if h == v else net[v] % k
            f[i] = x
            net[h] += x
            net[t] -= x
        yield tuple(f)


# -- totally cyclic reorientations ---------------------------------------------

def is_totally_cyclic(G: OrientedMultigraph) -> bool:
    """Every edge lies on a directed cycle (a loop is its own cycle)."""
    succ = [[] for _ in range(G.n)]
    for h, t in G.edges:
        succ[t].append(h)
    reach_cache: dict[int, set[int]] = {}

    def reach(v):
        if v not in reach_cache:
            seen = {v}
            stack = [v]
            while stack:
                x = stack.pop()
                for y in succ[x]:
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
            reach_cache[v] = seen
        return reach_cache[v]

    return all(h == t or t in reach(h) for h, t in G.edges)


def contract(G: OrientedMultigraph, Z: Iterable[int]) -> OrientedMultigraph:
    """G/Z: merge the endpoints of every edge in Z and drop Z.

    The remaining edges keep their order and orientation; those with both
    ends in one class become loops.
    """
    Z = set(Z)
    dsu = _DSU(G.n)
    for i in Z:
        dsu.union(*G.edges[i])
    roots = sorted({dsu.find(v) for v in range(G.n)})
    label = {r: j for j, r in enumerate(roots)}
    return OrientedMultigraph(
        len(roots),
        tuple(
            (label[dsu.find(h)], label[dsu.find(t)])
            for i, (h, t) in enumerate(G.edges)
            if i not in Z
        ),
    )


def totally_cyclic_reorientations(G: OrientedMultigraph) -> int:
    """Number of subsets sigma of E with the sigma-reorientation totally cyclic."""
    if G.m > REORIENT_EDGES:
        raise BudgetError(f"{G.m} edges exceeds reorientation budget {REORIENT_EDGES}")
    return sum(
        1
        for mask in range(1 << G.m)
        if is_totally_cyclic(G.reorient(i for i in range(G.m) if mask >> i & 1))
    )


def _tc_by_support(G: OrientedMultigraph):
    cache: dict[int, int] = {}

    def tc(mask: int) -> int:
        if mask not in cache:
            Z = [i for i in range(G.m) if mask >> i & 1]
            cache[mask] = totally_cyclic_reorientations(contract(G, Z))
        return cache[mask]

    return tc


def ftc_count(G: OrientedMultigraph, k: int) -> int:
    """#{(f, sigma)}: f a Z/k-flow, sigma a totally cyclic reorientation of G/Supp(f)."""
    if G.m > REORIENT_EDGES:
        raise BudgetError(f"{G.m} edges exceeds reorientation budget {REORIENT_EDGES}")
    tc = _tc_by_support(G)
    total = 0
    for f in iter_flows(G, k):
        support = sum(1 << i for i, x in enumerate(f) if x)
        total += tc(support)
    return total


# -- semialgebraic groups ------------------------------------------------------

@dataclass(frozen=True)
class SAGroup:
    """Z/c1 x ... x Z/cj x R^line_rank."""

    cyclic_orders: tuple[int, ...] = ()
    line_rank: int = 0

    def __post_init__(self):
        if any(c < 2 for c in self.cyclic_orders):
            raise ValueError("cyclic factors must have order >= 2")
        if self.line_rank < 0:
            raise ValueError("line_rank must be nonnegative")
        object.__setattr__(self, "cyclic_orders", tuple(sorted(self.cyclic_orders)))

    @classmethod
    def cyclic(cls, k: int) -> "SAGroup":
        if k < 1:
            raise ValueError("k must be >= 1")
        return cls((k,) if k > 1 else ())

    def negated(self) -> "SAGroup":
        return SAGroup(self.cyclic_orders, self.line_rank + 1)

    @property
    def euler(self) -> int:
        out = (-1) ** self.line_rank
        for c in self.cyclic_orders:
            out *= c
        return out

    def __str__(self):
        parts = [f"Z/{c}" for c in self.cyclic_orders] + ["R"] * self.line_rank
        return " x ".join(parts) if parts else "0"


def support_strata_euler(G: OrientedMultigraph, eA: int) -> list[int]:
    """Euler characteristic of the flows with support exactly Z, for every mask Z."""
    if G.m > REORIENT_EDGES:
        raise BudgetError(f"{G.m} edges exceeds stratification budget {REORIENT_EDGES}")
    es = [eA ** b1 for b1 in _subset_b1(G)]
    for i in range(G.m):
        bit = 1 << i
        for mask in range(1 << G.m):
            if mask & bit:
                es[mask] -= es[mask ^ bit]
    return es


def nowhere_zero_euler(G: OrientedMultigraph, A: SAGroup) -> int:
    """e(nowhere-zero A-flows): the top support stratum."""
    return support_strata_euler(G, A.euler)[(1 << G.m) - 1]


def ftc_euler(G: OrientedMultigraph, A: SAGroup) -> int:
    """Euler characteristic of FTC(G, A), summed over support strata."""
    tc = _tc_by_support(G)
    return sum(tc(Z) * e for Z, e in enumerate(support_strata_euler(G, A.euler)) if e)


def flow_reciprocity_check(G: OrientedMultigraph, k: int) -> list[Report]:
    """Flow reciprocity identities for G over Z/k and Z/k x R."""
    _, b1 = betti(G)
    sign = (-1) ** b1
    key = digest({"graph": G.to_json(), "k": k})
    A = SAGroup.cyclic(k)
    reports = []

    with stopwatch() as t:
        phi = flow_polynomial(G)
        expansion = subgraph_expansion_polynomial(G)
    reports.append(Report("flow-recip/expansion", key, phi, expansion, t[0], f"k={k}"))

    with stopwatch() as t:
        left = enumerate_flows(G, k, nowhere_zero=True)
    reports.append(Report("flow-recip/nowhere-zero", key, left, eval_int(phi, k), t[0], f"k={k}"))

    with stopwatch() as t:
        left = nowhere_zero_euler(G, A.negated())
    reports.append(Report("flow-recip/nowhere-zero-euler", key, left, eval_int(phi, -k), t[0], f"k={k}"))

    with stopwatch() as t:
        left = ftc_count(G, k)
    reports.append(Report("flow-recip/ftc-count", key, left, sign * eval_int(phi, -k), t[0], f"k={k}"))

    with stopwatch() as t:
        euler_finite = ftc_euler(G, A)
    reports.append(Report("flow-recip/ftc-euler-finite", key, euler_finite, left, t[0], f"k={k}"))

    with stopwatch() as t:
        left = ftc_euler(G, A.negated())
    reports.append(Report("flow-recip/ftc-euler-line", key, left, sign * eval_int(phi, k), t[0], f"k={k}"))
    return reports

"""Simple graphs: chromatic polynomials, colouring spaces, acyclic orientations.

AOC^mode(G, T) is the set of pairs (acyclic orientation, map V -> T that is
compatible / strictly compatible with it).  Splitting by orientation turns its
Euler characteristic into a sum of hom-space Euler characteristics of the
orientation posets.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional, Sequence

from .errors import BudgetError, SizeError
from .eulercalc import (
    SemialgTotalOrder,
    TameSet,
    euler_char,
    hom_euler_total_order,
    negate_total_order,
)
from .homspace import HomMode
from .polynomial import RationalPoly, eval_int
from .poset import FinitePoset, from_relations
from .report import Report, digest, stopwatch

MAX_CHROMATIC_VERTICES = 10
MAX_ORIENTATION_EDGES = 16
COLORING_BUDGET = 10**7


@dataclass(frozen=True)
class SimpleGraph:
    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        norm = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge {(u, v)} out of range")
            norm.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def of(cls, n: int, edges: Iterable[Sequence[int]] = ()) -> "SimpleGraph":
        edges = [tuple(e) for e in edges]
        keys = [(min(e), max(e)) for e in edges]
        if len(set(keys)) != len(keys):
            raise ValueError("duplicate edge")
        return cls(n, frozenset(keys))

    @property
    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def neighbors(self, v: int) -> set[int]:
        return {b if a == v else a for a, b in self.edges if v in (a, b)}

    def to_json(self) -> dict:
        return {"vertices": self.n, "edges": [list(e) for e in self.sorted_edges]}


def complete_graph(n: int) -> SimpleGraph:
    return SimpleGraph.of(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def cycle_graph(n: int) -> SimpleGraph:
    return SimpleGraph.of(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> SimpleGraph:
    return SimpleGraph.of(n, [(i, i + 1) for i in range(n - 1)])


def edgeless_graph(n: int) -> SimpleGraph:
    return SimpleGraph.of(n)


def graph_from_json(doc) -> SimpleGraph:
    """Load ``{"vertices": n, "edges": [[u, v], ...]}``."""
    if isinstance(doc, str):
        doc = json.loads(doc)
    if not isinstance(doc, dict):
        raise ValueError("graph document must be a JSON object")
    if "vertices" not in doc:
        raise ValueError("graph document: missing field 'vertices'")
    n = doc["vertices"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise ValueError("graph document: 'vertices' must be a nonnegative integer")
    edges = doc.get("edges", [])
    if not isinstance(edges, list):
        raise ValueError("graph document: 'edges' must be a list")
    out = []
    for idx, e in enumerate(edges):
        if (
            not isinstance(e, list)
            or len(e) != 2
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in e)
        ):
            raise ValueError(f"graph document: edges[{idx}] must be a pair of integers")
        if not all(0 <= x < n for x in e):
            raise ValueError(f"graph document: edges[{idx}] index out of range")
        if e[0] == e[1]:
            raise ValueError(f"graph document: edges[{idx}] is a loop")
        out.append(tuple(e))
    try:
        return SimpleGraph.of(n, out)
    except ValueError as exc:
        raise ValueError(f"graph document: {exc}") from None


# -- chromatic polynomial ----------------------------------------------------

def _canonical_key(n: int, edges) -> tuple:
    # Degree-refined relabelling.  Ties are broken by index, so isomorphic
    # graphs may get different keys, but a key always determines its graph.
    deg = [0] * n
    adj = [[] for _ in range(n)]
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
        adj[u].append(v)
        adj[v].append(u)
    sig = [(deg[v], tuple(sorted(deg[w] for w in adj[v]))) for v in range(n)]
    order = sorted(range(n), key=lambda v: (sig[v], v))
    pos = {v: i for i, v in enumerate(order)}
    return n, tuple(sorted((min(pos[u], pos[v]), max(pos[u], pos[v])) for u, v in edges))


@lru_cache(maxsize=None)
def _chromatic(key: tuple) -> RationalPoly:
    n, edges = key
    if not edges:
        return RationalPoly.monomial(n)
    if len(edges) == n * (n - 1) // 2:
        return RationalPoly.from_roots(range(n))
    deg = [0] * n
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    # delete/contract an edge at a max-degree vertex
    u, v = max(edges, key=lambda e: (deg[e[0]] + deg[e[1]], e))
    rest = [e for e in edges if e != (u, v)]
    deleted = _chromatic(_canonical_key(n, rest))

    def merge(x):
        x = u if x == v else x
        return x - 1 if x > v else x

    contracted_edges = set()
    for a, b in rest:
        a, b = merge(a), merge(b)
        if a != b:
            contracted_edges.add((min(a, b), max(a, b)))
    contracted = _chromatic(_canonical_key(n - 1, contracted_edges))
    return deleted - contracted


def chromatic_polynomial(G: SimpleGraph) -> RationalPoly:
    """Chromatic polynomial by memoised deletion-contraction."""
    if G.n > MAX_CHROMATIC_VERTICES:
        raise SizeError(f"{G.n} vertices exceeds {MAX_CHROMATIC_VERTICES}")
    return _chromatic(_canonical_key(G.n, G.edges))


def count_proper_colorings(G: SimpleGraph, k: int) -> int:
    """Count maps V -> [k] with distinct colours on every edge, by enumeration."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k ** G.n > COLORING_BUDGET:
        raise BudgetError(f"{k}^{G.n} colourings exceeds budget {COLORING_BUDGET}")
    earlier = [[w for w in G.neighbors(v) if w < v] for v in range(G.n)]
    c = [0] * G.n

    def rec(v: int) -> int:
        if v == G.n:
            return 1
        total = 0
        for colour in range(k):
            if all(c[w] != colour for w in earlier[v]):
                c[v] = colour
                total += rec(v + 1)
        return total

    return rec(0)


def coloring_space_euler(G: SimpleGraph, X: TameSet) -> int:
    """Euler characteristic of the space of proper colourings with colours in X."""
    return eval_int(chromatic_polynomial(G), euler_char(X))


# -- orientations ------------------------------------------------------------

@dataclass(frozen=True)
class Orientation:
    graph: SimpleGraph
    directed: frozenset[tuple[int, int]]

    def __post_init__(self):
        undirected = [(min(a, b), max(a, b)) for a, b in self.directed]
        if len(undirected) != len(set(undirected)) or set(undirected) != set(self.graph.edges):
            raise ValueError("orientation must pick exactly one direction per edge")

    def is_acyclic(self) -> bool:
        return _is_acyclic(self.graph.n, self.directed)


def _is_acyclic(n: int, arcs) -> bool:
    indeg = [0] * n
    out = [[] for _ in range(n)]
    for a, b in arcs:
        out[a].append(b)
        indeg[b] += 1
    stack = [v for v in range(n) if indeg[v] == 0]
    seen = 0
    while stack:
        v = stack.pop()
        seen += 1
        for w in out[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                stack.append(w)
    return seen == n


def _all_orientations(G: SimpleGraph):
    edges = G.sorted_edges
    if len(edges) > MAX_ORIENTATION_EDGES:
        raise BudgetError(f"{len(edges)} edges exceeds {MAX_ORIENTATION_EDGES}")
    for mask in range(1 << len(edges)):
        yield frozenset(
            (v, u) if mask >> i & 1 else (u, v) for i, (u, v) in enumerate(edges)
        )


@lru_cache(maxsize=4096)
def _acyclic(G: SimpleGraph) -> tuple[Orientation, ...]:
    return tuple(
        Orientation(G, arcs) for arcs in _all_orientations(G) if _is_acyclic(G.n, arcs)
    )


def acyclic_orientations(G: SimpleGraph) -> list[Orientation]:
    return list(_acyclic(G))


@lru_cache(maxsize=None)
def orientation_poset(o: Orientation) -> FinitePoset:
    """Transitive closure of the orientation; CycleError if it has a cycle."""
    return from_relations(o.graph.n, sorted(o.directed))


def aoc_count(G: SimpleGraph, T: SemialgTotalOrder, mode: HomMode) -> int:
    """e(AOC^mode(G, T)) as a sum over acyclic orientations."""
    return sum(hom_euler_total_order(orientation_poset(o), T, mode) for o in _acyclic(G))


def aoc_bruteforce(G: SimpleGraph, n: int, mode: HomMode) -> int:
    """#AOC^mode(G, [n]) by enumerating (orientation, map) pairs directly."""
    if n ** G.n > COLORING_BUDGET:
        raise BudgetError(f"{n}^{G.n} maps exceeds budget {COLORING_BUDGET}")
    strict = mode is HomMode.STRICT
    total = 0
    for arcs in _all_orientations(G):
        if not _is_acyclic(G.n, arcs):
            continue
        # arcs whose both ends are assigned once vertex v is reached
        into = [[] for _ in range(G.n)]
        for a, b in arcs:
            into[max(a, b)].append((a, b))
        c = [0] * G.n

        def rec(v: int) -> int:
            if v == G.n:
                return 1
            count = 0
            for colour in range(n):
                c[v] = colour
                ok = True
                for a, b in into[v]:
                    if c[a] > c[b] or (strict and c[a] == c[b]):
                        ok = False
                        break
                if ok:
                    count += rec(v + 1)
            return count

        total += rec(0)
    return total


def chromatic_reciprocity_check(
    G: SimpleGraph, n: int, orders: Optional[Sequence[SemialgTotalOrder]] = None
) -> list[Report]:
    """Both sides of the chromatic reciprocities for G, [n] and each order in ``orders``.

    Finite level: #AOC^<=(G, [n]) = (-1)^|V| chi(G, -n), with the left side
    counted by brute force, and the orientation-sum route checked against it.
    Euler level, for each T: e(AOC^<=(G, T)) = (-1)^|V| e(AOC^<(G, -T)) and
    e(AOC^<(G, T)) = (-1)^|V| e(AOC^<=(G, -T)).
    """
    chain_n = SemialgTotalOrder.finite_chain(n)
    if orders is None:
        orders = [chain_n]
    sign = (-1) ** G.n
    chi = chromatic_polynomial(G)
    reports = []
    base = {"graph": G.to_json(), "n": n}

    with stopwatch() as t:
        brute = aoc_bruteforce(G, n, HomMode.WEAK)
        right = sign * eval_int(chi, -n)
    reports.append(Report("chromatic-recip/count", digest(base), brute, right, t[0], f"n={n}"))

    with stopwatch() as t:
        left = aoc_count(G, chain_n, HomMode.WEAK)
    reports.append(Report("chromatic-recip/decomposition", digest(base), left, brute, t[0], f"n={n}"))

    with stopwatch() as t:
        left = aoc_count(G, chain_n, HomMode.STRICT)
        right = count_proper_colorings(G, n)
    reports.append(Report("chromatic-recip/strict-is-coloring", digest(base), left, right, t[0], f"n={n}"))

    for T in orders:
        key = digest({**base, "T": str(T)})
        neg = negate_total_order(T)
        with stopwatch() as t:
            left = aoc_count(G, T, HomMode.WEAK)
            right = sign * aoc_count(G, neg, HomMode.STRICT)
        reports.append(Report("chromatic-recip/euler-weak", key, left, right, t[0], f"T={T}"))
        with stopwatch() as t:
            left = aoc_count(G, T, HomMode.STRICT)
            right = sign * aoc_count(G, neg, HomMode.WEAK)
        reports.append(Report("chromatic-recip/euler-strict", key, left, right, t[0], f"T={T}"))
    return reports

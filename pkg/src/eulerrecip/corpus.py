"""Deterministic families of small posets, graphs and total orders.

Posets are the transitive closures of every subset of the forward pairs
{(i, j) : i < j} on 0..n-1, deduplicated by closure.  Every isomorphism type
appears (each poset has a natural labelling).
"""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import combinations, combinations_with_replacement, permutations, product

from .chromatic import SimpleGraph
from .eulercalc import SemialgTotalOrder
from .flow import OrientedMultigraph, _components
from .poset import FinitePoset, from_relations


@lru_cache(maxsize=None)
def posets_of_size(n: int) -> tuple[FinitePoset, ...]:
    forward = [(i, j) for i in range(n) for j in range(i + 1, n)]
    seen = {}
    for mask in range(1 << len(forward)):
        P = from_relations(n, [p for b, p in enumerate(forward) if mask >> b & 1])
        seen.setdefault(P.lt, P)
    return tuple(seen[k] for k in sorted(seen))


def poset_family(max_n: int) -> list[FinitePoset]:
    return [P for n in range(max_n + 1) for P in posets_of_size(n)]


@lru_cache(maxsize=None)
def acyclic_pair_sets(n: int) -> tuple[frozenset, ...]:
    """Every acyclic set of ordered pairs on 0..n-1 (labelled DAGs)."""
    forward = [(i, j) for i in range(n) for j in range(i + 1, n)]
    out = set()
    for perm in permutations(range(n)):
        for mask in range(1 << len(forward)):
            out.add(frozenset(
                (perm[i], perm[j]) for b, (i, j) in enumerate(forward) if mask >> b & 1
            ))
    return tuple(sorted(out, key=lambda s: (len(s), sorted(s))))


def simple_graph_family(max_n: int) -> list[SimpleGraph]:
    """All edge subsets of K_n, for n = 0..max_n."""
    out = []
    for n in range(max_n + 1):
        pairs = list(combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            out.append(SimpleGraph.of(n, [p for b, p in enumerate(pairs) if mask >> b & 1]))
    return out


def _multigraph_canon(n: int, edges: tuple) -> tuple:
    best = None
    for perm in permutations(range(n)):
        key = tuple(sorted(tuple(sorted((perm[a], perm[b]))) for a, b in edges))
        if best is None or key < best:
            best = key
    return best


def multigraph_family(max_vertices: int = 4, max_edges: int = 6) -> list[OrientedMultigraph]:
    """Connected multigraphs (loops and parallel edges allowed), up to isomorphism.

    Edges are oriented alternately forwards and backwards along the canonical
    edge list so that both orientations occur.
    """
    out = []
    for n in range(1, max_vertices + 1):
        slots = [(a, b) for a in range(n) for b in range(a, n)]
        seen = set()
        for m in range(n - 1, max_edges + 1):
            for edges in combinations_with_replacement(slots, m):
                if _components(n, edges) != 1:
                    continue
                canon = _multigraph_canon(n, edges)
                if canon in seen:
                    continue
                seen.add(canon)
                out.append(OrientedMultigraph.of(
                    n, [(b, a) if i % 2 == 0 else (a, b) for i, (a, b) in enumerate(canon)]
                ))
    return out


def total_order_family(max_pieces: int) -> list[SemialgTotalOrder]:
    return [
        SemialgTotalOrder.parse("".join(s))
        for k in range(max_pieces + 1)
        for s in product("po", repeat=k)
    ]


def random_poset(rng: random.Random, n: int, density: float = 0.4) -> FinitePoset:
    """Random poset: random forward relations under a random labelling."""
    perm = list(range(n))
    rng.shuffle(perm)
    rels = [
        (perm[i], perm[j])
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < density
    ]
    return from_relations(n, rels)


def random_graph(rng: random.Random, n: int, density: float = 0.5) -> SimpleGraph:
    return SimpleGraph.of(n, [p for p in combinations(range(n), 2) if rng.random() < density])


def random_multigraph(rng: random.Random, n: int, m: int) -> OrientedMultigraph:
    return OrientedMultigraph.of(n, [(rng.randrange(n), rng.randrange(n)) for _ in range(m)])

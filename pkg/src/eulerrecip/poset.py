"""Finite posets on the index set 0..n-1, stored as a dense strict-order matrix."""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence


class CycleError(ValueError):
    """The generating relations contain a directed cycle."""


@dataclass(frozen=True)
class FinitePoset:
    n: int
    lt: tuple[tuple[bool, ...], ...]

    def __post_init__(self):
        if len(self.lt) != self.n or any(len(row) != self.n for row in self.lt):
            raise ValueError("lt must be an n x n matrix")

    def less(self, i: int, j: int) -> bool:
        return self.lt[i][j]

    def leq(self, i: int, j: int) -> bool:
        return i == j or self.lt[i][j]

    def __len__(self) -> int:
        return self.n

    @cached_property
    def down_masks(self) -> tuple[int, ...]:
        """Bitmask of strict predecessors of each element."""
        return tuple(
            sum(1 << i for i in range(self.n) if self.lt[i][j]) for j in range(self.n)
        )

    @cached_property
    def up_masks(self) -> tuple[int, ...]:
        """Bitmask of strict successors of each element."""
        return tuple(
            sum(1 << j for j in range(self.n) if self.lt[i][j]) for i in range(self.n)
        )

    @cached_property
    def pairs(self) -> frozenset[tuple[int, int]]:
        return frozenset(
            (i, j) for i in range(self.n) for j in range(self.n) if self.lt[i][j]
        )

    @cached_property
    def topological_order(self) -> tuple[int, ...]:
        # elements with fewer predecessors first; ties by index
        return tuple(sorted(range(self.n), key=lambda i: (bin(self.down_masks[i]).count("1"), i)))

    def to_json(self) -> dict:
        return {"elements": self.n, "relations": [list(p) for p in sorted(self.pairs)]}


def from_relations(n: int, rels: Iterable[Sequence[int]]) -> FinitePoset:
    """Transitive closure of ``rels`` on n elements.

    Raises CycleError if the relations contain a directed cycle.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    lt = [[False] * n for _ in range(n)]
    for pair in rels:
        i, j = pair
        if not (0 <= i < n and 0 <= j < n):
            raise IndexError(f"relation {(i, j)} out of range for n={n}")
        lt[i][j] = True
    for k in range(n):
        row_k = lt[k]
        for i in range(n):
            if lt[i][k]:
                row_i = lt[i]
                for j in range(n):
                    if row_k[j]:
                        row_i[j] = True
    for i in range(n):
        if lt[i][i]:
            raise CycleError(f"relations contain a cycle through element {i}")
    return FinitePoset(n, tuple(tuple(row) for row in lt))


def chain(n: int) -> FinitePoset:
    return from_relations(n, [(i, i + 1) for i in range(n - 1)])


def antichain(n: int) -> FinitePoset:
    return from_relations(n, [])


def lex_product(P: FinitePoset, Q: FinitePoset) -> FinitePoset:
    """Lexicographic product; element (p, q) has index p * |Q| + q."""
    m = Q.n
    rels = []
    for p1 in range(P.n):
        for q1 in range(m):
            for p2 in range(P.n):
                for q2 in range(m):
                    if P.lt[p1][p2] or (p1 == p2 and Q.lt[q1][q2]):
                        rels.append((p1 * m + q1, p2 * m + q2))
    return from_relations(P.n * m, rels)


def strict_pairs(P: FinitePoset) -> frozenset[tuple[int, int]]:
    return P.pairs


def relabel(P: FinitePoset, perm: Sequence[int]) -> FinitePoset:
    """Image of P under the bijection i -> perm[i]."""
    return from_relations(P.n, [(perm[i], perm[j]) for i, j in strict_pairs(P)])


def check_invariants(P: FinitePoset) -> None:
    """Assert irreflexivity, antisymmetry and transitivity by direct scan."""
    n, lt = P.n, P.lt
    for i in range(n):
        assert not lt[i][i], f"reflexive at {i}"
        for j in range(n):
            assert not (lt[i][j] and lt[j][i]), f"symmetric pair {(i, j)}"
            for k in range(n):
                if lt[i][j] and lt[j][k]:
                    assert lt[i][k], f"not transitive at {(i, j, k)}"


def poset_from_json(doc) -> FinitePoset:
    """Load ``{"elements": n, "relations": [[i, j], ...]}``.

    Accepts a parsed dict or a JSON string.
    """
    if isinstance(doc, str):
        doc = json.loads(doc)
    if not isinstance(doc, dict):
        raise ValueError("poset document must be a JSON object")
    if "elements" not in doc:
        raise ValueError("poset document: missing field 'elements'")
    n = doc["elements"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise ValueError("poset document: 'elements' must be a nonnegative integer")
    rels = doc.get("relations", [])
    if not isinstance(rels, list):
        raise ValueError("poset document: 'relations' must be a list")
    pairs = []
    for idx, r in enumerate(rels):
        if (
            not isinstance(r, list)
            or len(r) != 2
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in r)
        ):
            raise ValueError(f"poset document: relations[{idx}] must be a pair of integers")
        if not all(0 <= x < n for x in r):
            raise ValueError(f"poset document: relations[{idx}] index out of range")
        pairs.append(tuple(r))
    return from_relations(n, pairs)

"""Stratified cell counting for hom spaces into Q x (0, 1).

The open cube (0, 1)^n is partitioned by the coincidence-and-order pattern of
the coordinates: one stratum per ordered set partition, and a stratum with b
blocks is an open b-simplex.  The Euler characteristic of a half-open order
cone is the signed count of the strata it contains.

Combining this with the projection Hom(P, Q x (0,1)) -> Hom^<=(P, Q), whose
fibre over f depends only on the collapsing pairs K(f), gives the Euler
characteristic of the hom space without using the reciprocity theorem.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .errors import SizeError
from .homspace import HomMode, iter_homs
from .poset import FinitePoset, strict_pairs

MAX_PREORDER_SIZE = 8


@dataclass(frozen=True)
class TotalPreorder:
    blocks: tuple[frozenset[int], ...]

    def __post_init__(self):
        seen: set[int] = set()
        for b in self.blocks:
            if not b:
                raise ValueError("blocks must be nonempty")
            if seen & b:
                raise ValueError("blocks must be disjoint")
            seen |= b
        if seen != set(range(len(seen))):
            raise ValueError("blocks must cover 0..n-1")

    @property
    def n(self) -> int:
        return sum(len(b) for b in self.blocks)

    def ranks(self) -> tuple[int, ...]:
        """Block index of each element."""
        r = [0] * self.n
        for idx, b in enumerate(self.blocks):
            for x in b:
                r[x] = idx
        return tuple(r)


@dataclass(frozen=True)
class ConstraintSet:
    n: int
    pairs: frozenset[tuple[int, int]]

    def __post_init__(self):
        for i, j in self.pairs:
            if not (0 <= i < self.n and 0 <= j < self.n):
                raise ValueError(f"pair {(i, j)} out of range")

    @classmethod
    def of(cls, n: int, pairs: Iterable[Sequence[int]]) -> "ConstraintSet":
        return cls(n, frozenset((i, j) for i, j in pairs))

    @classmethod
    def collapsing_pairs(cls, P: FinitePoset, f: Sequence[int]) -> "ConstraintSet":
        """K(f): strict pairs of P sent to the same element by f."""
        return cls(P.n, frozenset((i, j) for i, j in strict_pairs(P) if f[i] == f[j]))


def _ordered_partitions(elements: tuple[int, ...]):
    if not elements:
        yield ()
        return
    first, rest = elements[0], elements[1:]
    # choose the block containing `first`, then where it sits
    for r in range(len(rest) + 1):
        for others in combinations(rest, r):
            block = frozenset((first,) + others)
            remaining = tuple(x for x in rest if x not in block)
            for tail in _ordered_partitions(remaining):
                for pos in range(len(tail) + 1):
                    yield tail[:pos] + (block,) + tail[pos:]


def enumerate_total_preorders(n: int) -> list[TotalPreorder]:
    """All ordered set partitions of {0..n-1}, each exactly once."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > MAX_PREORDER_SIZE:
        raise SizeError(f"n={n} exceeds the bound {MAX_PREORDER_SIZE}")
    return [TotalPreorder(b) for b in sorted(
        _ordered_partitions(tuple(range(n))),
        key=lambda bs: tuple(tuple(sorted(b)) for b in bs),
    )]


@lru_cache(maxsize=None)
def _strata_table(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Block rank of every element in every stratum, and the stratum signs."""
    preorders = enumerate_total_preorders(n)
    ranks = np.array([t.ranks() for t in preorders], dtype=np.int8).reshape(len(preorders), n)
    signs = np.array([(-1) ** len(t.blocks) for t in preorders], dtype=np.int64)
    return ranks, signs


@lru_cache(maxsize=None)
def cone_euler(X: ConstraintSet, mode: HomMode) -> int:
    """Euler characteristic of {t in (0,1)^n : t_i <= t_j (or <) for (i,j) in X}.

    Signed count of the strata (ordered set partitions) lying in the cone.
    """
    ranks, signs = _strata_table(X.n)
    if not X.pairs:
        return int(signs.sum())
    i, j = (np.array(c) for c in zip(*X.pairs))
    if mode is HomMode.WEAK:
        inside = np.all(ranks[:, i] <= ranks[:, j], axis=1)
    else:
        inside = np.all(ranks[:, i] < ranks[:, j], axis=1)
    return int(signs[inside].sum())


def hom_euler_negated_target(P: FinitePoset, Q: FinitePoset, mode: HomMode) -> int:
    """e(Hom^mode(P, Q x (0, 1))) by fibring over the first projection.

    Every such map projects to a weak map f: P -> Q.  A pair x < y with
    f(x) < f(y) imposes nothing on the (0, 1) coordinates; a collapsed pair
    f(x) = f(y) imposes t_x <= t_y (weak) or t_x < t_y (strict).  So the fibre
    over f is the order cone of K(f), and the total is the sum of cone
    Euler characteristics over f.  Weak maps with K(f) empty are exactly the
    strict maps P -> Q.
    """
    total = 0
    for f in iter_homs(P, Q, HomMode.WEAK):
        total += cone_euler(ConstraintSet.collapsing_pairs(P, f), mode)
    return total

"""Order-preserving maps between finite posets and order polynomials."""

from __future__ import annotations

import enum
from functools import lru_cache
from math import comb
from typing import Iterator

from .polynomial import BinomialPoly
from .poset import FinitePoset, chain


class HomMode(enum.Enum):
    WEAK = "weak"      # x < y  =>  f(x) <= f(y)
    STRICT = "strict"  # x < y  =>  f(x) <  f(y)

    @property
    def opposite(self) -> "HomMode":
        return HomMode.STRICT if self is HomMode.WEAK else HomMode.WEAK


def _target_masks(Q: FinitePoset, mode: HomMode) -> tuple[int, ...]:
    # allowed images of a successor, given the image of a predecessor
    if mode is HomMode.STRICT:
        return Q.up_masks
    return tuple(m | (1 << q) for q, m in enumerate(Q.up_masks))


def _plan(P: FinitePoset):
    order = P.topological_order
    # predecessors of each element, all of which precede it in `order`
    preds = [[i for i in range(P.n) if P.lt[i][p]] for p in order]
    return order, preds


def iter_homs(P: FinitePoset, Q: FinitePoset, mode: HomMode) -> Iterator[tuple[int, ...]]:
    """Yield every map in Hom^mode(P, Q) as a tuple f with f[p] in Q.

    Maps are produced in a fixed deterministic order.
    """
    order, preds = _plan(P)
    allowed = _target_masks(Q, mode)
    full = (1 << Q.n) - 1
    f = [0] * P.n

    def rec(depth: int):
        if depth == P.n:
            yield tuple(f)
            return
        mask = full
        for p in preds[depth]:
            mask &= allowed[f[p]]
        p = order[depth]
        while mask:
            low = mask & -mask
            f[p] = low.bit_length() - 1
            yield from rec(depth + 1)
            mask ^= low

    yield from rec(0)


def count_homs(P: FinitePoset, Q: FinitePoset, mode: HomMode) -> int:
    """#Hom^mode(P, Q), by backtracking over a topological order of P."""
    return _count_homs(P, Q, mode)


@lru_cache(maxsize=None)
def _count_homs(P: FinitePoset, Q: FinitePoset, mode: HomMode) -> int:
    order, preds = _plan(P)
    allowed = _target_masks(Q, mode)
    full = (1 << Q.n) - 1
    f = [0] * P.n
    n = P.n

    def rec(depth: int) -> int:
        if depth == n:
            return 1
        mask = full
        for p in preds[depth]:
            mask &= allowed[f[p]]
        p = order[depth]
        total = 0
        while mask:
            low = mask & -mask
            f[p] = low.bit_length() - 1
            total += rec(depth + 1)
            mask ^= low
        return total

    return rec(0)


def count_surjective_homs_to_chain(P: FinitePoset, k: int, mode: HomMode) -> int:
    """Number of maps in Hom^mode(P, [k]) with full image.

    Inclusion-exclusion over the image: maps into a j-element subset of a
    chain are maps into chain(j).
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if k > P.n:
        return 0
    return sum(
        (-1) ** (k - j) * comb(k, j) * count_homs(P, chain(j), mode) for j in range(k + 1)
    )


def count_surjective_homs_to_chain_bruteforce(P: FinitePoset, k: int, mode: HomMode) -> int:
    """Filter the full enumeration of Hom^mode(P, [k]) by image size."""
    return sum(1 for f in iter_homs(P, chain(k), mode) if len(set(f)) == k)


@lru_cache(maxsize=None)
def order_polynomial(P: FinitePoset, mode: HomMode) -> BinomialPoly:
    """Order polynomial in the binomial basis.

    The coefficient of C(t, k) is the number of surjective mode-homs onto [k].
    The empty poset has order polynomial 1.
    """
    if P.n == 0:
        return BinomialPoly((1,))
    return BinomialPoly((0,) + tuple(
        count_surjective_homs_to_chain(P, k, mode) for k in range(1, P.n + 1)
    ))

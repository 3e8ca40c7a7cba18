from functools import lru_cache
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eulerrecip.corpus import acyclic_pair_sets, poset_family
from eulerrecip.errors import SizeError
from eulerrecip.homspace import HomMode, count_homs, order_polynomial
from eulerrecip.polynomial import eval_int
from eulerrecip.poset import chain, from_relations
from eulerrecip.stratify import (
    ConstraintSet,
    TotalPreorder,
    cone_euler,
    enumerate_total_preorders,
    hom_euler_negated_target,
)

W, S = HomMode.WEAK, HomMode.STRICT


@lru_cache(maxsize=None)
def fubini(n):
    """Ordered set partitions via choosing the first block."""
    if n == 0:
        return 1
    return sum(comb(n, k) * fubini(n - k) for k in range(1, n + 1))


@pytest.mark.parametrize("n", range(8))
def test_preorder_count_is_fubini(n):
    preorders = enumerate_total_preorders(n)
    assert len(preorders) == fubini(n)
    assert len(set(preorders)) == len(preorders)
    assert all(t.n == n for t in preorders)


def test_preorder_examples():
    assert [len(enumerate_total_preorders(n)) for n in range(4)] == [1, 1, 3, 13]
    with pytest.raises(SizeError):
        enumerate_total_preorders(9)


def test_preorder_validation():
    with pytest.raises(ValueError):
        TotalPreorder((frozenset({0}), frozenset({0, 1})))
    with pytest.raises(ValueError):
        TotalPreorder((frozenset({1}),))
    assert TotalPreorder((frozenset({1}), frozenset({0}))).ranks() == (1, 0)


@pytest.mark.parametrize("n", range(7))
def test_empty_constraints_give_open_cube(n):
    X = ConstraintSet(n, frozenset())
    assert cone_euler(X, W) == cone_euler(X, S) == (-1) ** n


def test_cone_examples():
    assert cone_euler(ConstraintSet.of(2, [(0, 1)]), W) == 0
    assert cone_euler(ConstraintSet.of(2, [(0, 1)]), S) == 1
    assert cone_euler(ConstraintSet.of(3, [(0, 1), (1, 2)]), S) == -1


def test_strict_cycle_is_empty():
    assert cone_euler(ConstraintSet.of(2, [(0, 1), (1, 0)]), S) == 0


@pytest.mark.parametrize("n", range(5))
def test_cone_matches_order_polynomial_at_minus_one(n):
    # the cone is Hom(closure(X), (0,1)) and e((0,1)) = -1
    for X in acyclic_pair_sets(n):
        P = from_relations(n, X)
        for mode in HomMode:
            assert cone_euler(ConstraintSet(n, X), mode) == eval_int(order_polynomial(P, mode), -1)


def test_collapsing_pairs():
    f = (0, 0, 1)
    X = ConstraintSet.collapsing_pairs(chain(3), f)
    assert X.pairs == {(0, 1)}


def test_worked_example():
    assert hom_euler_negated_target(chain(2), chain(2), S) == 3
    assert hom_euler_negated_target(chain(2), chain(2), W) == 1


def test_main_identity_small_family():
    fam = poset_family(3)
    for P in fam:
        for Q in fam:
            sign = (-1) ** P.n
            assert hom_euler_negated_target(P, Q, W) == sign * count_homs(P, Q, S)
            assert hom_euler_negated_target(P, Q, S) == sign * count_homs(P, Q, W)


@st.composite
def posets(draw, max_n):
    n = draw(st.integers(0, max_n))
    perm = draw(st.permutations(range(n)))
    forward = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(forward), unique=True)) if forward else []
    return from_relations(n, [(perm[i], perm[j]) for i, j in chosen])


@settings(max_examples=60, deadline=None)
@given(posets(5), posets(4))
def test_main_identity_random(P, Q):
    sign = (-1) ** P.n
    assert hom_euler_negated_target(P, Q, W) == sign * count_homs(P, Q, S)
    assert hom_euler_negated_target(P, Q, S) == sign * count_homs(P, Q, W)

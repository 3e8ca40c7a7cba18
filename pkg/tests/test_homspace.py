from itertools import product
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eulerrecip.corpus import poset_family
from eulerrecip.homspace import (
    HomMode,
    count_homs,
    count_surjective_homs_to_chain,
    count_surjective_homs_to_chain_bruteforce,
    iter_homs,
    order_polynomial,
)
from eulerrecip.polynomial import BinomialPoly, RationalPoly, eval_int, reciprocity_transform, to_monomial
from eulerrecip.poset import antichain, chain, from_relations

W, S = HomMode.WEAK, HomMode.STRICT
V = from_relations(3, [(0, 1), (0, 2)])


def brute_homs(P, Q, mode):
    """Filter all |Q|^|P| maps."""
    out = 0
    for f in product(range(Q.n), repeat=P.n):
        ok = all(
            Q.lt[f[i]][f[j]] or (mode is W and f[i] == f[j])
            for i in range(P.n) for j in range(P.n) if P.lt[i][j]
        )
        out += ok
    return out


def test_count_examples():
    assert count_homs(chain(2), chain(2), S) == 1
    assert count_homs(V, chain(2), W) == 5
    assert brute_homs(V, chain(2), W) == 5


@pytest.mark.parametrize("k", range(4))
@pytest.mark.parametrize("q", range(4))
def test_antichain_source(k, q):
    Q = chain(q)
    assert count_homs(antichain(k), Q, W) == q ** k
    assert count_homs(antichain(k), V, S) == 3 ** k


def test_against_bruteforce_small_family():
    fam = poset_family(3)
    for P in fam:
        for Q in fam:
            for mode in HomMode:
                assert count_homs(P, Q, mode) == brute_homs(P, Q, mode)


def test_iter_homs_matches_count():
    for P in poset_family(3):
        for mode in HomMode:
            maps = list(iter_homs(P, V, mode))
            assert len(maps) == len(set(maps)) == count_homs(P, V, mode)


def test_surjection_examples():
    assert count_surjective_homs_to_chain(chain(2), 2, S) == 1
    assert count_surjective_homs_to_chain(antichain(2), 2, W) == 2
    assert count_surjective_homs_to_chain(V, 4, W) == 0
    with pytest.raises(ValueError):
        count_surjective_homs_to_chain(V, 0, W)


def test_surjection_routes_agree():
    for P in poset_family(4):
        for k in range(1, P.n + 2):
            for mode in HomMode:
                assert count_surjective_homs_to_chain(P, k, mode) == \
                    count_surjective_homs_to_chain_bruteforce(P, k, mode)


def test_order_polynomial_examples():
    assert to_monomial(order_polynomial(antichain(2), W)) == RationalPoly.monomial(2)
    # interpolation oracle: counts at n=1..4 are 0,1,3,6 and 1,3,6,10
    assert [count_homs(chain(2), chain(n), S) for n in range(1, 5)] == [0, 1, 3, 6]
    assert [count_homs(chain(2), chain(n), W) for n in range(1, 5)] == [1, 3, 6, 10]
    assert order_polynomial(chain(2), S) == BinomialPoly((0, 0, 1))
    assert to_monomial(order_polynomial(chain(2), W)) == RationalPoly((0, 0.5, 0.5))


def test_empty_poset():
    E = antichain(0)
    assert order_polynomial(E, W) == BinomialPoly((1,))
    assert count_homs(E, chain(3), S) == 1
    assert count_homs(E, chain(0), W) == 1


def test_reciprocity_family_up_to_four():
    for P in poset_family(4):
        strict = to_monomial(order_polynomial(P, S))
        weak = to_monomial(order_polynomial(P, W))
        assert strict == reciprocity_transform(weak, P.n)


@pytest.mark.parametrize("P", poset_family(4))
def test_polynomial_matches_counts(P):
    for mode in HomMode:
        poly = order_polynomial(P, mode)
        for n in range(1, 7):
            assert eval_int(poly, n) == count_homs(P, chain(n), mode)
            assert count_homs(P, chain(n), S) <= count_homs(P, chain(n), W)
            # the empty poset contributes the single empty map at k = 0
            assert count_homs(P, chain(n), mode) == (P.n == 0) + sum(
                count_surjective_homs_to_chain(P, k, mode) * comb(n, k) for k in range(1, P.n + 1)
            )


@st.composite
def random_posets(draw):
    n = draw(st.integers(0, 6))
    perm = draw(st.permutations(range(n)))
    forward = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(forward), unique=True)) if forward else []
    return from_relations(n, [(perm[i], perm[j]) for i, j in chosen])


@settings(max_examples=40, deadline=None)
@given(random_posets(), random_posets())
def test_strict_never_exceeds_weak(P, Q):
    assert count_homs(P, Q, S) <= count_homs(P, Q, W)


@settings(max_examples=40, deadline=None)
@given(random_posets())
def test_reciprocity_random_labelled(P):
    assert to_monomial(order_polynomial(P, S)) == reciprocity_transform(
        to_monomial(order_polynomial(P, W)), P.n
    )

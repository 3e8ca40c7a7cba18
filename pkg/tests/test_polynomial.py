from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from eulerrecip.polynomial import (
    BinomialPoly,
    RationalPoly,
    eval_int,
    from_monomial,
    parse_poly,
    reciprocity_transform,
    to_monomial,
)

binomial_polys = st.lists(st.integers(-50, 50), max_size=8).map(lambda c: BinomialPoly(tuple(c)))
rational_polys = st.lists(
    st.fractions(max_denominator=12).filter(lambda f: abs(f) < 100), max_size=7
).map(RationalPoly)


def test_to_monomial_examples():
    assert to_monomial(BinomialPoly((0, 1))) == RationalPoly((0, 1))
    assert to_monomial(BinomialPoly((0, 0, 1))) == RationalPoly((0, Fraction(-1, 2), Fraction(1, 2)))
    assert to_monomial(BinomialPoly((0, 2, 1))) == RationalPoly((0, Fraction(3, 2), Fraction(1, 2)))


def test_eval_examples():
    assert eval_int(BinomialPoly((0, 0, 1)), -1) == 1
    assert eval_int(RationalPoly.from_roots([0, 1, 2]), 3) == 6
    assert eval_int(BinomialPoly((0, 0, 1)), 4) == 6


def test_reciprocity_transform_examples():
    assert reciprocity_transform(RationalPoly((0, 0, 1)), 2) == RationalPoly((0, 0, 1))
    half = Fraction(1, 2)
    assert reciprocity_transform(RationalPoly((0, half, half)), 2) == RationalPoly((0, -half, half))
    assert reciprocity_transform(RationalPoly((0, 1)), 1) == RationalPoly((0, 1))
    with pytest.raises(ValueError):
        reciprocity_transform(RationalPoly((1,)), -1)


def test_canonical_zero():
    assert BinomialPoly((0, 0, 0)).coeffs == ()
    assert RationalPoly((0,)).is_zero()
    assert str(BinomialPoly()) == "binom:[]"


def test_binomial_rejects_non_integers():
    with pytest.raises(TypeError):
        BinomialPoly((Fraction(1, 2),))


@given(binomial_polys)
def test_round_trip(p):
    assert from_monomial(to_monomial(p)) == p


@given(binomial_polys, st.integers(-10, 10))
def test_eval_agrees_across_bases(p, t):
    value = eval_int(p, t)
    assert isinstance(value, int)
    assert value == eval_int(to_monomial(p), t)
    assert value == eval_int(p, Fraction(t))


@given(binomial_polys)
def test_degree_preserved(p):
    assert to_monomial(p).degree == p.degree


@given(rational_polys, st.integers(0, 6))
def test_reciprocity_involution(p, n):
    assert reciprocity_transform(reciprocity_transform(p, n), n) == p


@given(rational_polys, st.integers(0, 6), st.integers(-5, 5))
def test_reciprocity_pointwise(p, n, t):
    assert eval_int(reciprocity_transform(p, n), t) == (-1) ** n * eval_int(p, -t)


@given(rational_polys)
def test_serialization_round_trip(p):
    assert parse_poly(str(p)) == p


@given(binomial_polys)
def test_binomial_serialization_round_trip(p):
    assert parse_poly(str(p)) == p


def test_serialized_form():
    assert str(to_monomial(BinomialPoly((0, 0, 1)))) == "poly:[0,-1/2,1/2]"
    assert parse_poly("poly:[1, -3/4]") == RationalPoly((1, Fraction(-3, 4)))
    with pytest.raises(ValueError):
        parse_poly("quux:[1]")


def test_from_monomial_rejects_non_integer_valued():
    with pytest.raises(ValueError):
        from_monomial(RationalPoly((0, Fraction(1, 3))))


def test_arithmetic():
    t = RationalPoly((0, 1))
    assert (t - RationalPoly.constant(1)) * (t + RationalPoly.constant(1)) == RationalPoly((-1, 0, 1))
    assert t ** 3 == RationalPoly.monomial(3)
    assert RationalPoly.from_roots([0, 1, 2]).pretty() == "t^3 - 3*t^2 + 2*t"

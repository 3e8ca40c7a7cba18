"""Exact univariate polynomials in the binomial and monomial bases.

``BinomialPoly`` stores integer coefficients against C(t, k); ``RationalPoly``
stores :class:`fractions.Fraction` coefficients against t**k.  Both are
immutable and canonical (no trailing zeros; the zero polynomial has no
coefficients).

Text form::

    binom:[0,0,1]
    poly:[0,-1/2,1/2]
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Sequence, Union

Number = Union[int, Fraction]


def _trim(coeffs: Sequence) -> tuple:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def falling_factorial(x: Number, k: int) -> Number:
    """x (x-1) ... (x-k+1); the empty product is 1."""
    out: Number = 1
    for i in range(k):
        out *= x - i
    return out


def binomial(x: Number, k: int) -> Number:
    """Generalized binomial coefficient C(x, k) for any rational x."""
    if k < 0:
        return 0
    value = Fraction(falling_factorial(x, k), factorial(k))
    return int(value) if value.denominator == 1 else value


@dataclass(frozen=True)
class BinomialPoly:
    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        coeffs = _trim(self.coeffs)
        for c in coeffs:
            if not isinstance(c, int) or isinstance(c, bool):
                raise TypeError(f"binomial coefficients must be int, got {c!r}")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, t: Number) -> Number:
        return eval_int(self, t)

    def __str__(self) -> str:
        return "binom:[" + ",".join(str(c) for c in self.coeffs) + "]"


@dataclass(frozen=True)
class RationalPoly:
    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self):
        object.__setattr__(
            self, "coeffs", _trim(Fraction(c) for c in self.coeffs)
        )

    @classmethod
    def monomial(cls, k: int, c: Number = 1) -> "RationalPoly":
        return cls((0,) * k + (c,))

    @classmethod
    def constant(cls, c: Number) -> "RationalPoly":
        return cls((c,))

    @classmethod
    def from_roots(cls, roots: Iterable[Number]) -> "RationalPoly":
        """Monic polynomial prod (t - r)."""
        out = cls.constant(1)
        for r in roots:
            out = out * cls((-r, 1))
        return out

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def has_integer_coeffs(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def __call__(self, t: Number) -> Number:
        return eval_int(self, t)

    def __add__(self, other: "RationalPoly") -> "RationalPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return RationalPoly(x + y for x, y in zip(a, b))

    def __neg__(self) -> "RationalPoly":
        return RationalPoly(-c for c in self.coeffs)

    def __sub__(self, other: "RationalPoly") -> "RationalPoly":
        return self + (-other)

    def __mul__(self, other: Union["RationalPoly", Number]) -> "RationalPoly":
        if not isinstance(other, RationalPoly):
            return RationalPoly(c * other for c in self.coeffs)
        if self.is_zero() or other.is_zero():
            return RationalPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return RationalPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "RationalPoly":
        out = RationalPoly.constant(1)
        for _ in range(k):
            out = out * self
        return out

    def __str__(self) -> str:
        return "poly:[" + ",".join(_fmt_fraction(c) for c in self.coeffs) + "]"

    def pretty(self, var: str = "t") -> str:
        """Human-readable form, highest degree first."""
        if self.is_zero():
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = _fmt_fraction(mag)
            else:
                mono = var if k == 1 else f"{var}^{k}"
                body = mono if mag == 1 else f"{_fmt_fraction(mag)}*{mono}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def _fmt_fraction(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def to_monomial(p: BinomialPoly) -> RationalPoly:
    out = RationalPoly()
    for k, a in enumerate(p.coeffs):
        if a:
            # C(t, k) = t (t-1) ... (t-k+1) / k!
            out = out + RationalPoly.from_roots(range(k)) * Fraction(a, factorial(k))
    return out


def from_monomial(p: RationalPoly) -> BinomialPoly:
    """Inverse of :func:`to_monomial`.

    Uses Newton's forward differences at 0: a_k = sum_j (-1)^(k-j) C(k, j) p(j).
    Raises ValueError if ``p`` is not integer-valued on the integers.
    """
    values = [p(j) for j in range(len(p.coeffs))]
    coeffs = []
    for k in range(len(values)):
        a = sum((-1) ** (k - j) * comb(k, j) * values[j] for j in range(k + 1))
        a = Fraction(a)
        if a.denominator != 1:
            raise ValueError(f"{p} is not integer-valued")
        coeffs.append(int(a))
    return BinomialPoly(tuple(coeffs))


def eval_int(p: Union[RationalPoly, BinomialPoly], t: Number) -> Number:
    """Exact evaluation. Integer results are returned as ``int``."""
    if isinstance(p, BinomialPoly) and isinstance(t, int):
        # C(t, k) = C(t, k-1) * (t - k + 1) / k, exact in integers
        total, c = 0, 1
        for k, a in enumerate(p.coeffs):
            if k:
                c = c * (t - k + 1) // k
            total += a * c
        return total
    if isinstance(p, BinomialPoly):
        value = sum((a * binomial(t, k) for k, a in enumerate(p.coeffs)), Fraction(0))
    else:
        value = Fraction(0)
        for c in reversed(p.coeffs):
            value = value * t + c
    value = Fraction(value)
    return int(value) if value.denominator == 1 else value


def reciprocity_transform(p: RationalPoly, n: int) -> RationalPoly:
    """Return (-1)^n p(-t)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return RationalPoly(c if (n + k) % 2 == 0 else -c for k, c in enumerate(p.coeffs))


_SERIAL = re.compile(r"^\s*(binom|poly)\s*:\s*\[(.*)\]\s*$")


def parse_poly(text: str) -> Union[BinomialPoly, RationalPoly]:
    """Parse ``binom:[...]`` or ``poly:[...]``."""
    m = _SERIAL.match(text)
    if not m:
        raise ValueError(f"not a serialized polynomial: {text!r}")
    kind, body = m.groups()
    items = [s.strip() for s in body.split(",")] if body.strip() else []
    if kind == "binom":
        return BinomialPoly(tuple(int(s) for s in items))
    return RationalPoly(Fraction(s) for s in items)

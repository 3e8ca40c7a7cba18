"""Euler characteristics of cell-built sets and semialgebraic total orders.

Sets are symbolic expression trees over open cells and finite point sets.
The Euler characteristic is evaluated on the tree with
e(cell d) = (-1)^d, e(m points) = m, additivity over disjoint unions and
multiplicativity over products.  ``Negation(X)`` stands for X x (0, 1).

Grammar accepted by :func:`parse_tame`::

    cell(d)  pts(m)  U(e1, e2, ...)  X(e1, e2, ...)  neg(e)

A total order is written over the alphabet ``p`` (point) and ``o`` (open
interval), left to right in increasing order; ``"pop"`` is [0, 1].
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Union

from .homspace import HomMode, count_surjective_homs_to_chain, order_polynomial
from .polynomial import eval_int, falling_factorial
from .poset import FinitePoset


# -- tame sets ---------------------------------------------------------------

@dataclass(frozen=True)
class OpenCell:
    dim: int

    def __post_init__(self):
        if self.dim < 0:
            raise ValueError("cell dimension must be nonnegative")

    def __str__(self):
        return f"cell({self.dim})"


@dataclass(frozen=True)
class FinitePoints:
    count: int

    def __post_init__(self):
        if self.count < 0:
            raise ValueError("point count must be nonnegative")

    def __str__(self):
        return f"pts({self.count})"


@dataclass(frozen=True)
class DisjointUnion:
    children: tuple

    def __str__(self):
        return "U(" + ",".join(map(str, self.children)) + ")"


@dataclass(frozen=True)
class Product:
    children: tuple

    def __str__(self):
        return "X(" + ",".join(map(str, self.children)) + ")"


@dataclass(frozen=True)
class Negation:
    child: "TameSet"

    def __str__(self):
        return f"neg({self.child})"


TameSet = Union[OpenCell, FinitePoints, DisjointUnion, Product, Negation]


def euler_char(X: TameSet) -> int:
    if isinstance(X, OpenCell):
        return (-1) ** X.dim
    if isinstance(X, FinitePoints):
        return X.count
    if isinstance(X, DisjointUnion):
        return sum(euler_char(c) for c in X.children)
    if isinstance(X, Product):
        out = 1
        for c in X.children:
            out *= euler_char(c)
        return out
    if isinstance(X, Negation):
        return euler_char(Product((X.child, OpenCell(1))))
    raise TypeError(f"not a tame set: {X!r}")


_TOKEN = re.compile(r"\s*(?:(cell|pts|U|X|neg)\s*\(|(\d+)|(,)|(\)))")


def parse_tame(text: str) -> TameSet:
    """Parse the tame-set grammar; raises ValueError with a column on error."""
    pos = 0

    def fail(msg):
        raise ValueError(f"{msg} at column {pos + 1} in {text!r}")

    def token():
        nonlocal pos
        m = _TOKEN.match(text, pos)
        if not m:
            fail("unexpected input")
        pos = m.end()
        return m

    def expect_close():
        m = token()
        if not m.group(4):
            fail("expected ')'")

    def expr():
        m = token()
        head = m.group(1)
        if head is None:
            fail("expected cell(, pts(, U(, X( or neg(")
        if head in ("cell", "pts"):
            num = token()
            if num.group(2) is None:
                fail("expected a nonnegative integer")
            expect_close()
            k = int(num.group(2))
            return OpenCell(k) if head == "cell" else FinitePoints(k)
        if head == "neg":
            child = expr()
            expect_close()
            return Negation(child)
        children = [expr()]
        while True:
            m = token()
            if m.group(3):
                children.append(expr())
            elif m.group(4):
                break
            else:
                fail("expected ',' or ')'")
        return (DisjointUnion if head == "U" else Product)(tuple(children))

    result = expr()
    if text[pos:].strip():
        fail("trailing input")
    return result


# -- semialgebraic total orders ----------------------------------------------

class Piece(enum.Enum):
    POINT = "p"
    OPEN_INTERVAL = "o"


@dataclass(frozen=True)
class SemialgTotalOrder:
    pieces: tuple[Piece, ...] = ()

    @classmethod
    def parse(cls, text: str) -> "SemialgTotalOrder":
        text = text.strip()
        bad = [c for c in text if c not in "po"]
        if bad:
            raise ValueError(f"total order string may only use 'p' and 'o', got {bad[0]!r}")
        return cls(tuple(Piece(c) for c in text))

    @classmethod
    def finite_chain(cls, n: int) -> "SemialgTotalOrder":
        return cls((Piece.POINT,) * n)

    def is_finite(self) -> bool:
        return all(p is Piece.POINT for p in self.pieces)

    def __str__(self):
        return "".join(p.value for p in self.pieces)


def total_order_euler(T: SemialgTotalOrder) -> int:
    points = sum(1 for p in T.pieces if p is Piece.POINT)
    return points - (len(T.pieces) - points)


def negate_total_order(T: SemialgTotalOrder) -> SemialgTotalOrder:
    """T x (0, 1) with the lexicographic order, up to Euler characteristic.

    A point times (0, 1) is an open interval.  An open interval times (0, 1)
    is the lexicographic open square, which is not a finite union of points
    and intervals of the line; it is recorded by the Euler-equivalent pieces
    ``pop`` (Euler characteristic +1, the same as the open square).
    """
    out: list[Piece] = []
    for piece in T.pieces:
        if piece is Piece.POINT:
            out.append(Piece.OPEN_INTERVAL)
        else:
            out.extend((Piece.POINT, Piece.OPEN_INTERVAL, Piece.POINT))
    return SemialgTotalOrder(tuple(out))


def normalize(T: SemialgTotalOrder) -> SemialgTotalOrder:
    """Merge every run ``o p o`` into a single ``o`` (same realization)."""
    pieces = list(T.pieces)
    changed = True
    while changed:
        changed = False
        for i in range(len(pieces) - 2):
            if pieces[i : i + 3] == [Piece.OPEN_INTERVAL, Piece.POINT, Piece.OPEN_INTERVAL]:
                pieces[i : i + 3] = [Piece.OPEN_INTERVAL]
                changed = True
                break
    return SemialgTotalOrder(tuple(pieces))


# -- hom spaces into total orders --------------------------------------------

def hom_euler_total_order(P: FinitePoset, T: SemialgTotalOrder, mode: HomMode) -> int:
    """e(Hom^mode(P, T)) as the order polynomial evaluated at e(T)."""
    return eval_int(order_polynomial(P, mode), total_order_euler(T))


def hom_euler_total_order_by_images(P: FinitePoset, T: SemialgTotalOrder, mode: HomMode) -> int:
    """Second route: split each map by the size k of its image.

    Sum over k of (#surjections P -> [k]) * e(Hom^<([k], T)), where the
    strict-chain factor is e(C_k(T)) / k!.
    """
    e = total_order_euler(T)
    if P.n == 0:
        return 1
    total = Fraction(0)
    for k in range(1, P.n + 1):
        total += count_surjective_homs_to_chain(P, k, mode) * Fraction(
            config_space_euler(k, e), factorial(k)
        )
    assert total.denominator == 1
    return int(total)


def config_space_euler(n: int, eX: int) -> int:
    """Euler characteristic of the ordered configuration space of n points."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return falling_factorial(eX, n)

"""Exact order, chromatic and flow polynomials and their Euler-characteristic reciprocities."""

from .errors import BudgetError, SizeError
from .homspace import HomMode, count_homs, order_polynomial
from .polynomial import BinomialPoly, RationalPoly
from .poset import CycleError, FinitePoset, antichain, chain, from_relations

__all__ = [
    "BinomialPoly",
    "BudgetError",
    "CycleError",
    "FinitePoset",
    "HomMode",
    "RationalPoly",
    "SizeError",
    "antichain",
    "chain",
    "count_homs",
    "from_relations",
    "order_polynomial",
]

"""Exceptions shared across modules."""


class SizeError(ValueError):
    """Input exceeds an enumeration bound."""


class BudgetError(RuntimeError):
    """Brute-force enumeration would exceed its work budget."""

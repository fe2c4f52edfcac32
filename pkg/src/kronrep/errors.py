"""Exception hierarchy shared by every kronrep module."""


class KronrepError(Exception):
    """Base class for all kronrep errors."""


class DomainError(KronrepError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class UnsupportedIndexError(DomainError):
    """The operation is undefined for this number of arrows."""


class FieldMismatchError(DomainError):
    """Two modules live over different fields or different quivers."""


class ArithmeticRangeError(KronrepError, ArithmeticError):
    """Input is not an exact integer and cannot be handled without loss."""


class BudgetExceededError(KronrepError):
    """An exhaustive search was asked to go past its configured budget."""

    def __init__(self, requested: int, budget: int):
        self.requested = requested
        self.budget = budget
        super().__init__(
            f"total dimension {requested} exceeds enumeration budget {budget} "
            f"(raise --budget or KRONREP_BUDGET)"
        )

"""Exception hierarchy shared by every module."""

from __future__ import annotations


class HPolyError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(HPolyError, ValueError):
    """An argument is outside the domain of the operation."""


class GraphFormatError(DomainError):
    """A graph6 or edge-list record could not be parsed."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


class DivisibilityError(HPolyError, ArithmeticError):
    """Exact polynomial division left a nonzero remainder."""

    def __init__(self, remainder):
        super().__init__(f"division is not exact; remainder {remainder}")
        self.remainder = remainder


class NotATreeError(DomainError):
    """A polynomial is not the pairs polynomial of any tree."""


class BudgetExceeded(HPolyError):
    """An exponential search ran past its configured limit."""

    def __init__(self, what: str, limit: int):
        super().__init__(f"{what} budget of {limit} exceeded")
        self.what = what
        self.limit = limit

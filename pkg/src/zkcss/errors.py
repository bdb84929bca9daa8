"""Exception types shared across the package."""

from __future__ import annotations


class BudgetExceededError(RuntimeError):
    """An exhaustive computation would exceed its enumeration budget.

    ``lower_bound`` is set when a distance search was interrupted: every
    weight below it has been ruled out, so it is a certified lower bound.
    """

    def __init__(self, message: str, *, lower_bound: int | None = None):
        super().__init__(message)
        self.lower_bound = lower_bound


class DegenerateCodeError(ValueError):
    """A quantity is undefined because a search set is empty."""


class OrthogonalityError(ValueError):
    """Two dual codes fail to be orthogonal; ``witness`` is an offending pair."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class FormatError(ValueError):
    def __init__(self, message: str, lineno: int | None = None):
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
        self.lineno = lineno

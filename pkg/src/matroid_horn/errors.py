"""Exception types and the shared enumeration budget."""

from __future__ import annotations

import math

# log2 of the largest search space / output an exponential routine may touch
DEFAULT_BUDGET = 24

_budget = DEFAULT_BUDGET


class MatroidHornError(ValueError):
    """Base class for every error raised by this package."""


class BudgetExceeded(MatroidHornError):
    pass


class EmptyHyperedge(MatroidHornError):
    pass


class NotSperner(MatroidHornError):
    pass


class BadParams(MatroidHornError):
    pass


class BadInput(MatroidHornError):
    pass


class BadResidue(BadParams):
    pass


class SubsetViolation(MatroidHornError):
    pass


class NotSimpleBinary(MatroidHornError):
    pass


class NotCoveringSystem(MatroidHornError):
    pass


class NonUniformFamily(MatroidHornError):
    pass


class InvalidInput(MatroidHornError):
    pass


class MethodMismatch(MatroidHornError):
    pass


class ParseError(MatroidHornError):
    """Malformed text input; ``line`` is the 1-based offending line."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


def get_budget() -> int:
    return _budget


def set_budget(log2_states: int) -> int:
    """Set the global budget (log2 of states); returns the previous value."""
    global _budget
    if log2_states < 1:
        raise BadParams("budget must be a positive log2 count")
    previous, _budget = _budget, int(log2_states)
    return previous


def check_budget(states: float, what: str, budget: int | None = None) -> None:
    """Raise BudgetExceeded when ``states`` exceeds 2**budget."""
    limit = _budget if budget is None else budget
    if states > 2**limit:
        raise BudgetExceeded(
            f"{what}: {states:.0f} states exceeds budget 2^{limit}"
            f" (~2^{math.log2(max(states, 1)):.1f})"
        )

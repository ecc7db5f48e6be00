"""Exception hierarchy."""

from __future__ import annotations


class Ef1Error(Exception):
    """Base class for all library errors."""


class InstanceError(Ef1Error, ValueError):
    pass


class AllocationError(Ef1Error, ValueError):
    pass


class MoveError(Ef1Error, ValueError):
    pass


class PreconditionError(Ef1Error, ValueError):
    """An algorithm was called outside the class it is defined for."""


class PlacementError(PreconditionError):
    pass


class BudgetExhaustedError(Ef1Error, RuntimeError):
    def __init__(self, message: str, *, explored: int = 0) -> None:
        super().__init__(message)
        self.explored = explored


class TheoremViolationError(Ef1Error, RuntimeError):
    """A constructive step found no move that the underlying proof guarantees."""


__all__ = [
    "AllocationError",
    "BudgetExhaustedError",
    "Ef1Error",
    "InstanceError",
    "MoveError",
    "PlacementError",
    "PreconditionError",
    "TheoremViolationError",
]

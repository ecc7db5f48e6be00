"""Core models: instances, allocations, moves and the EF1 predicate."""

from .allocation import Allocation, canonical_key, check_shape
from .ef1 import ef1_violations, is_ef1, owners_are_ef1, replay_moves
from .errors import (
    AllocationError,
    BudgetExhaustedError,
    Ef1Error,
    InstanceError,
    MoveError,
    PlacementError,
    PreconditionError,
    TheoremViolationError,
)
from .instance import Instance, normalize_instance
from .moves import Exchange, Move, MoveSet, Transfer, apply_move, move_from_dict

__all__ = [
    "Allocation",
    "AllocationError",
    "BudgetExhaustedError",
    "Ef1Error",
    "Exchange",
    "Instance",
    "InstanceError",
    "Move",
    "MoveError",
    "MoveSet",
    "PlacementError",
    "PreconditionError",
    "TheoremViolationError",
    "Transfer",
    "apply_move",
    "canonical_key",
    "check_shape",
    "ef1_violations",
    "is_ef1",
    "move_from_dict",
    "normalize_instance",
    "owners_are_ef1",
    "replay_moves",
]

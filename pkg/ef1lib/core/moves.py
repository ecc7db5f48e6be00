"""Exchange and transfer moves."""

from __future__ import annotations

import sys
from dataclasses import dataclass
from enum import Enum
from typing import Any, ClassVar

from .allocation import Allocation
from .errors import MoveError
from .instance import Instance

if sys.version_info >= (3, 11):
    from enum import StrEnum
else:  # pragma: no cover - Python 3.10 fallback mirroring enum.StrEnum

    class StrEnum(str, Enum):
        __str__ = str.__str__
        __format__ = str.__format__


class MoveSet(StrEnum):
    EXCHANGE_ONLY = "exchange"
    TRANSFER_ONLY = "transfer"
    EXCHANGE_AND_TRANSFER = "both"

    @property
    def exchanges(self) -> bool:
        return self is not MoveSet.TRANSFER_ONLY

    @property
    def transfers(self) -> bool:
        return self is not MoveSet.EXCHANGE_ONLY


@dataclass(frozen=True)
class Exchange:
    """Agent i gives good g to agent j and receives good h in return."""

    i: int
    j: int
    g: int
    h: int
    kind: ClassVar[str] = "exchange"

    def __post_init__(self) -> None:
        if self.i == self.j:
            raise MoveError(f"an exchange needs two agents, got {self.i} twice")
        if self.g == self.h:
            raise MoveError(f"an exchange needs two goods, got {self.g} twice")

    def apply(self, owners: list[int]) -> None:
        owners[self.g] = self.j
        owners[self.h] = self.i

    def to_dict(self, inst: Instance) -> dict[str, Any]:
        return {
            "kind": self.kind,
            "i": self.i + 1,
            "j": self.j + 1,
            "g": inst.goods[self.g],
            "h": inst.goods[self.h],
        }


@dataclass(frozen=True)
class Transfer:
    """Agent i hands good g to agent j."""

    i: int
    j: int
    g: int
    kind: ClassVar[str] = "transfer"

    def __post_init__(self) -> None:
        if self.i == self.j:
            raise MoveError(f"a transfer needs two agents, got {self.i} twice")

    def apply(self, owners: list[int]) -> None:
        owners[self.g] = self.j

    def to_dict(self, inst: Instance) -> dict[str, Any]:
        return {
            "kind": self.kind,
            "i": self.i + 1,
            "j": self.j + 1,
            "g": inst.goods[self.g],
            "h": None,
        }


Move = Exchange | Transfer


def apply_move(alloc: Allocation, move: Move) -> Allocation:
    owners = list(alloc.owners)
    _check_holder(owners, move.i, move.g)
    if isinstance(move, Exchange):
        _check_holder(owners, move.j, move.h)
    if not 0 <= move.j < alloc.n:
        raise MoveError(f"agent {move.j + 1} does not exist")
    move.apply(owners)
    return Allocation.from_owners(owners, alloc.n)


def move_from_dict(inst: Instance, data: dict[str, Any]) -> Move:
    i = int(data["i"]) - 1
    j = int(data["j"]) - 1
    g = inst.index_of(data["g"])
    if data.get("kind", "exchange") == "transfer":
        return Transfer(i, j, g)
    return Exchange(i, j, g, inst.index_of(data["h"]))


def _check_holder(owners: list[int], agent: int, good: int) -> None:
    if not 0 <= good < len(owners):
        raise MoveError(f"good index {good} out of range")
    if owners[good] != agent:
        raise MoveError(
            f"good index {good} is held by agent {owners[good] + 1}, "
            f"not agent {agent + 1}"
        )


__all__ = [
    "Exchange",
    "Move",
    "MoveSet",
    "Transfer",
    "apply_move",
    "move_from_dict",
]

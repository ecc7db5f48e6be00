"""Search budgets and result records."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Literal

from ef1lib.core import Instance, Move

PathStatus = Literal["found", "not_found", "budget_exhausted"]


@dataclass(frozen=True)
class SearchBudget:
    max_states: int = 2_000_000
    max_path_len: int | None = None

    def __post_init__(self) -> None:
        if self.max_states < 1:
            raise ValueError("max_states must be at least 1")
        if self.max_path_len is not None and self.max_path_len < 1:
            raise ValueError("max_path_len must be positive when provided")


@dataclass(frozen=True)
class PathResult:
    status: PathStatus
    path: tuple[Move, ...] = ()
    explored: int = 0

    @classmethod
    def found(cls, path: list[Move] | tuple[Move, ...], explored: int) -> PathResult:
        return cls("found", tuple(path), explored)

    @classmethod
    def not_found(cls, explored: int) -> PathResult:
        return cls("not_found", (), explored)

    @classmethod
    def budget_exhausted(cls, explored: int) -> PathResult:
        return cls("budget_exhausted", (), explored)

    @property
    def is_found(self) -> bool:
        return self.status == "found"

    @property
    def length(self) -> int | None:
        return len(self.path) if self.is_found else None

    def to_dict(self, inst: Instance) -> dict[str, Any]:
        return {
            "verdict": self.status,
            "length": self.length,
            "path": [move.to_dict(inst) for move in self.path],
            "stats": {"explored": self.explored},
        }


@dataclass(frozen=True)
class ConnectivityReport:
    connected: bool
    component_sizes: tuple[int, ...] = field(default_factory=tuple)
    states: int = 0
    size_classes: int = 1

    def to_dict(self) -> dict[str, Any]:
        return {
            "connected": self.connected,
            "components": len(self.component_sizes),
            "component_sizes": list(self.component_sizes),
            "states": self.states,
            "size_classes": self.size_classes,
        }


__all__ = ["ConnectivityReport", "PathResult", "PathStatus", "SearchBudget"]

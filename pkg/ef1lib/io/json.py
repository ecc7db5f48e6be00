"""JSON import/export helpers for instances, allocations and paths."""

from __future__ import annotations

import json
from collections.abc import Sequence
from pathlib import Path
from typing import Any

from ef1lib.core import Allocation, Instance, Move, move_from_dict
from ef1lib.io.schema import (
    validate_allocation_payload,
    validate_instance_payload,
    validate_path_payload,
)


def _dumps(payload: dict[str, Any], indent: int) -> str:
    return json.dumps(payload, indent=indent, sort_keys=True)


def dumps_instance(inst: Instance, *, indent: int = 2) -> str:
    return _dumps(inst.to_dict(), indent)


def loads_instance(data: str, *, validate: bool = True) -> Instance:
    payload: dict[str, Any] = json.loads(data)
    if validate:
        validate_instance_payload(payload)
    return Instance.from_dict(payload)


def save_instance(path: str | Path, inst: Instance, *, indent: int = 2) -> None:
    Path(path).write_text(dumps_instance(inst, indent=indent), encoding="utf-8")


def load_instance(path: str | Path, *, validate: bool = True) -> Instance:
    return loads_instance(Path(path).read_text(encoding="utf-8"), validate=validate)


def dumps_allocation(inst: Instance, alloc: Allocation, *, indent: int = 2) -> str:
    return _dumps(alloc.to_dict(inst), indent)


def loads_allocation(inst: Instance, data: str, *, validate: bool = True) -> Allocation:
    payload: dict[str, Any] = json.loads(data)
    if validate:
        validate_allocation_payload(payload, list(inst.goods))
    return Allocation.from_names(inst, payload["bundles"])


def save_allocation(
    path: str | Path, inst: Instance, alloc: Allocation, *, indent: int = 2
) -> None:
    text = dumps_allocation(inst, alloc, indent=indent)
    Path(path).write_text(text, encoding="utf-8")


def load_allocation(
    inst: Instance, path: str | Path, *, validate: bool = True
) -> Allocation:
    text = Path(path).read_text(encoding="utf-8")
    return loads_allocation(inst, text, validate=validate)


def path_to_dict(
    inst: Instance,
    moves: Sequence[Move],
    *,
    verdict: str = "found",
    stats: dict[str, Any] | None = None,
) -> dict[str, Any]:
    return {
        "verdict": verdict,
        "length": len(moves) if verdict == "found" else None,
        "path": [move.to_dict(inst) for move in moves],
        "stats": dict(stats or {}),
    }


def path_from_dict(
    inst: Instance, data: dict[str, Any], *, validate: bool = True
) -> list[Move]:
    if validate:
        validate_path_payload(data)
    return [move_from_dict(inst, move) for move in data["path"]]


def load_path(inst: Instance, path: str | Path, *, validate: bool = True) -> list[Move]:
    payload: dict[str, Any] = json.loads(Path(path).read_text(encoding="utf-8"))
    return path_from_dict(inst, payload, validate=validate)


__all__ = [
    "dumps_allocation",
    "dumps_instance",
    "load_allocation",
    "load_instance",
    "load_path",
    "loads_allocation",
    "loads_instance",
    "path_from_dict",
    "path_to_dict",
    "save_allocation",
    "save_instance",
]

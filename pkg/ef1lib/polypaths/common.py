"""Shared precondition checks and bookkeeping for constructive paths."""

from __future__ import annotations

from collections.abc import MutableMapping

from ef1lib.core import (
    Allocation,
    Instance,
    PreconditionError,
    check_shape,
    owners_are_ef1,
)

Stats = MutableMapping[str, int]


def require_ef1_endpoints(
    inst: Instance,
    source: Allocation,
    target: Allocation,
    *,
    equal_sizes: bool = True,
) -> None:
    check_shape(inst, source)
    check_shape(inst, target)
    if equal_sizes and source.sizes != target.sizes:
        raise PreconditionError(
            f"bundle sizes differ: {source.sizes} vs {target.sizes}"
        )
    if not owners_are_ef1(inst, source.owners):
        raise PreconditionError("source allocation is not EF1")
    if not owners_are_ef1(inst, target.owners):
        raise PreconditionError("target allocation is not EF1")


def record(stats: Stats | None, *, steps: int, checks: int) -> None:
    if stats is None:
        return
    stats["steps"] = stats.get("steps", 0) + steps
    stats["checks"] = stats.get("checks", 0) + checks


__all__ = ["Stats", "record", "require_ef1_endpoints"]

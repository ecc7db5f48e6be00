"""Envy-freeness up to one good."""

from __future__ import annotations

from collections.abc import Iterable, Sequence

from .allocation import Allocation, check_shape
from .errors import TheoremViolationError
from .instance import Instance
from .moves import Move, apply_move


def is_ef1(inst: Instance, alloc: Allocation) -> bool:
    check_shape(inst, alloc)
    return owners_are_ef1(inst, alloc.owners)


def ef1_violations(inst: Instance, alloc: Allocation) -> list[tuple[int, int]]:
    """Ordered pairs (i, j) where agent i envies agent j beyond one good."""
    check_shape(inst, alloc)
    violations: list[tuple[int, int]] = []
    for i in range(inst.n):
        totals, best = _bundle_totals(inst.utilities[i], alloc.owners, inst.n)
        own = totals[i]
        for j in range(inst.n):
            if j != i and own < totals[j] - best[j]:
                violations.append((i, j))
    return violations


def owners_are_ef1(inst: Instance, owners: Sequence[int]) -> bool:
    n = inst.n
    for i in range(n):
        totals, best = _bundle_totals(inst.utilities[i], owners, n)
        own = totals[i]
        for j in range(n):
            if j != i and own < totals[j] - best[j]:
                return False
    return True


def _bundle_totals(
    row: Sequence[int], owners: Sequence[int], n: int
) -> tuple[list[int], list[int]]:
    totals = [0] * n
    best = [0] * n
    for g, owner in enumerate(owners):
        value = row[g]
        totals[owner] += value
        if value > best[owner]:
            best[owner] = value
    return totals, best


def replay_moves(
    inst: Instance,
    alloc: Allocation,
    moves: Iterable[Move],
    *,
    require_ef1: bool = False,
) -> list[Allocation]:
    """Apply moves in order and return every allocation visited, source first."""
    check_shape(inst, alloc)
    visited = [alloc]
    current = alloc
    for step, move in enumerate(moves, start=1):
        current = apply_move(current, move)
        if require_ef1 and not is_ef1(inst, current):
            raise TheoremViolationError(f"allocation after step {step} is not EF1")
        visited.append(current)
    return visited


__all__ = ["ef1_violations", "is_ef1", "owners_are_ef1", "replay_moves"]

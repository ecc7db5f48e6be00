"""EF1 exchange paths for identical binary utilities."""

from __future__ import annotations

import logging

from ef1lib.core import (
    Allocation,
    Exchange,
    Instance,
    PreconditionError,
    TheoremViolationError,
    owners_are_ef1,
)

from .common import Stats, record, require_ef1_endpoints

logger = logging.getLogger(__name__)


def path_identical_binary(
    inst: Instance,
    source: Allocation,
    target: Allocation,
    *,
    stats: Stats | None = None,
) -> list[Exchange]:
    """Two-phase construction; valid but not necessarily shortest.

    Phase one equalises every agent's bundle value with its target value by
    trading a 0-good for a 1-good. Phase two fixes misplaced 1-goods and then
    misplaced 0-goods, which never changes any bundle value.
    """
    if not (inst.identical and inst.binary):
        raise PreconditionError("utilities must be identical and binary")
    require_ef1_endpoints(inst, source, target)
    row = inst.utilities[0]
    owners = list(source.owners)
    goal = target.owners
    n = inst.n
    path: list[Exchange] = []
    checks = 0

    current = [0] * n
    wanted = [0] * n
    for g in range(inst.m):
        current[owners[g]] += row[g]
        wanted[goal[g]] += row[g]

    while True:
        below = [i for i in range(n) if current[i] < wanted[i]]
        above = [j for j in range(n) if current[j] > wanted[j]]
        if not below:
            break
        low = _pick(below, owners, row, 0)
        high = _pick(above, owners, row, 1)
        if low is None or high is None:
            raise TheoremViolationError("no 0-good/1-good pair to rebalance values")
        (giver, g), (taker, h) = low, high
        move = Exchange(giver, taker, g, h)
        move.apply(owners)
        checks += 1
        if not owners_are_ef1(inst, owners):
            raise TheoremViolationError("value-rebalancing exchange broke EF1")
        current[giver] += 1
        current[taker] -= 1
        path.append(move)

    rebalanced = len(path)
    for value in (1, 0):
        misplaced = _misplaced(owners, goal, row, value)
        while misplaced:
            x = misplaced[0]
            i, j = owners[x], goal[x]
            y = next(
                (
                    g
                    for g in range(inst.m)
                    if row[g] == value and owners[g] == j and goal[g] != j
                ),
                None,
            )
            if y is None:
                raise TheoremViolationError(
                    f"agent {j + 1} has no misplaced good of value {value} to return"
                )
            move = Exchange(i, j, x, y)
            move.apply(owners)
            checks += 1
            if not owners_are_ef1(inst, owners):
                raise TheoremViolationError("same-value exchange broke EF1")
            path.append(move)
            remaining = _misplaced(owners, goal, row, value)
            if len(remaining) >= len(misplaced):
                raise TheoremViolationError("misplaced-good count did not decrease")
            misplaced = remaining

    logger.debug(
        "identical-binary path: %d rebalancing + %d placement exchanges",
        rebalanced,
        len(path) - rebalanced,
    )
    record(stats, steps=len(path), checks=checks)
    return path


def _pick(
    agents: list[int], owners: list[int], row: tuple[int, ...], value: int
) -> tuple[int, int] | None:
    """Lowest agent holding a good of the given value, with its lowest such good."""
    for agent in agents:
        for g, o in enumerate(owners):
            if o == agent and row[g] == value:
                return agent, g
    return None


def _misplaced(
    owners: list[int], goal: tuple[int, ...], row: tuple[int, ...], value: int
) -> list[int]:
    return [g for g, o in enumerate(owners) if row[g] == value and o != goal[g]]


__all__ = ["path_identical_binary"]

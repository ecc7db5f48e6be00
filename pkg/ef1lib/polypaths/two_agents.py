"""Optimal EF1 exchange paths for two agents."""

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


def path_two_identical(
    inst: Instance,
    source: Allocation,
    target: Allocation,
    *,
    stats: Stats | None = None,
) -> list[Exchange]:
    if inst.n != 2:
        raise PreconditionError(f"needs exactly 2 agents, got {inst.n}")
    if not inst.identical:
        raise PreconditionError("utilities are not identical")
    require_ef1_endpoints(inst, source, target)
    return _first_fit_exchanges(inst, source, target, stats)


def path_two_binary(
    inst: Instance,
    source: Allocation,
    target: Allocation,
    *,
    stats: Stats | None = None,
) -> list[Exchange]:
    if inst.n != 2:
        raise PreconditionError(f"needs exactly 2 agents, got {inst.n}")
    if not inst.binary:
        raise PreconditionError("utilities are not binary")
    require_ef1_endpoints(inst, source, target)
    return _first_fit_exchanges(inst, source, target, stats)


def _first_fit_exchanges(
    inst: Instance,
    source: Allocation,
    target: Allocation,
    stats: Stats | None,
) -> list[Exchange]:
    """Swap a misplaced pair per step, taking the first pair that keeps EF1.

    X holds agent 1's goods bound for agent 2 and Y the reverse; each side is
    scanned by decreasing utility to its current holder.
    """
    owners = list(source.owners)
    goal = target.owners
    first, second = inst.utilities
    path: list[Exchange] = []
    checks = 0
    while True:
        xs = sorted(
            (g for g, o in enumerate(owners) if o == 0 and goal[g] == 1),
            key=lambda g: (-first[g], g),
        )
        ys = sorted(
            (g for g, o in enumerate(owners) if o == 1 and goal[g] == 0),
            key=lambda g: (-second[g], g),
        )
        if not xs:
            break
        chosen: Exchange | None = None
        for x in xs:
            for y in ys:
                checks += 1
                owners[x], owners[y] = 1, 0
                if owners_are_ef1(inst, owners):
                    chosen = Exchange(0, 1, x, y)
                    break
                owners[x], owners[y] = 0, 1
            if chosen is not None:
                break
        if chosen is None:
            raise TheoremViolationError(
                f"no EF1-preserving exchange among {len(xs)}x{len(ys)} candidates"
            )
        path.append(chosen)
    logger.debug("two-agent path: %d exchanges, %d candidate checks", len(path), checks)
    record(stats, steps=len(path), checks=checks)
    return path


__all__ = ["path_two_binary", "path_two_identical"]

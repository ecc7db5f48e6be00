"""Exchange-and-transfer paths."""

from __future__ import annotations

import logging
from collections.abc import Callable

from ef1lib.core import (
    Allocation,
    Exchange,
    Instance,
    Move,
    PreconditionError,
    TheoremViolationError,
    Transfer,
    check_shape,
    owners_are_ef1,
    replay_moves,
)

from .common import Stats, record, require_ef1_endpoints
from .identical_binary import path_identical_binary
from .two_agents import path_two_binary, path_two_identical

logger = logging.getLogger(__name__)

BaseAlgorithm = Callable[..., list[Exchange]]

BASE_ALGORITHMS: dict[str, BaseAlgorithm] = {
    "two-identical": path_two_identical,
    "two-binary": path_two_binary,
    "iden-binary": path_identical_binary,
}


def choose_base_algorithm(inst: Instance) -> str:
    if inst.n == 2 and inst.identical:
        return "two-identical"
    if inst.n == 2 and inst.binary:
        return "two-binary"
    if inst.identical and inst.binary:
        return "iden-binary"
    raise PreconditionError(
        "no constructive algorithm covers this instance: need two agents with "
        "identical or binary utilities, or identical binary utilities"
    )


def path_xt_via_dummies(
    inst: Instance,
    source: Allocation,
    target: Allocation,
    base: str = "auto",
    *,
    stats: Stats | None = None,
) -> list[Move]:
    """Pad bundles with zero-value goods, run an exchange-only constructor, and
    read exchanges against padding as transfers."""
    check_shape(inst, source)
    check_shape(inst, target)
    name = choose_base_algorithm(inst) if base == "auto" else base
    if name not in BASE_ALGORITHMS:
        raise PreconditionError(f"unknown base algorithm '{base}'")
    require_ef1_endpoints(inst, source, target, equal_sizes=False)
    if source == target:
        return []

    m = inst.m
    padded = _padded_instance(inst)
    padded_source, padded_target = _padded_endpoints(inst, source, target)
    exchanges = BASE_ALGORITHMS[name](padded, padded_source, padded_target, stats=stats)

    path: list[Move] = []
    for move in exchanges:
        real_g, real_h = move.g < m, move.h < m
        if real_g and real_h:
            path.append(move)
        elif real_g:
            path.append(Transfer(move.i, move.j, move.g))
        elif real_h:
            path.append(Transfer(move.j, move.i, move.h))
    visited = replay_moves(inst, source, path, require_ef1=True)
    if visited[-1] != target:
        raise TheoremViolationError("translated path does not end at the target")
    logger.debug(
        "xt via %s: %d padded exchanges -> %d moves", name, len(exchanges), len(path)
    )
    return path


def _padded_instance(inst: Instance) -> Instance:
    count = (inst.n - 1) * inst.m
    prefix = "~pad"
    while any(good.startswith(prefix) for good in inst.goods):
        prefix = "~" + prefix
    goods = inst.goods + tuple(f"{prefix}{k}" for k in range(count))
    rows = tuple(row + (0,) * count for row in inst.utilities)
    return Instance(n=inst.n, goods=goods, utilities=rows)


def _padded_endpoints(
    inst: Instance, source: Allocation, target: Allocation
) -> tuple[Allocation, Allocation]:
    """Every agent ends up with exactly m goods in both padded allocations.

    Each agent keeps as many of its own padding goods as the target allows;
    the surplus goes to agents that are short, in agent order.
    """
    m, n = inst.m, inst.n
    next_pad = m
    pads: list[list[int]] = []
    for size in source.sizes:
        pads.append(list(range(next_pad, next_pad + m - size)))
        next_pad += m - size

    kept: list[list[int]] = []
    spare: list[int] = []
    for agent, size in enumerate(target.sizes):
        need = m - size
        kept.append(pads[agent][:need])
        spare.extend(pads[agent][need:])
    for agent, size in enumerate(target.sizes):
        short = (m - size) - len(kept[agent])
        kept[agent].extend(spare[:short])
        del spare[:short]

    source_owners = list(source.owners) + [0] * (next_pad - m)
    target_owners = list(target.owners) + [0] * (next_pad - m)
    for agent in range(n):
        for pad in pads[agent]:
            source_owners[pad] = agent
        for pad in kept[agent]:
            target_owners[pad] = agent
    return (
        Allocation.from_owners(source_owners, n),
        Allocation.from_owners(target_owners, n),
    )


def path_three_heavy_xt(
    inst: Instance,
    source: Allocation,
    target: Allocation,
    *,
    stats: Stats | None = None,
) -> list[Move]:
    """Swap the light goods of agents 1 and 2 while agent 3 parks one good.

    Agents 1 and 2 each hold one heavy good plus k light goods and agent 3
    holds a single heavy good; every heavy good is worth at least each light
    side's total. The larger of the two most valuable light goods is parked
    with agent 3, the remaining light goods are paired by rank and swapped
    (the freed slot turns one swap into a transfer), and the parked good is
    handed on last. That is k + 2 moves.
    """
    if inst.n != 3:
        raise PreconditionError(f"needs exactly 3 agents, got {inst.n}")
    if not inst.identical:
        raise PreconditionError("utilities are not identical")
    require_ef1_endpoints(inst, source, target)
    row = inst.utilities[0]
    heavy, tails = _three_heavy_shape(inst, source, target)

    rank = {agent: sorted(tails[agent], key=lambda g: (-row[g], g)) for agent in (0, 1)}
    parked_from = 0 if row[rank[0][0]] >= row[rank[1][0]] else 1
    other = 1 - parked_from
    parked = rank[parked_from][0]
    pairs: list[tuple[int | None, int]] = list(
        zip(rank[parked_from][1:] + [None], rank[other], strict=True)
    )

    floor = min(row[g] for g in heavy)
    surrogate_row = tuple(floor if g in heavy else value for g, value in enumerate(row))
    surrogate = Instance(n=3, goods=inst.goods, utilities=(surrogate_row,) * 3)

    owners = list(source.owners)
    path: list[Move] = []
    checks = 0

    def step(move: Move) -> None:
        move.apply(owners)
        if not owners_are_ef1(inst, owners):
            raise TheoremViolationError(f"move {len(path) + 1} broke EF1")
        path.append(move)

    step(Transfer(parked_from, 2, parked))
    pending = list(range(len(pairs)))
    while pending:
        chosen: Move | None = None
        for index in pending:
            mine, theirs = pairs[index]
            candidate: Move = (
                Transfer(other, parked_from, theirs)
                if mine is None
                else Exchange(parked_from, other, mine, theirs)
            )
            trial = list(owners)
            candidate.apply(trial)
            checks += 1
            if owners_are_ef1(surrogate, trial):
                chosen = candidate
                pending.remove(index)
                break
        if chosen is None:
            raise TheoremViolationError(
                f"none of the {len(pending)} remaining rank pairs keeps EF1"
            )
        step(chosen)
    step(Transfer(2, other, parked))

    if tuple(owners) != target.owners:
        raise TheoremViolationError("three-heavy path does not end at the target")
    logger.debug("three-heavy path: %d moves, %d pair checks", len(path), checks)
    record(stats, steps=len(path), checks=checks)
    return path


def _three_heavy_shape(
    inst: Instance, source: Allocation, target: Allocation
) -> tuple[set[int], dict[int, list[int]]]:
    row = inst.utilities[0]
    a, b, c = source.bundles
    a2, b2, c2 = target.bundles
    if len(c) != 1 or c != c2:
        raise PreconditionError("agent 3 must hold the same single good throughout")
    keep_a, keep_b = a & a2, b & b2
    if len(keep_a) != 1 or len(keep_b) != 1:
        raise PreconditionError("agents 1 and 2 must each keep exactly one good")
    tail_a, tail_b = a - keep_a, b - keep_b
    if tail_a != b2 - keep_b or tail_b != a2 - keep_a:
        raise PreconditionError("the target must swap the light goods of agents 1, 2")
    if len(tail_a) != len(tail_b) or not tail_a:
        raise PreconditionError("agents 1 and 2 must trade the same positive count")
    heavy = set(keep_a | keep_b | c)
    lightest_heavy = min(row[g] for g in heavy)
    if lightest_heavy < max(inst.value(0, tail_a), inst.value(0, tail_b)):
        raise PreconditionError("a heavy good is worth less than a light side's total")
    return heavy, {0: sorted(tail_a), 1: sorted(tail_b)}


__all__ = [
    "BASE_ALGORITHMS",
    "choose_base_algorithm",
    "path_three_heavy_xt",
    "path_xt_via_dummies",
]

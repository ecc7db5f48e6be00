"""Breadth-first oracles over exchange and transfer graphs."""

from __future__ import annotations

import logging

from ef1lib.core import (
    Allocation,
    BudgetExhaustedError,
    Instance,
    Move,
    MoveSet,
    PreconditionError,
    check_shape,
    owners_are_ef1,
)

from .explore import Owners, owner_neighbors
from .results import PathResult, SearchBudget

logger = logging.getLogger(__name__)


def bfs_distance(
    inst: Instance,
    source: Allocation,
    target: Allocation,
    moves: MoveSet = MoveSet.EXCHANGE_ONLY,
    budget: SearchBudget | None = None,
) -> int | None:
    """Shortest move count in the unrestricted graph, ``None`` if unreachable.

    Raises BudgetExhaustedError when the state or length limit is hit.
    """
    limits = budget or SearchBudget()
    _check_endpoints(inst, source, target, moves)
    start, goal = source.owners, target.owners
    if start == goal:
        return 0
    n = inst.n
    forward: dict[Owners, int] = {start: 0}
    backward: dict[Owners, int] = {goal: 0}
    front_f, front_b = [start], [goal]
    depth_f = depth_b = 0
    while front_f and front_b:
        if len(front_f) <= len(front_b):
            seen, other, frontier = forward, backward, front_f
        else:
            seen, other, frontier = backward, forward, front_b
        meet: int | None = None
        fresh: list[Owners] = []
        for state in frontier:
            depth = seen[state] + 1
            for _, nxt in owner_neighbors(state, n, moves):
                if nxt in other:
                    total = depth + other[nxt]
                    meet = total if meet is None else min(meet, total)
                if nxt not in seen:
                    seen[nxt] = depth
                    fresh.append(nxt)
            if len(forward) + len(backward) > limits.max_states:
                raise BudgetExhaustedError(
                    "bfs_distance exceeded the state budget",
                    explored=len(forward) + len(backward),
                )
        if meet is not None:
            logger.debug(
                "bfs_distance met at %d after %d states",
                meet,
                len(forward) + len(backward),
            )
            return meet
        if seen is forward:
            front_f, depth_f = fresh, depth_f + 1
        else:
            front_b, depth_b = fresh, depth_b + 1
        if limits.max_path_len is not None and depth_f + depth_b > limits.max_path_len:
            raise BudgetExhaustedError(
                "bfs_distance exceeded the path length limit",
                explored=len(forward) + len(backward),
            )
    return None


def ef1_reach(
    inst: Instance,
    source: Allocation,
    target: Allocation,
    moves: MoveSet = MoveSet.EXCHANGE_ONLY,
    budget: SearchBudget | None = None,
) -> PathResult:
    """Shortest path that only visits EF1 allocations."""
    limits = budget or SearchBudget()
    _check_endpoints(inst, source, target, moves, require_ef1=True)
    start, goal = source.owners, target.owners
    if start == goal:
        return PathResult.found([], explored=1)
    n = inst.n
    parents: dict[Owners, tuple[Owners, Move] | None] = {start: None}
    frontier = [start]
    depth = 0
    while frontier:
        if limits.max_path_len is not None and depth >= limits.max_path_len:
            logger.debug("ef1_reach stopped at depth limit %d", depth)
            return PathResult.budget_exhausted(len(parents))
        fresh: list[Owners] = []
        for state in frontier:
            for move, nxt in owner_neighbors(state, n, moves):
                if nxt in parents or not owners_are_ef1(inst, nxt):
                    continue
                parents[nxt] = (state, move)
                if nxt == goal:
                    logger.debug("ef1_reach found target after %d states", len(parents))
                    return PathResult.found(_unwind(parents, goal), len(parents))
                fresh.append(nxt)
            if len(parents) > limits.max_states:
                logger.debug("ef1_reach exhausted budget at depth %d", depth)
                return PathResult.budget_exhausted(len(parents))
        frontier = fresh
        depth += 1
    logger.debug("ef1_reach expanded the whole component: %d states", len(parents))
    return PathResult.not_found(len(parents))


def optimal_ef1_path(
    inst: Instance,
    source: Allocation,
    target: Allocation,
    moves: MoveSet = MoveSet.EXCHANGE_ONLY,
    budget: SearchBudget | None = None,
) -> PathResult:
    """An EF1 path whose length equals the unrestricted distance, if one exists."""
    limits = budget or SearchBudget()
    _check_endpoints(inst, source, target, moves, require_ef1=True)
    try:
        distance = bfs_distance(inst, source, target, moves, limits)
    except BudgetExhaustedError as exc:
        return PathResult.budget_exhausted(exc.explored)
    if distance is None:
        return PathResult.not_found(0)
    start, goal = source.owners, target.owners
    if distance == 0:
        return PathResult.found([], explored=1)
    n = inst.n

    # Distances to the goal for every state within `distance` of it.
    to_goal: dict[Owners, int] = {goal: 0}
    layer = [goal]
    for depth in range(1, distance + 1):
        fresh: list[Owners] = []
        for state in layer:
            for _, nxt in owner_neighbors(state, n, moves):
                if nxt not in to_goal:
                    to_goal[nxt] = depth
                    fresh.append(nxt)
            if len(to_goal) > limits.max_states:
                return PathResult.budget_exhausted(len(to_goal))
        layer = fresh

    parents: dict[Owners, tuple[Owners, Move] | None] = {start: None}
    frontier = [start]
    while frontier:
        fresh = []
        for state in frontier:
            wanted = to_goal[state] - 1
            for move, nxt in owner_neighbors(state, n, moves):
                if to_goal.get(nxt) != wanted or nxt in parents:
                    continue
                if not owners_are_ef1(inst, nxt):
                    continue
                parents[nxt] = (state, move)
                if nxt == goal:
                    return PathResult.found(
                        _unwind(parents, goal), len(parents) + len(to_goal)
                    )
                fresh.append(nxt)
        frontier = fresh
    logger.debug("optimal_ef1_path: no geodesic stays EF1 (distance %d)", distance)
    return PathResult.not_found(len(parents) + len(to_goal))


def _unwind(
    parents: dict[Owners, tuple[Owners, Move] | None], goal: Owners
) -> list[Move]:
    path: list[Move] = []
    state = goal
    link = parents[state]
    while link is not None:
        state, move = link
        path.append(move)
        link = parents[state]
    path.reverse()
    return path


def _check_endpoints(
    inst: Instance,
    source: Allocation,
    target: Allocation,
    moves: MoveSet,
    *,
    require_ef1: bool = False,
) -> None:
    check_shape(inst, source)
    check_shape(inst, target)
    if moves is MoveSet.EXCHANGE_ONLY and source.sizes != target.sizes:
        raise PreconditionError(
            f"exchanges preserve bundle sizes: {source.sizes} vs {target.sizes}"
        )
    if require_ef1:
        if not owners_are_ef1(inst, source.owners):
            raise PreconditionError("source allocation is not EF1")
        if not owners_are_ef1(inst, target.owners):
            raise PreconditionError("target allocation is not EF1")


__all__ = ["bfs_distance", "ef1_reach", "optimal_ef1_path"]

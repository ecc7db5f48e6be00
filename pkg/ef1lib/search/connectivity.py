"""Connectivity of the EF1-induced move graph."""

from __future__ import annotations

import itertools
import logging
from collections.abc import Iterator, Sequence

from ef1lib.algorithms import connected_components
from ef1lib.core import (
    BudgetExhaustedError,
    Instance,
    MoveSet,
    PreconditionError,
    owners_are_ef1,
)

from .explore import Owners, allocation_count, enumerate_owner_vectors, owner_neighbors
from .results import ConnectivityReport, SearchBudget

logger = logging.getLogger(__name__)


def ef1_component_connected(
    inst: Instance,
    sizes: Sequence[int] | None = None,
    moves: MoveSet = MoveSet.EXCHANGE_ONLY,
    budget: SearchBudget | None = None,
) -> ConnectivityReport:
    """Enumerate every EF1 allocation and split them into components.

    Transfer graphs span every size vector and need ``sizes=None``. Exchanges
    never change bundle sizes, so exchange-only graphs without a size vector
    are checked one size vector at a time: the report is connected when each
    size vector's EF1 allocations form a single component, and
    ``size_classes`` counts the size vectors that have EF1 allocations.
    """
    limits = budget or SearchBudget()
    if moves is not MoveSet.EXCHANGE_ONLY and sizes is not None:
        raise PreconditionError("transfer graphs range over every size vector")
    total = allocation_count(inst.n, inst.m, sizes)
    if total > limits.max_states:
        raise BudgetExhaustedError(
            f"{total} allocations exceed the state budget of {limits.max_states}",
            explored=0,
        )
    states = [
        owners for owners in _candidates(inst, sizes) if owners_are_ef1(inst, owners)
    ]
    components = connected_components(
        states,
        lambda owners: (nxt for _, nxt in owner_neighbors(owners, inst.n, moves)),
    )
    sizes_found = tuple(len(component) for component in components)
    size_classes = 1
    if moves is MoveSet.EXCHANGE_ONLY and sizes is None:
        size_classes = len({_size_vector(owners, inst.n) for owners in states})
    logger.debug(
        "ef1_component_connected: %d of %d allocations EF1, components %s",
        len(states),
        total,
        sizes_found,
    )
    return ConnectivityReport(
        connected=len(components) <= size_classes,
        component_sizes=sizes_found,
        states=len(states),
        size_classes=size_classes,
    )


def _size_vector(owners: Owners, n: int) -> tuple[int, ...]:
    counts = [0] * n
    for owner in owners:
        counts[owner] += 1
    return tuple(counts)


def _candidates(inst: Instance, sizes: Sequence[int] | None) -> Iterator[Owners]:
    if sizes is None:
        return itertools.product(range(inst.n), repeat=inst.m)
    return enumerate_owner_vectors(inst.n, inst.m, sizes)


__all__ = ["ef1_component_connected"]

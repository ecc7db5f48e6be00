"""Four-agent identical instances encoding Partition."""

from __future__ import annotations

import itertools
import logging
from collections.abc import Sequence

from ef1lib.core import (
    Allocation,
    Instance,
    PreconditionError,
    TheoremViolationError,
    is_ef1,
)

logger = logging.getLogger(__name__)


def gen_partition_instance(
    values: Sequence[int],
) -> tuple[Instance, Allocation, Allocation]:
    """Instance whose endpoints have an optimal EF1 path iff ``values`` splits evenly.

    Goods are a0..ak, b0..bk, c1, c2, d1, d2; the exchange distance is k + 2.
    """
    if not values:
        raise PreconditionError("Partition needs at least one value")
    if any(isinstance(t, bool) or not isinstance(t, int) or t <= 0 for t in values):
        raise PreconditionError("Partition values must be positive integers")
    total = sum(values)
    if total % 2:
        raise PreconditionError(f"Partition values must have an even sum, got {total}")
    half = total // 2
    k = len(values)

    goods = (
        [f"a{i}" for i in range(k + 1)]
        + [f"b{i}" for i in range(k + 1)]
        + ["c1", "c2", "d1", "d2"]
    )
    row = [2 * half, *values, 2 * half, *([0] * k), 2 * half, 0, half, half]
    inst = Instance(n=4, goods=tuple(goods), utilities=(tuple(row),) * 4)

    a = list(range(k + 1))
    b = list(range(k + 1, 2 * k + 2))
    c = [2 * k + 2, 2 * k + 3]
    d = [2 * k + 4, 2 * k + 5]
    source = Allocation.of([a, b, c, d])
    target = Allocation.of([[a[0], *b[1:]], [b[0], *a[1:]], d, c])
    if not (is_ef1(inst, source) and is_ef1(inst, target)):
        raise TheoremViolationError("Partition endpoints must both be EF1")
    logger.debug("Partition instance: k=%d, S=%d", k, half)
    return inst, source, target


def equal_sum_split(values: Sequence[int]) -> tuple[int, ...] | None:
    """Indices of a subset summing to half the total, or ``None``."""
    total = sum(values)
    if total % 2:
        return None
    for size in range(len(values) + 1):
        for subset in itertools.combinations(range(len(values)), size):
            if 2 * sum(values[i] for i in subset) == total:
                return subset
    return None


__all__ = ["equal_sum_split", "gen_partition_instance"]

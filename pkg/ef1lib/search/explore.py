"""Neighbor generation and allocation enumeration."""

from __future__ import annotations

import math
from collections.abc import Iterator, Sequence

from ef1lib.core import (
    Allocation,
    AllocationError,
    Exchange,
    Instance,
    Move,
    MoveSet,
    Transfer,
    check_shape,
)

Owners = tuple[int, ...]


def neighbors(
    inst: Instance,
    alloc: Allocation,
    moves: MoveSet = MoveSet.EXCHANGE_ONLY,
) -> list[tuple[Move, Allocation]]:
    check_shape(inst, alloc)
    return [
        (move, Allocation.from_owners(owners, inst.n))
        for move, owners in owner_neighbors(alloc.owners, inst.n, moves)
    ]


def owner_neighbors(
    owners: Owners, n: int, moves: MoveSet
) -> Iterator[tuple[Move, Owners]]:
    """Yield moves in (i, j, g, h) order, exchanges before transfers."""
    bundles: list[list[int]] = [[] for _ in range(n)]
    for g, owner in enumerate(owners):
        bundles[owner].append(g)
    if moves.exchanges:
        for i in range(n):
            for j in range(i + 1, n):
                for g in bundles[i]:
                    for h in bundles[j]:
                        nxt = list(owners)
                        nxt[g] = j
                        nxt[h] = i
                        yield Exchange(i, j, g, h), tuple(nxt)
    if moves.transfers:
        for i in range(n):
            for j in range(n):
                if j == i:
                    continue
                for g in bundles[i]:
                    nxt = list(owners)
                    nxt[g] = j
                    yield Transfer(i, j, g), tuple(nxt)


def enumerate_allocations(inst: Instance, sizes: Sequence[int]) -> Iterator[Allocation]:
    for owners in enumerate_owner_vectors(inst.n, inst.m, sizes):
        yield Allocation.from_owners(owners, inst.n)


def enumerate_owner_vectors(n: int, m: int, sizes: Sequence[int]) -> Iterator[Owners]:
    _check_sizes(n, m, sizes)
    remaining = list(sizes)
    owners: list[int] = []

    def extend() -> Iterator[Owners]:
        if len(owners) == m:
            yield tuple(owners)
            return
        for agent in range(n):
            if remaining[agent]:
                remaining[agent] -= 1
                owners.append(agent)
                yield from extend()
                owners.pop()
                remaining[agent] += 1

    yield from extend()


def allocation_count(n: int, m: int, sizes: Sequence[int] | None) -> int:
    if sizes is None:
        return int(n**m)
    _check_sizes(n, m, sizes)
    count = math.factorial(m)
    for size in sizes:
        count //= math.factorial(size)
    return count


def _check_sizes(n: int, m: int, sizes: Sequence[int]) -> None:
    if len(sizes) != n:
        raise AllocationError(f"size vector has {len(sizes)} entries, expected {n}")
    if any(size < 0 for size in sizes):
        raise AllocationError("size vector entries must be non-negative")
    if sum(sizes) != m:
        raise AllocationError(f"size vector sums to {sum(sizes)}, expected {m}")


__all__ = [
    "Owners",
    "allocation_count",
    "enumerate_allocations",
    "enumerate_owner_vectors",
    "neighbors",
    "owner_neighbors",
]

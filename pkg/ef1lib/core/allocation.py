"""Allocation model."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import cached_property
from typing import Any

from .errors import AllocationError
from .instance import Instance


@dataclass(frozen=True)
class Allocation:
    """Ordered partition of good indices into one bundle per agent."""

    bundles: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        seen: set[int] = set()
        for i, bundle in enumerate(self.bundles):
            overlap = seen & bundle
            if overlap:
                raise AllocationError(
                    f"good index {min(overlap)} appears in more than one bundle "
                    f"(again in bundle {i + 1})"
                )
            seen |= bundle
        if seen != set(range(len(seen))):
            raise AllocationError("bundles must cover good indices 0..m-1 exactly")

    @classmethod
    def of(cls, bundles: Iterable[Iterable[int]]) -> Allocation:
        return cls(tuple(frozenset(bundle) for bundle in bundles))

    @classmethod
    def from_owners(cls, owners: Sequence[int], n: int) -> Allocation:
        bundles: list[set[int]] = [set() for _ in range(n)]
        for g, owner in enumerate(owners):
            if not 0 <= owner < n:
                raise AllocationError(f"owner {owner} out of range for {n} agents")
            bundles[owner].add(g)
        return cls(tuple(frozenset(bundle) for bundle in bundles))

    @classmethod
    def from_names(cls, inst: Instance, bundles: Sequence[Sequence[str]]) -> Allocation:
        alloc = cls.of([inst.index_of(name) for name in bundle] for bundle in bundles)
        check_shape(inst, alloc)
        return alloc

    @property
    def n(self) -> int:
        return len(self.bundles)

    @property
    def m(self) -> int:
        return sum(len(bundle) for bundle in self.bundles)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(bundle) for bundle in self.bundles)

    @cached_property
    def owners(self) -> tuple[int, ...]:
        owner = [0] * self.m
        for i, bundle in enumerate(self.bundles):
            for g in bundle:
                owner[g] = i
        return tuple(owner)

    def owner_of(self, good: int) -> int:
        return self.owners[good]

    def names(self, inst: Instance) -> list[list[str]]:
        return [[inst.goods[g] for g in sorted(bundle)] for bundle in self.bundles]

    def to_dict(self, inst: Instance) -> dict[str, Any]:
        return {"bundles": self.names(inst)}


def check_shape(inst: Instance, alloc: Allocation) -> None:
    if alloc.n != inst.n:
        raise AllocationError(
            f"allocation has {alloc.n} bundles but the instance has {inst.n} agents"
        )
    if alloc.m != inst.m:
        raise AllocationError(
            f"allocation covers {alloc.m} goods but the instance has {inst.m}"
        )


def canonical_key(alloc: Allocation) -> tuple[int, ...]:
    """Owner of each good, 1-based."""
    return tuple(owner + 1 for owner in alloc.owners)


__all__ = ["Allocation", "canonical_key", "check_shape"]

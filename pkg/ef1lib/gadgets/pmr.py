"""Perfect matching reconfiguration instances and their EF1 encoding."""

from __future__ import annotations

import itertools
import logging
from collections import deque
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

from ef1lib.core import (
    Allocation,
    Instance,
    PreconditionError,
    TheoremViolationError,
    is_ef1,
)

logger = logging.getLogger(__name__)

Matching = tuple[int, ...]

MAX_PMR_SIDE = 8


@dataclass(frozen=True)
class BipartiteMatchingInstance:
    """Balanced bipartite graph on p_0..p_{v-1} and q_0..q_{v-1}.

    A matching is stored as ``w[i] = k`` meaning p_i is matched to q_k.
    """

    v: int
    edges: frozenset[tuple[int, int]]
    w0: Matching
    w: Matching

    def __post_init__(self) -> None:
        if self.v < 1:
            raise PreconditionError("a bipartite graph needs at least one vertex pair")
        for i, k in self.edges:
            if not (0 <= i < self.v and 0 <= k < self.v):
                raise PreconditionError(f"edge ({i + 1}, {k + 1}) is out of range")
        for label, matching in (("W0", self.w0), ("W", self.w)):
            if not self.is_perfect_matching(matching):
                raise PreconditionError(
                    f"{label} is not a perfect matching of the graph"
                )

    @classmethod
    def build(
        cls,
        v: int,
        edges: Iterable[tuple[int, int]],
        w0: Sequence[int],
        w: Sequence[int],
    ) -> BipartiteMatchingInstance:
        return cls(v, frozenset(edges), tuple(w0), tuple(w))

    def is_perfect_matching(self, matching: Sequence[int]) -> bool:
        return (
            len(matching) == self.v
            and sorted(matching) == list(range(self.v))
            and all((i, k) in self.edges for i, k in enumerate(matching))
        )

    def flips(self, matching: Matching) -> Iterator[Matching]:
        """Matchings that differ from ``matching`` on one alternating 4-cycle."""
        for i, j in itertools.combinations(range(self.v), 2):
            k, ell = matching[i], matching[j]
            if (i, ell) in self.edges and (j, k) in self.edges:
                swapped = list(matching)
                swapped[i], swapped[j] = ell, k
                yield tuple(swapped)


def perfect_matchings(v: int, edges: Iterable[tuple[int, int]]) -> list[Matching]:
    edge_set = set(edges)
    return [
        perm
        for perm in itertools.permutations(range(v))
        if all((i, k) in edge_set for i, k in enumerate(perm))
    ]


def gen_pmr_instance(
    b: BipartiteMatchingInstance,
) -> tuple[Instance, Allocation, Allocation]:
    """Agent 0 holds r1..r4 and values nothing; agent i holds p_i and its partner."""
    v = b.v
    goods = (
        [f"p{i + 1}" for i in range(v)]
        + [f"q{k + 1}" for k in range(v)]
        + [f"r{t + 1}" for t in range(4)]
    )
    rows: list[tuple[int, ...]] = [tuple(0 for _ in goods)]
    for i in range(v):
        row = [0] * len(goods)
        row[i] = 3
        for src, k in b.edges:
            if src == i:
                row[v + k] = 3
        for t in range(4):
            row[2 * v + t] = 2
        rows.append(tuple(row))
    inst = Instance(n=v + 1, goods=tuple(goods), utilities=tuple(rows))

    def encode(matching: Matching) -> Allocation:
        bundles = [set(range(2 * v, 2 * v + 4))]
        bundles += [{i, v + matching[i]} for i in range(v)]
        return Allocation.of(bundles)

    source, target = encode(b.w0), encode(b.w)
    if not (is_ef1(inst, source) and is_ef1(inst, target)):
        raise TheoremViolationError("matching allocations must both be EF1")
    logger.debug("PMR instance: v=%d, %d edges", v, len(b.edges))
    return inst, source, target


def brute_force_pmr(b: BipartiteMatchingInstance) -> bool:
    if b.v > MAX_PMR_SIDE:
        raise PreconditionError(
            f"brute force is limited to v <= {MAX_PMR_SIDE}, got {b.v}"
        )
    seen = {b.w0}
    queue = deque([b.w0])
    while queue:
        matching = queue.popleft()
        if matching == b.w:
            logger.debug("PMR brute force: reachable after %d matchings", len(seen))
            return True
        for nxt in b.flips(matching):
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    logger.debug("PMR brute force: unreachable, %d matchings explored", len(seen))
    return False


__all__ = [
    "MAX_PMR_SIDE",
    "BipartiteMatchingInstance",
    "Matching",
    "brute_force_pmr",
    "gen_pmr_instance",
    "perfect_matchings",
]

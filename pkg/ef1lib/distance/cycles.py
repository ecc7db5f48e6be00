"""Circuit partitions of item graphs."""

from __future__ import annotations

import logging
from collections.abc import Iterator

from ef1lib.core import Allocation, BudgetExhaustedError, Instance, check_shape
from ef1lib.search import SearchBudget

from .item_graph import (
    CircuitPartition,
    ItemGraph,
    build_item_graph,
    canonical_partition,
)

logger = logging.getLogger(__name__)


def greedy_circuit_partition(g: ItemGraph) -> CircuitPartition:
    """Walk unused edges and cut off a cycle at every repeated vertex."""
    g.require_balanced()
    outgoing: list[list[int]] = [[] for _ in range(g.n)]
    for k, (u, _) in enumerate(g.edges):
        outgoing[u].append(k)
    cursor = [0] * g.n
    used = [False] * g.m

    def next_edge(vertex: int) -> int:
        edges = outgoing[vertex]
        while used[edges[cursor[vertex]]]:
            cursor[vertex] += 1
        edge = edges[cursor[vertex]]
        used[edge] = True
        return edge

    cycles: list[list[int]] = []
    for first in range(g.m):
        if used[first]:
            continue
        used[first] = True
        tail, head = g.edges[first]
        trail_vertices = [tail]
        trail_edges = [first]
        position = {tail: 0}
        vertex = head
        while True:
            if vertex in position:
                cut = position[vertex]
                cycles.append(trail_edges[cut:])
                del trail_edges[cut:]
                for dropped in trail_vertices[cut + 1 :]:
                    del position[dropped]
                del trail_vertices[cut + 1 :]
                if not trail_edges:
                    break
            else:
                position[vertex] = len(trail_vertices)
                trail_vertices.append(vertex)
            edge = next_edge(vertex)
            trail_edges.append(edge)
            vertex = g.edges[edge][1]
    return canonical_partition(cycles)


def max_cycle_partition(
    g: ItemGraph, budget: SearchBudget | None = None
) -> tuple[int, CircuitPartition]:
    """Exact maximum number of cycles in an edge partition, with a witness.

    Self-loops are kept as singleton cycles. The rest is a depth-first search
    that always branches on the lowest uncovered edge and tries every simple
    cycle through it.
    """
    limits = budget or SearchBudget()
    g.require_balanced()
    loops = [(k,) for k in g.loops()]
    greedy = [c for c in greedy_circuit_partition(g) if len(c) > 1]
    best: list[tuple[int, ...]] = list(greedy)

    outgoing: list[list[int]] = [[] for _ in range(g.n)]
    for k, (u, v) in enumerate(g.edges):
        if u != v:
            outgoing[u].append(k)
    covered = [u == v for u, v in g.edges]
    remaining = sum(1 for flag in covered if not flag)
    chosen: list[tuple[int, ...]] = []
    nodes = 0

    def cycles_through(edge: int) -> Iterator[list[int]]:
        start, first_head = g.edges[edge]
        on_path = {start, first_head}
        trail = [edge]

        def extend(vertex: int) -> Iterator[list[int]]:
            for nxt in outgoing[vertex]:
                if covered[nxt]:
                    continue
                head = g.edges[nxt][1]
                if head == start:
                    yield trail + [nxt]
                elif head not in on_path:
                    on_path.add(head)
                    trail.append(nxt)
                    yield from extend(head)
                    trail.pop()
                    on_path.remove(head)

        covered[edge] = True
        yield from extend(first_head)
        covered[edge] = False

    def search() -> None:
        nonlocal nodes, remaining, best
        nodes += 1
        if nodes > limits.max_states:
            raise BudgetExhaustedError(
                "max_cycle_partition exceeded its node budget", explored=nodes
            )
        if remaining == 0:
            if len(chosen) > len(best):
                best = list(chosen)
            return
        if len(chosen) + remaining // 2 <= len(best):
            return
        edge = covered.index(False)
        for cycle in cycles_through(edge):
            rest = cycle[1:]
            for k in rest:
                covered[k] = True
            remaining -= len(cycle)
            chosen.append(tuple(cycle))
            search()
            chosen.pop()
            remaining += len(cycle)
            for k in rest:
                covered[k] = False

    search()
    logger.debug(
        "max_cycle_partition: %d loops, %d cycles (greedy %d), %d nodes",
        len(loops),
        len(best),
        len(greedy),
        nodes,
    )
    witness = canonical_partition(loops + best)
    return len(witness), witness


def distance_via_cycles(
    inst: Instance,
    source: Allocation,
    target: Allocation,
    budget: SearchBudget | None = None,
) -> int:
    check_shape(inst, source)
    check_shape(inst, target)
    count, _ = max_cycle_partition(build_item_graph(source, target), budget)
    return inst.m - count


__all__ = ["distance_via_cycles", "greedy_circuit_partition", "max_cycle_partition"]

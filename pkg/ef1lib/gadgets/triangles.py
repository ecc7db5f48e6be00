"""Directed triangle partitions: validation and an exact small-graph search."""

from __future__ import annotations

import logging
from collections.abc import Hashable, Iterable, Sequence
from dataclasses import dataclass

import networkx as nx

from ef1lib.core import BudgetExhaustedError, PreconditionError
from ef1lib.search import SearchBudget

logger = logging.getLogger(__name__)

Triangle = tuple[Hashable, Hashable, Hashable]

MAX_BRUTE_FORCE_EDGES = 30


@dataclass(frozen=True)
class TriangleCheck:
    ok: bool
    defect: str | None = None


def validate_triangle_partition(
    graph: nx.DiGraph, parts: Iterable[Sequence[Hashable]]
) -> TriangleCheck:
    """Every part must be a directed 3-cycle of the graph, covering each edge once."""
    covered: set[tuple[Hashable, Hashable]] = set()
    for index, part in enumerate(parts):
        if len(part) != 3:
            return TriangleCheck(False, f"part {index} has length {len(part)}")
        for k in range(3):
            edge = (part[k], part[(k + 1) % 3])
            if not graph.has_edge(*edge):
                return TriangleCheck(False, f"part {index} uses missing edge {edge}")
            if edge in covered:
                return TriangleCheck(False, f"edge {edge} is covered twice")
            covered.add(edge)
    if len(covered) != graph.number_of_edges():
        for edge in graph.edges():
            if edge not in covered:
                return TriangleCheck(False, f"edge {edge} is not covered")
    return TriangleCheck(True)


def dtp_brute_force(
    graph: nx.DiGraph, budget: SearchBudget | None = None
) -> list[Triangle] | None:
    """Exact triangle partition search for graphs with at most 30 edges."""
    limits = budget or SearchBudget()
    edges = list(graph.edges())
    if len(edges) > MAX_BRUTE_FORCE_EDGES:
        raise PreconditionError(
            f"brute force is limited to {MAX_BRUTE_FORCE_EDGES} edges, "
            f"got {len(edges)}"
        )
    if len(edges) % 3:
        return None
    free = set(edges)
    chosen: list[Triangle] = []
    nodes = 0

    def search() -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > limits.max_states:
            raise BudgetExhaustedError(
                "dtp_brute_force exceeded its budget", explored=nodes
            )
        edge = next((e for e in edges if e in free), None)
        if edge is None:
            return True
        u, v = edge
        for w in graph.successors(v):
            if w in (u, v) or (v, w) not in free or (w, u) not in free:
                continue
            triple = [(u, v), (v, w), (w, u)]
            free.difference_update(triple)
            chosen.append((u, v, w))
            if search():
                return True
            chosen.pop()
            free.update(triple)
        return False

    found = search()
    logger.debug("dtp_brute_force: %s after %d nodes", found, nodes)
    return list(chosen) if found else None


__all__ = [
    "MAX_BRUTE_FORCE_EDGES",
    "Triangle",
    "TriangleCheck",
    "dtp_brute_force",
    "validate_triangle_partition",
]

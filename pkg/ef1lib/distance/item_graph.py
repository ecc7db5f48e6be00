"""Item multigraph between two allocations."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

from ef1lib.algorithms import unbalanced_vertices
from ef1lib.core import Allocation, PreconditionError

Circuit = tuple[int, ...]
CircuitPartition = tuple[Circuit, ...]


@dataclass(frozen=True)
class ItemGraph:
    """Agents as vertices, one edge per good from its old owner to its new one."""

    n: int
    edges: tuple[tuple[int, int], ...]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> ItemGraph:
        graph = cls(n, tuple((int(u), int(v)) for u, v in edges))
        for u, v in graph.edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) leaves the vertex range 0..{n - 1}")
        return graph

    @property
    def m(self) -> int:
        return len(self.edges)

    def loops(self) -> list[int]:
        return [k for k, (u, v) in enumerate(self.edges) if u == v]

    def is_balanced(self) -> bool:
        return not unbalanced_vertices(range(self.n), self.edges)

    def require_balanced(self) -> None:
        bad = unbalanced_vertices(range(self.n), self.edges)
        if bad:
            raise PreconditionError(
                f"vertices with indegree != outdegree: {[v + 1 for v in bad]}"
            )


def build_item_graph(source: Allocation, target: Allocation) -> ItemGraph:
    if source.sizes != target.sizes:
        raise PreconditionError(
            f"item graphs need equal size vectors: {source.sizes} vs {target.sizes}"
        )
    return ItemGraph(
        source.n,
        tuple(zip(source.owners, target.owners, strict=True)),
    )


def validate_circuit_partition(g: ItemGraph, part: Iterable[Circuit]) -> list[str]:
    errors: list[str] = []
    seen: set[int] = set()
    for index, circuit in enumerate(part):
        if not circuit:
            errors.append(f"circuit {index} is empty")
            continue
        for edge in circuit:
            if not 0 <= edge < g.m:
                errors.append(f"circuit {index} names unknown edge {edge}")
            elif edge in seen:
                errors.append(f"edge {edge} is used more than once")
            seen.add(edge)
        if any(not 0 <= edge < g.m for edge in circuit):
            continue
        if len(circuit) > 1 and any(g.edges[e][0] == g.edges[e][1] for e in circuit):
            errors.append(f"circuit {index} contains a self-loop")
        for pos, edge in enumerate(circuit):
            following = circuit[(pos + 1) % len(circuit)]
            if g.edges[edge][1] != g.edges[following][0]:
                errors.append(f"circuit {index} is not closed at edge {edge}")
                break
    missing = sorted(set(range(g.m)) - seen)
    if missing:
        errors.append(f"edges not covered: {missing}")
    return errors


def canonical_partition(cycles: Iterable[Iterable[int]]) -> CircuitPartition:
    rotated = []
    for cycle in cycles:
        edges = list(cycle)
        start = edges.index(min(edges))
        rotated.append(tuple(edges[start:] + edges[:start]))
    return tuple(sorted(rotated))


__all__ = [
    "Circuit",
    "CircuitPartition",
    "ItemGraph",
    "build_item_graph",
    "canonical_partition",
    "validate_circuit_partition",
]

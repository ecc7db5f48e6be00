"""Basic graph algorithms shared by the search and distance layers."""

from __future__ import annotations

from collections import deque
from collections.abc import Callable, Hashable, Iterable
from typing import TypeVar

Node = TypeVar("Node", bound=Hashable)


def connected_components(
    nodes: Iterable[Node],
    neighbors: Callable[[Node], Iterable[Node]],
) -> list[list[Node]]:
    """Components of the undirected graph induced on ``nodes``.

    ``neighbors`` may yield nodes outside ``nodes``; those are ignored.
    Components come back largest first, in discovery order on ties.
    """
    ordered = list(nodes)
    remaining = set(ordered)
    components: list[list[Node]] = []
    for start in ordered:
        if start not in remaining:
            continue
        remaining.remove(start)
        queue = deque([start])
        component = [start]
        while queue:
            node = queue.popleft()
            for neighbor in neighbors(node):
                if neighbor in remaining:
                    remaining.remove(neighbor)
                    component.append(neighbor)
                    queue.append(neighbor)
        components.append(component)
    return sorted(components, key=len, reverse=True)


def in_out_degree(
    nodes: Iterable[Node], edges: Iterable[tuple[Node, Node]]
) -> dict[Node, dict[str, int]]:
    degrees = {node: {"in": 0, "out": 0} for node in nodes}
    for src, dst in edges:
        degrees.setdefault(src, {"in": 0, "out": 0})
        degrees.setdefault(dst, {"in": 0, "out": 0})
        degrees[src]["out"] += 1
        degrees[dst]["in"] += 1
    return degrees


def unbalanced_vertices(
    nodes: Iterable[Node], edges: Iterable[tuple[Node, Node]]
) -> list[Node]:
    degrees = in_out_degree(nodes, edges)
    return [node for node, deg in degrees.items() if deg["in"] != deg["out"]]

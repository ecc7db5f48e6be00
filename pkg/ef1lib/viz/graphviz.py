"""Graphviz DOT export helpers."""

from __future__ import annotations

from ef1lib.core import Allocation, Instance
from ef1lib.distance import CircuitPartition, build_item_graph

_PALETTE = ("blue", "red", "darkgreen", "orange", "purple", "brown", "teal")


def item_graph_to_dot(
    inst: Instance,
    source: Allocation,
    target: Allocation,
    partition: CircuitPartition | None = None,
) -> str:
    """Item graph with agents as nodes and goods as edge labels.

    Goods that stay put are drawn as grey self-loops. When a circuit
    partition is given, each circuit gets its own colour.
    """
    graph = build_item_graph(source, target)
    colour: dict[int, str] = {}
    for index, circuit in enumerate(partition or ()):
        for good in circuit:
            colour[good] = _PALETTE[index % len(_PALETTE)]

    lines = ["digraph ItemGraph {", "  node [shape=circle];"]
    for agent in range(inst.n):
        lines.append(f'  "{agent + 1}" [label="{agent + 1}"];')
    for good, (u, v) in enumerate(graph.edges):
        label = _escape_label(inst.goods[good])
        edge_colour = colour.get(good, "grey" if u == v else "black")
        lines.append(
            f'  "{u + 1}" -> "{v + 1}" [label="{label}", color="{edge_colour}"];'
        )
    lines.append("}")
    return "\n".join(lines)


def _escape_label(text: str) -> str:
    return text.replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n")

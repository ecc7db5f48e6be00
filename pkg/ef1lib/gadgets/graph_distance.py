"""Exchange instances whose item graph is a prescribed balanced multigraph."""

from __future__ import annotations

import logging
from collections.abc import Hashable

import networkx as nx

from ef1lib.core import Allocation, Instance, PreconditionError

logger = logging.getLogger(__name__)


def gen_graph_distance_instance(
    g: nx.MultiDiGraph | nx.DiGraph,
) -> tuple[Instance, Allocation, Allocation]:
    """Agents are the sorted vertices of ``g`` and good e_k is its k-th edge.

    Good e_k starts with the edge's tail and ends with its head, so the item
    graph of the returned endpoints is ``g`` itself. All utilities are zero,
    and a single-vertex graph gets an idle second agent.
    """
    unbalanced = [v for v in g.nodes if g.in_degree(v) != g.out_degree(v)]
    if unbalanced:
        raise PreconditionError(f"vertices with indegree != outdegree: {unbalanced}")
    edges = list(g.edges())
    if not edges:
        raise PreconditionError("the graph needs at least one edge")

    nodes = _ordered_nodes(g)
    index = {node: i for i, node in enumerate(nodes)}
    n = max(len(nodes), 2)
    goods = tuple(f"e{k + 1}" for k in range(len(edges)))
    zeros = tuple((0,) * len(goods) for _ in range(n))
    inst = Instance(n=n, goods=goods, utilities=zeros)
    source = Allocation.from_owners([index[u] for u, _ in edges], n)
    target = Allocation.from_owners([index[v] for _, v in edges], n)
    logger.debug("graph distance instance: %d agents, %d goods", n, len(goods))
    return inst, source, target


def _ordered_nodes(g: nx.DiGraph) -> list[Hashable]:
    try:
        return sorted(g.nodes)
    except TypeError:
        return sorted(g.nodes, key=repr)


__all__ = ["gen_graph_distance_instance"]

"""Exhaustive search over exchange and transfer graphs."""

from .bfs import bfs_distance, ef1_reach, optimal_ef1_path
from .connectivity import ef1_component_connected
from .explore import allocation_count, enumerate_allocations, neighbors
from .results import ConnectivityReport, PathResult, SearchBudget

__all__ = [
    "ConnectivityReport",
    "PathResult",
    "SearchBudget",
    "allocation_count",
    "bfs_distance",
    "ef1_component_connected",
    "ef1_reach",
    "enumerate_allocations",
    "neighbors",
    "optimal_ef1_path",
]

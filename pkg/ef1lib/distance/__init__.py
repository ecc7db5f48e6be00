"""Item graphs, cycle partitions and closed-form exchange distance."""

from .cycles import distance_via_cycles, greedy_circuit_partition, max_cycle_partition
from .item_graph import (
    Circuit,
    CircuitPartition,
    ItemGraph,
    build_item_graph,
    canonical_partition,
    validate_circuit_partition,
)
from .reconstruct import path_from_partition

__all__ = [
    "Circuit",
    "CircuitPartition",
    "ItemGraph",
    "build_item_graph",
    "canonical_partition",
    "distance_via_cycles",
    "greedy_circuit_partition",
    "max_cycle_partition",
    "path_from_partition",
    "validate_circuit_partition",
]

"""Reduction generators, counterexample catalog and H_p gadget machinery."""

from .catalog import (
    PAD_RULES,
    CheckOutcome,
    Fixture,
    catalog,
    catalog_names,
    fixture,
    verify_fixture,
)
from .graph_distance import gen_graph_distance_instance
from .hp import (
    GadgetConfig,
    GadgetGraph,
    Patch,
    build_hp,
    check_gadget_graph,
    enumerate_tf_triangles,
    hex_distance,
    select_patches,
)
from .partition import equal_sum_split, gen_partition_instance
from .pmr import (
    BipartiteMatchingInstance,
    brute_force_pmr,
    gen_pmr_instance,
    perfect_matchings,
)
from .threesat import (
    AssignmentPartition,
    Cnf3Formula,
    Join,
    gen_threesat_dtp,
    partition_from_assignment,
)
from .triangles import TriangleCheck, dtp_brute_force, validate_triangle_partition

__all__ = [
    "PAD_RULES",
    "AssignmentPartition",
    "BipartiteMatchingInstance",
    "CheckOutcome",
    "Cnf3Formula",
    "Fixture",
    "GadgetConfig",
    "GadgetGraph",
    "Join",
    "Patch",
    "TriangleCheck",
    "brute_force_pmr",
    "build_hp",
    "catalog",
    "catalog_names",
    "check_gadget_graph",
    "dtp_brute_force",
    "enumerate_tf_triangles",
    "equal_sum_split",
    "fixture",
    "gen_graph_distance_instance",
    "gen_partition_instance",
    "gen_pmr_instance",
    "gen_threesat_dtp",
    "hex_distance",
    "partition_from_assignment",
    "perfect_matchings",
    "select_patches",
    "validate_triangle_partition",
    "verify_fixture",
]

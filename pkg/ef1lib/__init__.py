"""ef1lib package."""

from ef1lib.core import (
    Allocation,
    Exchange,
    Instance,
    MoveSet,
    Transfer,
    is_ef1,
    normalize_instance,
)
from ef1lib.search import (
    PathResult,
    SearchBudget,
    bfs_distance,
    ef1_reach,
    optimal_ef1_path,
)

__all__ = [
    "Allocation",
    "Exchange",
    "Instance",
    "MoveSet",
    "PathResult",
    "SearchBudget",
    "Transfer",
    "__version__",
    "bfs_distance",
    "ef1_reach",
    "is_ef1",
    "normalize_instance",
    "optimal_ef1_path",
]

__version__ = "0.1.0"

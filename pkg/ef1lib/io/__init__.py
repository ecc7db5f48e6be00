"""Import/export utilities."""

from .formats import (
    dumps_cnf,
    dumps_gadget_graph,
    load_cnf,
    load_edge_list,
    loads_cnf,
    loads_edge_list,
    save_gadget_graph,
)
from .json import (
    dumps_allocation,
    dumps_instance,
    load_allocation,
    load_instance,
    load_path,
    loads_allocation,
    loads_instance,
    path_from_dict,
    path_to_dict,
    save_allocation,
    save_instance,
)
from .schema import (
    validate_allocation_dict,
    validate_allocation_payload,
    validate_instance_dict,
    validate_instance_payload,
    validate_path_dict,
    validate_path_payload,
)

__all__ = [
    "dumps_allocation",
    "dumps_cnf",
    "dumps_gadget_graph",
    "dumps_instance",
    "load_allocation",
    "load_cnf",
    "load_edge_list",
    "load_instance",
    "load_path",
    "loads_allocation",
    "loads_cnf",
    "loads_edge_list",
    "loads_instance",
    "path_from_dict",
    "path_to_dict",
    "save_allocation",
    "save_gadget_graph",
    "save_instance",
    "validate_allocation_dict",
    "validate_allocation_payload",
    "validate_instance_dict",
    "validate_instance_payload",
    "validate_path_dict",
    "validate_path_payload",
]

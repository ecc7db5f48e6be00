"""Graph algorithms."""

from .basics import connected_components, in_out_degree, unbalanced_vertices

__all__ = ["connected_components", "in_out_degree", "unbalanced_vertices"]

"""Visualization utilities."""

from .graphviz import item_graph_to_dot

__all__ = ["item_graph_to_dot"]

"""Constructive polynomial-time EF1 path algorithms."""

from .identical_binary import path_identical_binary
from .transfers import (
    BASE_ALGORITHMS,
    choose_base_algorithm,
    path_three_heavy_xt,
    path_xt_via_dummies,
)
from .two_agents import path_two_binary, path_two_identical

__all__ = [
    "BASE_ALGORITHMS",
    "choose_base_algorithm",
    "path_identical_binary",
    "path_three_heavy_xt",
    "path_two_binary",
    "path_two_identical",
    "path_xt_via_dummies",
]

"""Locating rainbow colorings: generators, checker, exact solver and constructions."""

from .coloring import (
    CheckVerdict,
    ColorClasses,
    Coloring,
    check_locating_rainbow,
    color_classes,
    has_rainbow_vertex_path,
    is_locating,
    is_rainbow_vertex_connected,
    rainbow_code,
)
from .constructions import coloring_n2, coloring_n3, cycle_coloring, cycle_coloring_large, small_cycle_certificates
from .graph import Graph, all_pairs_distances, complete, cycle, diameter, from_edge_list, regular_n2, regular_n3, to_edge_list
from .solver import SolveOptions, SolveReport, brute_force_rvcl, lower_bound, solve_rvc, solve_rvcl

__all__ = [
    "CheckVerdict",
    "ColorClasses",
    "Coloring",
    "Graph",
    "SolveOptions",
    "SolveReport",
    "all_pairs_distances",
    "brute_force_rvcl",
    "check_locating_rainbow",
    "color_classes",
    "coloring_n2",
    "coloring_n3",
    "complete",
    "cycle",
    "cycle_coloring",
    "cycle_coloring_large",
    "diameter",
    "from_edge_list",
    "has_rainbow_vertex_path",
    "is_locating",
    "is_rainbow_vertex_connected",
    "lower_bound",
    "rainbow_code",
    "regular_n2",
    "regular_n3",
    "small_cycle_certificates",
    "solve_rvc",
    "solve_rvcl",
    "to_edge_list",
]

__version__ = "0.1.0"

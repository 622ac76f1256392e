"""Line graphs, their roots, and minimum-flip pseudo-inverses of perturbed line graphs."""

from .graph import Graph, parse_edge_list, serialize_edge_list
from .isomorphism import find_isomorphism, isomorphic
from .line import L, contains_induced_claw, is_line_graph, krausz_partition, line_graph, root
from .pinv import solve, solve_branch_and_bound, solve_enumeration, verify_solution
from .spectral import norm, spectral_radius

__all__ = [
    "Graph",
    "L",
    "contains_induced_claw",
    "find_isomorphism",
    "is_line_graph",
    "isomorphic",
    "krausz_partition",
    "line_graph",
    "norm",
    "parse_edge_list",
    "root",
    "serialize_edge_list",
    "solve",
    "solve_branch_and_bound",
    "solve_enumeration",
    "spectral_radius",
    "verify_solution",
]

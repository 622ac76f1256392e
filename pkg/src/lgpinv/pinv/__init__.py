"""Minimum-flip pseudo-inverse of a line graph: two independent engines."""

from .bnb import solve_branch_and_bound
from .enumeration import all_optimal_solutions, find_obstruction, minimal_flip_sets, preferred_flip_set, solve_enumeration
from .ilp import IlpInstance, build_ilp, check_assignment, export_lp
from .solution import ADD, REMOVE, Flip, FlipSet, PseudoInverseSolution, explain_solution, verify_solution

__all__ = [
    "ADD",
    "REMOVE",
    "Flip",
    "FlipSet",
    "IlpInstance",
    "PseudoInverseSolution",
    "all_optimal_solutions",
    "build_ilp",
    "check_assignment",
    "explain_solution",
    "export_lp",
    "find_obstruction",
    "minimal_flip_sets",
    "preferred_flip_set",
    "solve",
    "solve_branch_and_bound",
    "solve_enumeration",
    "verify_solution",
]


def solve(h_tilde, engine: str = "enum", k_max: int = 3, time_limit: float = 60.0):
    """Dispatch on ``engine`` in {"enum", "bnb"}; a non-optimal bnb run falls back to enum."""
    if engine == "enum":
        return solve_enumeration(h_tilde, k_max)
    if engine == "bnb":
        sol = solve_branch_and_bound(build_ilp(h_tilde), time_limit)
        if not sol.optimal:
            return solve_enumeration(h_tilde, k_max)
        return sol
    raise ValueError(f"unknown engine {engine!r}")

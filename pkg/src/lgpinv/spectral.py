"""Spectral radius by shifted power iteration, and the norm bounds between
G-space and H-space that the pseudo-inverse is expected to respect."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import Disconnected, EmptyGraph, NoConvergence, NotALineGraph, SmithGraphExcluded, UnknownCase
from .graph import Graph
from .line import is_line_graph, root

DEFAULT_TOL = 1e-10
SMITH_TOL = 1e-9


@dataclass(frozen=True)
class SpectralReport:
    radius: float
    iterations: int
    residual: float


def _iteration_cap(n: int) -> int:
    return 100 * n * n


def _component_radius(a: np.ndarray, tol: float) -> tuple[float, int, float]:
    n = a.shape[0]
    if n == 1:
        return 0.0, 0, 0.0
    shift = float(a.sum(axis=1).max())
    x = np.full(n, 1.0 / math.sqrt(n))
    cap = _iteration_cap(n)
    residual = math.inf
    for it in range(1, cap + 1):
        ax = a @ x
        rq = float(x @ ax)
        residual = float(np.linalg.norm(ax - rq * x))
        if residual <= tol:
            return rq, it, residual
        y = ax + shift * x
        x = y / np.linalg.norm(y)
    raise NoConvergence(f"power iteration residual {residual:.3e} after {cap} iterations")


def spectral_radius(g: Graph, tol: float = DEFAULT_TOL) -> SpectralReport:
    """Largest adjacency eigenvalue; the maximum over components if disconnected.

    Iterates on ``A + d I`` (``d`` = max degree) from the all-ones vector, so
    the iteration matrix is non-negative and bipartite components do not
    oscillate.  Stops when ``||A x - rho x|| <= tol``.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    if g.vertex_count == 0:
        raise EmptyGraph("spectral radius of the empty graph")
    a = g.adjacency_matrix().astype(float)
    best, iters, res = 0.0, 0, 0.0
    for comp in g.components:
        idx = np.array(comp)
        r, it, rs = _component_radius(a[np.ix_(idx, idx)], tol)
        iters += it
        res = max(res, rs)
        best = max(best, r)
    return SpectralReport(best, iters, res)


def norm(g: Graph, tol: float = DEFAULT_TOL) -> float:
    """Spectral radius used as the graph norm; 0 for the empty graph."""
    if g.vertex_count == 0:
        return 0.0
    return spectral_radius(g, tol).radius


def is_smith(g: Graph, tol: float = SMITH_TOL) -> bool:
    if not g.is_connected():
        raise Disconnected("Smith membership is defined for connected graphs")
    return spectral_radius(g).radius <= 2 + tol


def _smith_excluded(g: Graph, tol: float) -> bool:
    # disconnected inputs are excluded when every component has radius <= 2
    return norm(g) <= 2 + tol


# -- bound reports ----------------------------------------------------------------

BOUND_NAMES = (
    "root_bound_2",
    "pseudo_bound_3",
    "case_I_ratio",
    "case_II_equal",
    "case_III_deltaH_1",
    "case_III_deltaG_2",
    "case_IV_delta_2",
)


@dataclass(frozen=True)
class BoundReport:
    bound_name: str
    lhs: float
    rhs: float
    satisfied: bool
    lower: float | None = None  # strict lower bound on lhs, when the statement has one

    @property
    def slack(self) -> float:
        return self.rhs - self.lhs

    def csv_row(self) -> str:
        return f"{self.bound_name},{self.lhs!r},{self.rhs!r},{str(self.satisfied).lower()}"


def _report(name: str, lhs: float, rhs: float, tol: float, lower: float | None = None) -> BoundReport:
    ok = lhs <= rhs + tol and (lower is None or lhs > lower)
    return BoundReport(name, lhs, rhs, ok, lower)


def check_root_bound(h: Graph, tol: float = SMITH_TOL, exclude_smith: bool = True) -> BoundReport:
    """Compare ``||root(h)||`` against ``2 ||h||``."""
    if not is_line_graph(h):
        raise NotALineGraph("root bound needs a line graph")
    if exclude_smith and _smith_excluded(h, tol):
        raise SmithGraphExcluded("spectral radius <= 2")
    g = root(h).roots[0]
    return _report("root_bound_2", norm(g), 2 * norm(h), tol)


def check_pseudo_bound(h_tilde: Graph, solution, tol: float = SMITH_TOL, exclude_smith: bool = True) -> BoundReport:
    """Compare ``||g_hat||`` against ``3 ||h_tilde||`` for a solved instance."""
    if exclude_smith and _smith_excluded(h_tilde, tol):
        raise SmithGraphExcluded("spectral radius <= 2")
    return _report("pseudo_bound_3", norm(solution.g_hat), 3 * norm(h_tilde), tol)


def case_bounds_from_norms(
    norm_g: float, norm_g_hat: float, norm_h: float, norm_h_hat: float, case_label, tol: float = SMITH_TOL
) -> list[BoundReport]:
    label = getattr(case_label, "value", case_label)
    dh = norm_h_hat - norm_h
    dg = norm_g_hat - norm_g
    if label == "I":
        return [_report("case_I_ratio", abs(dh), 1.0, tol)]
    if label == "II":
        return [_report("case_II_equal", max(abs(dh), abs(dg)), 0.0, tol)]
    if label == "III":
        return [
            _report("case_III_deltaH_1", abs(dh), 1.0, tol),
            _report("case_III_deltaG_2", abs(dg), 2.0, tol),
        ]
    if label == "IV":
        return [_report("case_IV_delta_2", dh, 2.0, tol, lower=0.0)]
    raise UnknownCase(f"no perturbation bound for case {label!r}")


def case_bound_report(g: Graph, g_hat: Graph, h: Graph, h_hat: Graph, case_label, tol: float = SMITH_TOL) -> list[BoundReport]:
    """Perturbation bounds for a classified single-edge instance.

    Case III carries two statements (H-space and G-space) and therefore
    returns two reports; every other case returns one.
    """
    return case_bounds_from_norms(norm(g), norm(g_hat), norm(h), norm(h_hat), case_label, tol)

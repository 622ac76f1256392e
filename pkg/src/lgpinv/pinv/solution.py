from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from ..graph import Edge, Graph, norm_pair
from ..line import is_line_graph

ADD = "add"
REMOVE = "remove"


@dataclass(frozen=True, order=True)
class Flip:
    u: int
    v: int
    kind: str  # ADD or REMOVE

    @property
    def pair(self) -> Edge:
        return (self.u, self.v)


@dataclass(frozen=True)
class FlipSet:
    """Edge edits relative to a fixed graph, sorted by vertex pair."""

    flips: tuple[Flip, ...] = ()

    @classmethod
    def from_pairs(cls, g: Graph, pairs: Iterable[Edge]) -> FlipSet:
        out = []
        for u, v in sorted({norm_pair(*p) for p in pairs}):
            if u == v:
                raise ValueError(f"diagonal pair {(u, v)}")
            out.append(Flip(u, v, REMOVE if (u, v) in g.edges else ADD))
        return cls(tuple(out))

    @property
    def pairs(self) -> tuple[Edge, ...]:
        return tuple(f.pair for f in self.flips)

    @property
    def adds(self) -> tuple[Edge, ...]:
        return tuple(f.pair for f in self.flips if f.kind == ADD)

    @property
    def removes(self) -> tuple[Edge, ...]:
        return tuple(f.pair for f in self.flips if f.kind == REMOVE)

    def __len__(self) -> int:
        return len(self.flips)

    def consistent_with(self, g: Graph) -> bool:
        return all(
            f.u != f.v and ((f.pair in g.edges) == (f.kind == REMOVE)) for f in self.flips
        ) and len(set(self.pairs)) == len(self.flips)

    def apply(self, g: Graph) -> Graph:
        return g.with_flips(self.pairs)

    def __str__(self) -> str:
        if not self.flips:
            return "(none)"
        return " ".join(f"{'+' if f.kind == ADD else '-'}{f.u}-{f.v}" for f in self.flips)


@dataclass(frozen=True)
class PseudoInverseSolution:
    flips: FlipSet
    h_hat: Graph
    g_hat: Graph
    objective: int
    engine: str  # "enumeration" or "branch_and_bound"
    # edge_map[i] is the g_hat edge standing for vertex i of h_hat
    edge_map: tuple[Edge, ...] = ()
    stats: dict = field(default_factory=dict, compare=False)

    @property
    def optimal(self) -> bool:
        return self.stats.get("optimal", True)


def incidence_from_edge_map(n_rows: int, edge_map: tuple[Edge, ...]) -> np.ndarray:
    b = np.zeros((n_rows, len(edge_map)), dtype=np.int64)
    for j, (r1, r2) in enumerate(edge_map):
        b[r1, j] = b[r2, j] = 1
    return b


def explain_solution(h_tilde: Graph, sol: PseudoInverseSolution) -> str | None:
    """Return a description of the first violated condition, or None if valid."""
    m = h_tilde.vertex_count
    if not sol.flips.consistent_with(h_tilde):
        return "flip tags disagree with the adjacency of h_tilde"
    if sol.objective != len(sol.flips):
        return f"objective {sol.objective} != {len(sol.flips)} flips"
    if sol.flips.apply(h_tilde) != sol.h_hat:
        return "h_hat is not h_tilde with the flips applied"
    if not is_line_graph(sol.h_hat):
        return "h_hat is not a line graph"
    if len(sol.edge_map) != m:
        return f"edge map has {len(sol.edge_map)} entries, expected {m}"
    if frozenset(norm_pair(*e) for e in sol.edge_map) != sol.g_hat.edges or len(set(sol.edge_map)) != m:
        return "edge map does not enumerate the edges of g_hat"
    # B'B = A + 2I + X o Z, over the integers, with one zero row appended
    b = incidence_from_edge_map(sol.g_hat.vertex_count + 1, sol.edge_map)
    lhs = b.T @ b
    a = h_tilde.adjacency_matrix()
    xz = np.zeros((m, m), dtype=np.int64)
    for f in sol.flips.flips:
        z = 1 if f.kind == ADD else -1
        xz[f.u, f.v] = xz[f.v, f.u] = z
    rhs = a + 2 * np.eye(m, dtype=np.int64) + xz
    bad = np.argwhere(lhs != rhs)
    if len(bad):
        i, j = bad[0]
        return f"B'B[{i},{j}] = {lhs[i, j]} but A + 2I + XoZ gives {rhs[i, j]}"
    return None


def verify_solution(h_tilde: Graph, sol: PseudoInverseSolution) -> bool:
    return explain_solution(h_tilde, sol) is None

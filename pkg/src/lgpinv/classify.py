"""Case labels for perturbed line graphs and the G-space edit behind them."""

from __future__ import annotations

from enum import Enum

from .errors import InconsistentInputs, NotALineGraph
from .graph import (
    Graph,
    merge_degree1_vertices,
    relocate_edge,
    split_degree2_vertex,
)
from .isomorphism import isomorphic
from .line import is_line_graph
from .pinv.solution import ADD, FlipSet, PseudoInverseSolution


class CaseLabel(str, Enum):
    I = "I"  # h_tilde already a line graph
    II = "II"  # undo: h_hat isomorphic to h
    III = "III"  # a different edge removed
    IV = "IV"  # a second edge added
    DEL = "DEL"  # multi-edge perturbation, removals only, h_hat not ~ h
    ADD = "ADD"  # multi-edge perturbation, at least one addition

    def __str__(self) -> str:
        return self.value


class MechanismLabel(str, Enum):
    MERGE_VERTICES = "MergeVertices"
    TRIANGLE_CLOSING = "TriangleClosing"  # an edge relocation of the triangle-closing kind
    RELOCATE_EDGE = "RelocateEdge"
    MERGE_AND_SPLIT = "MergeAndSplit"
    UNDETERMINED = "Undetermined"

    def __str__(self) -> str:
        return self.value


def is_mixed(sol: PseudoInverseSolution) -> bool:
    return bool(sol.flips.adds) and bool(sol.flips.removes)


def classify_case(h: Graph, h_tilde: Graph, sol: PseudoInverseSolution, added: FlipSet) -> CaseLabel:
    """Which of the four outcomes (or the two multi-edge groups) ``sol`` realises."""
    if any(f.kind != ADD for f in added.flips) or not added.consistent_with(h):
        raise InconsistentInputs("perturbation must consist of additions of non-edges of h")
    if added.apply(h) != h_tilde:
        raise InconsistentInputs("h_tilde is not h with the perturbation applied")
    if sol.h_hat.vertex_count != h_tilde.vertex_count:
        raise InconsistentInputs("solution lives on a different vertex set")
    single = len(added) == 1
    if isomorphic(sol.h_hat, h_tilde):
        if isomorphic(sol.h_hat, h):
            raise InconsistentInputs("h_hat, h_tilde and h are all isomorphic")
        return CaseLabel.I
    if not sol.flips.adds:
        if isomorphic(sol.h_hat, h):
            return CaseLabel.II
        return CaseLabel.III if single else CaseLabel.DEL
    return CaseLabel.IV if single else CaseLabel.ADD


# -- mechanism search -------------------------------------------------------------


def _signature(g: Graph) -> tuple[int, tuple[int, ...]]:
    degs = sorted(d for d in g.degrees if d)
    return sum(degs) // 2, tuple(degs)


def _matches(candidate: Graph, target: Graph, target_sig) -> bool:
    if _signature(candidate) != target_sig:
        return False
    return isomorphic(candidate.without_isolated(), target)


def _degree1_merges(g: Graph):
    leaves = [v for v in range(g.vertex_count) if g.degrees[v] == 1]
    for i, a in enumerate(leaves):
        for b in leaves[i + 1:]:
            if g.has_edge(a, b) or g.adj[a] == g.adj[b]:
                continue
            yield merge_degree1_vertices(g, a, b)


def _triangle_closing_moves(g: Graph):
    for p, q in g.sorted_edges:
        if g.degrees[p] != 2 or g.degrees[q] != 2:
            continue
        (x,) = g.adj[p] - {q}
        (y,) = g.adj[q] - {p}
        if x == y:
            continue
        yield relocate_edge(g, (q, y), (p, y))
        yield relocate_edge(g, (p, x), (q, x))


def _relocations(g: Graph, target_sig):
    degs = list(g.degrees)
    want = target_sig[1]
    non_edges = list(g.non_edges())
    for s in g.sorted_edges:
        for t in non_edges:
            d = list(degs)
            d[s[0]] -= 1
            d[s[1]] -= 1
            d[t[0]] += 1
            d[t[1]] += 1
            if tuple(sorted(x for x in d if x)) != want:
                continue
            yield relocate_edge(g, s, t)


def classify_mechanism(g: Graph, g_hat: Graph) -> MechanismLabel:
    """First G-space edit (in a fixed order) turning ``g`` into ``g_hat`` up to isomorphism.

    Order: degree-1 merge, triangle-closing relocation, any relocation,
    merge followed by a split.  Isolated vertices are ignored on both sides;
    if the two graphs already agree no edit is reported.
    """
    target = g_hat.without_isolated()
    sig = _signature(target)
    if _matches(g, target, sig):
        return MechanismLabel.UNDETERMINED
    for cand in _degree1_merges(g):
        if _matches(cand, target, sig):
            return MechanismLabel.MERGE_VERTICES
    for cand in _triangle_closing_moves(g):
        if _matches(cand, target, sig):
            return MechanismLabel.TRIANGLE_CLOSING
    for cand in _relocations(g, sig):
        if _matches(cand, target, sig):
            return MechanismLabel.RELOCATE_EDGE
    for merged in _degree1_merges(g):
        for c in range(merged.vertex_count):
            if merged.degrees[c] == 2 and _matches(split_degree2_vertex(merged, c), target, sig):
                return MechanismLabel.MERGE_AND_SPLIT
    return MechanismLabel.UNDETERMINED


def relocation_witnesses(g: Graph, g_hat: Graph) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    """All single-edge relocations ``(source, target)`` of ``g`` isomorphic to ``g_hat``."""
    target = g_hat.without_isolated()
    sig = _signature(target)
    out = []
    for s in g.sorted_edges:
        for t in g.non_edges():
            if _matches(relocate_edge(g, s, t), target, sig):
                out.append((s, t))
    return out


def triangle_closing_sites(h: Graph) -> list[tuple[int, int, int]]:
    """Triples ``(a, c, b)``: ``c`` has degree 2 and its neighbours ``a < b`` are not adjacent."""
    if not is_line_graph(h):
        raise NotALineGraph("triangle closing sites are defined on line graphs")
    sites = []
    for c in range(h.vertex_count):
        if h.degrees[c] != 2:
            continue
        a, b = sorted(h.adj[c])
        if not h.has_edge(a, b):
            sites.append((a, c, b))
    return sites


__all__ = [
    "CaseLabel",
    "MechanismLabel",
    "classify_case",
    "classify_mechanism",
    "is_mixed",
    "relocation_witnesses",
    "triangle_closing_sites",
]

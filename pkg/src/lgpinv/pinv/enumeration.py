"""Exact pseudo-inverse by enumerating flip sets of increasing size.

Two strategies are available.  ``"brute"`` tries every set of ``k`` vertex
pairs in lexicographic order.  ``"obstruction"`` (the default) only branches
on pairs inside a minimal non-line induced subgraph: a flip outside that
vertex set leaves the obstruction intact, so every minimal flip set must
touch it.  Both strategies return every flip set of the minimum size.

Among tied optima the solver prefers the fewest additions (an undo of a
spurious edge beats inventing a new one), then the lexicographically
smallest sorted pair list, so both strategies agree exactly.
"""

from __future__ import annotations

import time
from itertools import combinations

from ..errors import BudgetExhausted
from ..graph import Edge, Graph
from ..line import _krausz_search, contains_induced_claw, root
from .solution import FlipSet, PseudoInverseSolution


def find_obstruction(h: Graph) -> tuple[int, ...] | None:
    """Vertex set of a minimal non-line induced subgraph, or None for line graphs."""
    claw = contains_induced_claw(h)
    if claw is not None:
        return claw
    for comp in h.components:
        sub = h.induced_subgraph(comp)
        if _krausz_search(sub)[0] is not None:
            continue
        keep = list(comp)
        for v in comp:
            trial = [w for w in keep if w != v]
            if _krausz_search(h.induced_subgraph(trial))[0] is None:
                keep = trial
        return tuple(keep)
    return None


def _search_obstruction(h: Graph, budget: int) -> set[tuple[Edge, ...]]:
    found: set[tuple[Edge, ...]] = set()
    visited: set[frozenset[Edge]] = set()

    def rec(cur: Graph, chosen: frozenset[Edge], left: int) -> None:
        if chosen in visited:
            return
        visited.add(chosen)
        obs = find_obstruction(cur)
        if obs is None:
            found.add(tuple(sorted(chosen)))
            return
        if left == 0:
            return
        for pair in combinations(sorted(obs), 2):
            if pair in chosen:
                continue
            rec(cur.with_flips([pair]), chosen | {pair}, left - 1)

    rec(h, frozenset(), budget)
    return {s for s in found if len(s) == budget}


def _all_pairs(n: int) -> list[Edge]:
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


def _search_brute(h: Graph, budget: int) -> list[tuple[Edge, ...]]:
    out = []
    for combo in combinations(_all_pairs(h.vertex_count), budget):
        cand = h.with_flips(combo)
        if contains_induced_claw(cand) is None and _krausz_search(cand)[0] is not None:
            out.append(combo)
    return out


def minimal_flip_sets(h_tilde: Graph, k_max: int = 3, strategy: str = "obstruction") -> tuple[int, list[tuple[Edge, ...]]]:
    """Minimum flip count and all minimum flip sets, sorted lexicographically."""
    if k_max < 0:
        raise ValueError("k_max must be non-negative")
    for k in range(k_max + 1):
        if strategy == "obstruction":
            sols = sorted(_search_obstruction(h_tilde, k))
        elif strategy == "brute":
            sols = _search_brute(h_tilde, k)
        else:
            raise ValueError(f"unknown strategy {strategy!r}")
        if sols:
            return k, sols
    raise BudgetExhausted(k_max)


def solution_from_pairs(h_tilde: Graph, pairs, engine: str, stats: dict | None = None) -> PseudoInverseSolution:
    flips = FlipSet.from_pairs(h_tilde, pairs)
    h_hat = flips.apply(h_tilde)
    rr = root(h_hat)
    return PseudoInverseSolution(
        flips=flips,
        h_hat=h_hat,
        g_hat=rr.roots[0],
        objective=len(flips),
        engine=engine,
        edge_map=rr.edge_maps[0],
        stats=dict(stats or {}),
    )


def preferred_flip_set(h_tilde: Graph, sols: list[tuple[Edge, ...]]) -> tuple[Edge, ...]:
    return min(sols, key=lambda s: (sum(not h_tilde.has_edge(u, v) for u, v in s), s))


def solve_enumeration(h_tilde: Graph, k_max: int = 3, strategy: str = "obstruction") -> PseudoInverseSolution:
    """Minimum-flip line graph nearest to ``h_tilde``.

    Ties go to the fewest additions, then the lexicographically smallest
    sorted pair list.  Raises :class:`BudgetExhausted` if more than
    ``k_max`` flips are needed.
    """
    t0 = time.perf_counter()
    k, sols = minimal_flip_sets(h_tilde, k_max, strategy)
    stats = {"wall_time": time.perf_counter() - t0, "optimal": True, "n_optima": len(sols), "strategy": strategy}
    return solution_from_pairs(h_tilde, preferred_flip_set(h_tilde, sols), "enumeration", stats)


def all_optimal_solutions(h_tilde: Graph, k_max: int = 3) -> list[PseudoInverseSolution]:
    _, sols = minimal_flip_sets(h_tilde, k_max)
    return [solution_from_pairs(h_tilde, s, "enumeration") for s in sols]

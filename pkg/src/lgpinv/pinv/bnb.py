"""Combinatorial branch-and-bound for the linearised flip program.

The search assigns incidence columns one at a time.  The diagonal
constraint forces every column to hold exactly two ones, so a branch picks a
pair of root rows for the column.  Given the rows of all earlier columns,
each flip variable ``x_s_t`` is fixed by propagation (a pair of columns
either shares a row or not, and the flip is needed exactly when that
disagrees with ``a_st``), and so is every product variable ``p``.  The flip
count accumulated so far is the bound.

Optimality is proved by iterative deepening on the flip budget: budgets
``0, 1, ...`` are searched exhaustively below the incumbent from a greedy
first dive.

Rows are kept in non-increasing lexicographic order (columns read in search
order), which removes the permutation symmetry of the root vertices.
Columns are searched in breadth-first order of each component so that most
columns meet an already placed neighbour early.
"""

from __future__ import annotations

import time
from collections import deque

from ..errors import TimeLimit
from ..graph import Edge, Graph, norm_pair
from .ilp import IlpInstance
from .solution import FlipSet, PseudoInverseSolution


class _OutOfTime(Exception):
    pass


def _bfs_order(g: Graph) -> list[int]:
    seen = [False] * g.vertex_count
    order = []
    for s in range(g.vertex_count):
        if seen[s]:
            continue
        seen[s] = True
        q = deque([s])
        while q:
            u = q.popleft()
            order.append(u)
            for w in sorted(g.adj[u]):
                if not seen[w]:
                    seen[w] = True
                    q.append(w)
    return order


class _ComponentSearch:
    def __init__(self, sub: Graph, rows: int, deadline: float):
        self.order = _bfs_order(sub)
        pos = {v: t for t, v in enumerate(self.order)}
        self.m = sub.vertex_count
        self.rows = rows
        self.deadline = deadline
        self.prev_adj = []
        for t, v in enumerate(self.order):
            mask = 0
            for w in sub.adj[v]:
                if pos[w] < t:
                    mask |= 1 << pos[w]
            self.prev_adj.append(mask)
        self.nodes = 0

    def run(self, budget: float) -> list[tuple[int, int]] | None:
        """Row pairs per search position for a solution with cost <= budget."""
        rows = self.rows
        rowmask = [0] * rows
        eq = [True] * max(rows - 1, 0)
        chosen: list[tuple[int, int]] = []
        m = self.m
        prev_adj = self.prev_adj

        def dfs(t: int, cost: int, used: int) -> bool:
            self.nodes += 1
            if self.nodes & 1023 == 0 and time.perf_counter() > self.deadline:
                raise _OutOfTime
            if t == m:
                return True
            lim = min(used + 2, rows)
            cands = []
            want = prev_adj[t]
            for r1 in range(lim - 1):
                if r1 > 0 and eq[r1 - 1]:
                    continue
                m1 = rowmask[r1]
                for r2 in range(r1 + 1, lim):
                    if eq[r2 - 1] and r2 - 1 != r1:
                        continue
                    m2 = rowmask[r2]
                    if m1 & m2:
                        continue
                    delta = ((m1 | m2) ^ want).bit_count()
                    if cost + delta <= budget:
                        cands.append((delta, r1, r2))
            cands.sort()
            bit = 1 << t
            for delta, r1, r2 in cands:
                touched = {i for i in (r1 - 1, r1, r2 - 1, r2) if 0 <= i < rows - 1}
                saved = [(i, eq[i]) for i in touched]
                rowmask[r1] |= bit
                rowmask[r2] |= bit
                for i in touched:
                    if eq[i] and (rowmask[i] & bit) != (rowmask[i + 1] & bit):
                        eq[i] = False
                chosen.append((r1, r2))
                if dfs(t + 1, cost + delta, max(used, r2 + 1)):
                    return True
                chosen.pop()
                rowmask[r1] ^= bit
                rowmask[r2] ^= bit
                for i, val in saved:
                    eq[i] = val
            return False

        if dfs(0, 0, 0):
            return list(chosen)
        return None

    def flips_and_map(self, chosen: list[tuple[int, int]]) -> tuple[list[Edge], dict[int, tuple[int, int]]]:
        flips = []
        for t in range(self.m):
            rt = set(chosen[t])
            for s in range(t):
                shared = len(rt & set(chosen[s])) == 1
                adjacent = bool((self.prev_adj[t] >> s) & 1)
                if shared != adjacent:
                    flips.append(norm_pair(self.order[s], self.order[t]))
        return flips, {self.order[t]: chosen[t] for t in range(self.m)}


def solve_branch_and_bound(inst: IlpInstance, time_limit: float = 60.0) -> PseudoInverseSolution:
    """Solve ``inst`` to proven optimality, one connected component at a time.

    If ``time_limit`` seconds pass first, the best incumbent is returned with
    ``stats["optimal"] = False``.
    """
    t0 = time.perf_counter()
    deadline = t0 + time_limit
    h = inst.h_tilde
    all_flips: list[Edge] = []
    edge_map: list[Edge] = [(-1, -1)] * h.vertex_count
    offset = 0
    nodes = 0
    optimal = True
    for comp in h.components:
        sub = h.induced_subgraph(comp)
        # the repaired component may fall apart into trees, each needing one spare row
        rows = min(inst.n, max(2, 2 * sub.vertex_count))
        search = _ComponentSearch(sub, rows, deadline)
        try:
            best = search.run(float("inf"))
        except _OutOfTime:
            raise TimeLimit("no incumbent before the time limit") from None
        if best is None:
            raise TimeLimit(f"component {comp[:5]}... infeasible with {rows} rows")
        best_flips, _ = search.flips_and_map(best)
        try:
            for budget in range(len(best_flips)):
                found = search.run(budget)
                if found is not None:
                    best = found
                    break
        except _OutOfTime:
            optimal = False
        nodes += search.nodes
        flips, local_map = search.flips_and_map(best)
        all_flips += [norm_pair(comp[u], comp[v]) for u, v in flips]
        for local, (r1, r2) in local_map.items():
            edge_map[comp[local]] = (r1 + offset, r2 + offset)
        offset += 1 + max(r for pair in local_map.values() for r in pair)
    flipset = FlipSet.from_pairs(h, all_flips)
    stats = {"nodes": nodes, "wall_time": time.perf_counter() - t0, "optimal": optimal}
    return PseudoInverseSolution(
        flips=flipset,
        h_hat=flipset.apply(h),
        g_hat=Graph(offset, frozenset(edge_map)),
        objective=len(flipset),
        engine="branch_and_bound",
        edge_map=tuple(edge_map),
        stats=stats,
    )

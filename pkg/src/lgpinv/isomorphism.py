"""Graph isomorphism by colour refinement and individualisation.

Both graphs are refined together on their disjoint union so that colour ids
are directly comparable.  A colour class whose size differs between the two
sides proves non-isomorphism; otherwise one vertex of the smallest
non-trivial class is individualised against every candidate on the other
side, and the search recurses.
"""

from __future__ import annotations

from collections import Counter

from .graph import Graph


def _refine(adj: list[list[int]], colors: list[int]) -> list[int]:
    n_classes = len(set(colors))
    while True:
        keys = [(colors[v], tuple(sorted(colors[w] for w in adj[v]))) for v in range(len(adj))]
        index = {k: i for i, k in enumerate(sorted(set(keys)))}
        new = [index[k] for k in keys]
        if len(index) == n_classes:
            return new
        colors, n_classes = new, len(index)


def _balanced(colors: list[int], n1: int) -> bool:
    return Counter(colors[:n1]) == Counter(colors[n1:])


def find_isomorphism(g1: Graph, g2: Graph) -> list[int] | None:
    """Return ``mapping`` with ``mapping[v]`` the image of g1-vertex ``v``, or None."""
    n1 = g1.vertex_count
    if n1 != g2.vertex_count or g1.m != g2.m:
        return None
    if sorted(g1.degrees) != sorted(g2.degrees):
        return None
    if n1 == 0:
        return []
    adj = [sorted(g1.adj[v]) for v in range(n1)] + [[w + n1 for w in g2.adj[v]] for v in range(n1)]
    colors = _refine(adj, list(g1.degrees) + list(g2.degrees))
    if not _balanced(colors, n1):
        return None
    return _search(adj, colors, n1, g1, g2)


def _search(adj, colors, n1, g1: Graph, g2: Graph):
    counts = Counter(colors[:n1])
    open_classes = [c for c, k in counts.items() if k > 1]
    if not open_classes:
        where = {colors[n1 + v]: v for v in range(n1)}
        mapping = [where[colors[v]] for v in range(n1)]
        ok = all(g2.has_edge(mapping[u], mapping[v]) for u, v in g1.edges)
        return mapping if ok else None
    target = min(open_classes, key=lambda c: (counts[c], c))
    v = next(i for i in range(n1) if colors[i] == target)
    fresh = max(colors) + 1
    for w in range(n1, 2 * n1):
        if colors[w] != target:
            continue
        trial = list(colors)
        trial[v] = trial[w] = fresh
        trial = _refine(adj, trial)
        if not _balanced(trial, n1):
            continue
        found = _search(adj, trial, n1, g1, g2)
        if found is not None:
            return found
    return None


def isomorphic(g1: Graph, g2: Graph) -> bool:
    return find_isomorphism(g1, g2) is not None

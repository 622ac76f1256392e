"""Vertex and edge counts of line graphs under single edits of the root."""

import random

from hypothesis import given, settings
from hypothesis import strategies as st

from lgpinv.graph import Graph, add_edge, del_edge, merge_degree1_vertices, relocate_edge, split_degree2_vertex
from lgpinv.line import L

EDITS = ("add", "delete", "relocate", "merge", "split")


def relocation_delta(g: Graph, source, target) -> int:
    """Edge change of L under moving ``source`` to ``target``.

    Deleting ``source`` then adding ``target`` counts degrees in the
    intermediate graph, so endpoints shared by the two pairs lose one.
    """
    a, b = source
    u, v = target
    shared = len({a, b} & {u, v})
    return g.degrees[u] + g.degrees[v] - g.degrees[a] - g.degrees[b] + 2 - shared


def apply_random_edit(g: Graph, rng: random.Random):
    """Pick an applicable edit; returns ``(name, new graph, expected dV, expected dE)``."""
    order = list(EDITS)
    rng.shuffle(order)
    for kind in order:
        if kind == "add":
            non = list(g.non_edges())
            if non:
                u, v = rng.choice(non)
                return kind, add_edge(g, u, v), 1, g.degrees[u] + g.degrees[v]
        elif kind == "delete" and g.m:
            u, v = rng.choice(g.sorted_edges)
            return kind, del_edge(g, u, v), -1, -(g.degrees[u] + g.degrees[v]) + 2
        elif kind == "relocate" and g.m:
            non = list(g.non_edges())
            if non:
                s, t = rng.choice(g.sorted_edges), rng.choice(non)
                return kind, relocate_edge(g, s, t), 0, relocation_delta(g, s, t)
        elif kind == "merge":
            leaves = [v for v in range(g.vertex_count) if g.degrees[v] == 1]
            pairs = [(a, b) for a in leaves for b in leaves if a < b and not g.has_edge(a, b) and g.adj[a] != g.adj[b]]
            if pairs:
                a, b = rng.choice(pairs)
                return kind, merge_degree1_vertices(g, a, b), 0, 1
        elif kind == "split":
            mids = [c for c in range(g.vertex_count) if g.degrees[c] == 2]
            if mids:
                return kind, split_degree2_vertex(g, rng.choice(mids)), 0, -1
    return None


def check_pair(g: Graph, rng: random.Random):
    res = apply_random_edit(g, rng)
    if res is None:
        return None
    kind, g2, dv, de = res
    h1, h2 = L(g), L(g2)
    assert h2.vertex_count - h1.vertex_count == dv, kind
    assert h2.m - h1.m == de, kind
    return kind


def random_pairs(count: int, seed: int):
    rng = random.Random(seed)
    kinds = []
    while len(kinds) < count:
        n = rng.randint(2, 12)
        g = Graph(n, frozenset((u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < rng.uniform(0.1, 0.6)))
        kind = check_pair(g, rng)
        if kind is not None:
            kinds.append(kind)
    return kinds


def test_counting_identities_1000_pairs():
    kinds = random_pairs(1000, 314)
    assert set(kinds) == set(EDITS)


def test_shared_endpoint_relocation():
    # an edge swinging around a shared endpoint: only the far ends matter
    g = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
    g2 = relocate_edge(g, (2, 3), (2, 4))
    assert L(g2).m - L(g).m == g.degrees[4] - g.degrees[3] + 1 == relocation_delta(g, (2, 3), (2, 4))


@settings(max_examples=200, deadline=None)
@given(st.integers(2, 10), st.floats(0.05, 0.9), st.integers(0, 2**32 - 1))
def test_counting_identities_hypothesis(n, p, seed):
    rng = random.Random(seed)
    g = Graph(n, frozenset((u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p))
    check_pair(g, rng)

import random
from itertools import combinations

import networkx as nx
import pytest

from lgpinv.classify import relocation_witnesses
from lgpinv.errors import NotALineGraph
from lgpinv.graph import Graph, add_edge, complete_graph, cycle_graph, merge_degree1_vertices, path_graph, star_graph
from lgpinv.isomorphism import isomorphic
from lgpinv.line import (
    L,
    contains_induced_claw,
    is_line_graph,
    krausz_partition,
    line_graph,
    root,
)

from conftest import from_nx, random_connected, random_graph, to_nx


def fig6_h() -> Graph:
    # 1-indexed edges 1-2, 2-3, 2-4, 3-4, 4-5, 5-6 shifted to 0-indexed
    return Graph.from_edges(6, [(0, 1), (1, 2), (1, 3), (2, 3), (3, 4), (4, 5)])


def brute_claw(h: Graph) -> bool:
    for c in range(h.vertex_count):
        for a, b, d in combinations(sorted(h.adj[c]), 3):
            if not (h.has_edge(a, b) or h.has_edge(a, d) or h.has_edge(b, d)):
                return True
    return False


def test_line_graph_examples():
    assert isomorphic(L(path_graph(3)), complete_graph(2))
    assert isomorphic(L(star_graph(3)), complete_graph(3))
    for n in range(4, 9):
        assert isomorphic(L(cycle_graph(n)), cycle_graph(n))
    assert L(Graph(4, frozenset())).vertex_count == 0


def test_line_graph_edge_map_and_counts():
    rng = random.Random(1)
    for _ in range(100):
        g = random_graph(rng, rng.randint(1, 10), 0.4)
        res = line_graph(g)
        h = res.h
        assert h.vertex_count == g.m
        assert h.m == sum(d * (d - 1) // 2 for d in g.degrees)
        for i, j in combinations(range(h.vertex_count), 2):
            share = bool(set(res.edge_map[i]) & set(res.edge_map[j]))
            assert h.has_edge(i, j) == share
        assert isomorphic(h, from_nx(nx.line_graph(to_nx(g))))


def test_claw_examples():
    hub, *leaves = contains_induced_claw(star_graph(3))
    assert hub == 0 and sorted(leaves) == [1, 2, 3]
    assert contains_induced_claw(complete_graph(3)) is None
    w = contains_induced_claw(star_graph(4))
    assert w is not None and w[0] == 0


def test_krausz_examples():
    with pytest.raises(NotALineGraph) as err:
        krausz_partition(star_graph(3))
    assert err.value.witness is not None
    part = krausz_partition(complete_graph(3))
    assert sorted(len(c) for c in part.cliques) in ([3], [2, 2, 2])


def _check_partition(h: Graph, part):
    seen = {}
    for e, idx in part.assignment.items():
        assert set(e) <= part.cliques[idx]
    assert set(part.assignment) == set(h.edges)
    for c in part.cliques:
        for u, v in combinations(sorted(c), 2):
            assert h.has_edge(u, v)
        for v in c:
            seen[v] = seen.get(v, 0) + 1
    assert all(k <= 2 for k in seen.values())


def test_krausz_on_random_trees():
    rng = random.Random(2)
    for _ in range(100):
        t = from_nx(nx.random_labeled_tree(8, seed=rng.randrange(10**9)))
        h = L(t)
        _check_partition(h, krausz_partition(h))


def test_root_examples():
    res = root(complete_graph(3))
    assert res.ambiguous
    assert isomorphic(res.roots[0], star_graph(3)) and isomorphic(res.roots[1], complete_graph(3))
    assert isomorphic(root(complete_graph(2)).roots[0], path_graph(3))
    assert not root(path_graph(4)).ambiguous
    with pytest.raises(NotALineGraph):
        root(star_graph(3))
    # isolated H-vertices become K2 components
    r = root(Graph(2, frozenset())).roots[0]
    assert r.vertex_count == 4 and r.m == 2


def test_root_round_trip():
    rng = random.Random(3)
    count = 0
    while count < 200:
        g = random_connected(rng, rng.randint(4, 10), 0.35)
        if g.m < 4:
            continue
        count += 1
        res = root(L(g))
        assert not res.ambiguous
        assert isomorphic(res.roots[0].without_isolated(), g)
        assert isomorphic(L(res.roots[0]), L(g))


def test_root_edge_map_matches():
    rng = random.Random(4)
    for _ in range(50):
        h = L(random_graph(rng, 9, 0.3))
        res = root(h)
        for r, emap in zip(res.roots, res.edge_maps):
            again = line_graph(Graph(r.vertex_count, frozenset(emap)))
            assert isomorphic(again.h, h)
            for i, j in combinations(range(h.vertex_count), 2):
                assert h.has_edge(i, j) == bool(set(emap[i]) & set(emap[j]))


def test_is_line_graph_on_line_graphs():
    rng = random.Random(5)
    for _ in range(500):
        assert is_line_graph(L(random_graph(rng, rng.randint(1, 9), rng.random())))
    assert not is_line_graph(star_graph(3))


def test_fig6_additions():
    h = fig6_h()
    assert is_line_graph(h)
    bad = add_edge(h, 0, 3)
    assert brute_claw(bad) and not is_line_graph(bad)
    for u, v in [(0, 2), (2, 5), (0, 5)]:
        assert is_line_graph(add_edge(h, u, v))


def test_whitney_small_exhaustive():
    graphs = []
    for n in range(2, 5):
        pairs = list(combinations(range(n), 2))
        for mask in range(1, 1 << len(pairs)):
            g = Graph(n, frozenset(p for i, p in enumerate(pairs) if mask >> i & 1))
            if g.is_connected() and not any(isomorphic(g, o) for o in graphs):
                graphs.append(g)
    ambiguous = []
    for a, b in combinations(graphs, 2):
        if isomorphic(L(a), L(b)):
            ambiguous.append((a, b))
    assert len(ambiguous) == 1
    a, b = ambiguous[0]
    assert {a.m, b.m} == {3} and {isomorphic(a, star_graph(3)), isomorphic(b, star_graph(3))} == {True, False}


def test_whitney_random():
    rng = random.Random(8)
    gs = [random_connected(rng, rng.randint(3, 6), 0.5) for _ in range(150)]
    gs = [g for g in gs if g.m >= 4]
    for a, b in combinations(gs[:80], 2):
        if isomorphic(L(a), L(b)):
            assert isomorphic(a, b)


def test_triangle_closing_keeps_line_graph():
    rng = random.Random(10)
    for _ in range(200):
        g = random_connected(rng, rng.randint(4, 9), 0.3)
        h = L(g)
        for c in range(h.vertex_count):
            if h.degrees[c] != 2:
                continue
            a, b = sorted(h.adj[c])
            if h.has_edge(a, b):
                continue
            h2 = add_edge(h, a, b)
            assert is_line_graph(h2)
            g2 = root(h2).roots[0]
            assert g2.m == g.m
            assert relocation_witnesses(g, g2)


def test_merge_is_edge_addition_in_line_space():
    rng = random.Random(12)
    tested = 0
    for _ in range(300):
        g = random_graph(rng, rng.randint(4, 9), 0.3)
        leaves = [v for v in range(g.vertex_count) if g.degrees[v] == 1]
        for a, b in combinations(leaves, 2):
            if g.has_edge(a, b) or g.adj[a] == g.adj[b]:
                continue
            lg = line_graph(g)
            i = lg.edge_map.index(next(e for e in lg.edge_map if a in e))
            j = lg.edge_map.index(next(e for e in lg.edge_map if b in e))
            assert isomorphic(L(merge_degree1_vertices(g, a, b)), add_edge(lg.h, i, j))
            tested += 1
    assert tested > 50

import random

import numpy as np
import pytest

from lgpinv.errors import (
    AdjacentEndpoints,
    DegreeViolation,
    DuplicateEdge,
    MalformedHeader,
    MissingEdge,
    NonIsolatedVertex,
    SelfLoop,
    VertexOutOfRange,
)
from lgpinv.graph import (
    Graph,
    add_edge,
    add_vertex,
    adjacency_csv,
    complete_graph,
    cycle_graph,
    degree_matrix,
    degree_profile,
    del_edge,
    del_vertex,
    disjoint_union,
    empty_graph,
    incidence_matrix,
    merge_degree1_vertices,
    parse_edge_list,
    path_graph,
    relocate_edge,
    serialize_edge_list,
    split_degree2_vertex,
    star_graph,
)
from lgpinv.isomorphism import isomorphic
from lgpinv.line import L

from conftest import random_graph


def test_graph_rejects_bad_edges():
    with pytest.raises(SelfLoop):
        Graph(3, frozenset({(1, 1)}))
    with pytest.raises(VertexOutOfRange):
        Graph(2, frozenset({(0, 2)}))
    with pytest.raises(DuplicateEdge):
        Graph.from_edges(3, [(0, 1), (1, 0)])


def test_add_edge_examples():
    assert add_edge(path_graph(3), 0, 2) == cycle_graph(3)
    with pytest.raises(DuplicateEdge):
        add_edge(complete_graph(3), 0, 1)
    assert add_edge(empty_graph(2), 0, 1) == complete_graph(2)
    with pytest.raises(SelfLoop):
        add_edge(empty_graph(2), 1, 1)
    with pytest.raises(VertexOutOfRange):
        add_edge(empty_graph(2), 0, 2)


def test_value_semantics():
    g = path_graph(3)
    add_edge(g, 0, 2)
    assert g.m == 2


def test_del_edge_and_vertices():
    with pytest.raises(MissingEdge):
        del_edge(path_graph(3), 0, 2)
    assert add_vertex(path_graph(3)).vertex_count == 4
    with pytest.raises(NonIsolatedVertex):
        del_vertex(path_graph(3), 1)
    g = Graph(4, frozenset({(0, 3)}))
    assert del_vertex(g, 1) == Graph(3, frozenset({(0, 2)}))


def test_relocate_examples():
    assert relocate_edge(path_graph(3), (1, 2), (0, 2)).edges == {(0, 1), (0, 2)}
    out = relocate_edge(cycle_graph(4), (0, 1), (0, 2))
    assert out.m == 4 and out.vertex_count == 4
    assert out.edges == {(0, 2), (0, 3), (1, 2), (2, 3)}
    with pytest.raises(DuplicateEdge):
        relocate_edge(complete_graph(2), (0, 1), (0, 1))
    with pytest.raises(MissingEdge):
        relocate_edge(path_graph(3), (0, 2), (0, 1))


def test_merge_examples():
    two = Graph(4, frozenset({(0, 1), (2, 3)}))
    assert isomorphic(merge_degree1_vertices(two, 1, 3), path_graph(3))
    c = merge_degree1_vertices(path_graph(4), 0, 3)
    assert c.vertex_count == 3 and c.m == 3 and isomorphic(c, cycle_graph(3))
    with pytest.raises(DuplicateEdge):
        merge_degree1_vertices(star_graph(3), 1, 2)
    with pytest.raises(AdjacentEndpoints):
        merge_degree1_vertices(complete_graph(2), 0, 1)
    with pytest.raises(DegreeViolation):
        merge_degree1_vertices(path_graph(4), 0, 1)


def test_split_examples():
    for c in range(3):
        assert isomorphic(split_degree2_vertex(cycle_graph(3), c), path_graph(4))
    s = split_degree2_vertex(path_graph(3), 1)
    assert s.vertex_count == 4 and s.m == 2 and all(d == 1 for d in s.degrees)
    with pytest.raises(DegreeViolation):
        split_degree2_vertex(complete_graph(2), 0)


def test_incidence_examples():
    assert incidence_matrix(complete_graph(2)).matrix.tolist() == [[1], [1]]
    assert incidence_matrix(path_graph(3)).matrix.T.tolist() == [[1, 1, 0], [0, 1, 1]]
    b = incidence_matrix(complete_graph(3)).matrix
    assert (b.T @ b - 2 * np.eye(3, dtype=int) == complete_graph(3).adjacency_matrix()).all()


def test_parse_serialize():
    assert parse_edge_list("3 2\n0 1\n1 2") == path_graph(3)
    with pytest.raises(VertexOutOfRange):
        parse_edge_list("2 1\n0 5")
    with pytest.raises(DuplicateEdge):
        parse_edge_list("2 2\n0 1\n1 0")
    with pytest.raises(MalformedHeader):
        parse_edge_list("three\n0 1")
    with pytest.raises(MalformedHeader):
        parse_edge_list("3 2\n0 1")
    assert serialize_edge_list(complete_graph(3)) == "3 3\n0 1\n0 2\n1 2"
    assert parse_edge_list("# comment\n\n3 1\n0 2\n") == Graph(3, frozenset({(0, 2)}))


def test_adjacency_csv_and_profile():
    assert adjacency_csv(path_graph(3)) == "0,1,0\n1,0,1\n0,1,0"
    prof = degree_profile(star_graph(3))
    assert prof == {1: 3, 3: 1}
    assert sum(prof.values()) == 4


def test_disjoint_union_and_components():
    g = disjoint_union(cycle_graph(3), cycle_graph(3))
    assert g.vertex_count == 6 and len(g.components) == 2
    assert not isomorphic(g, cycle_graph(6))


def test_edit_properties():
    rng = random.Random(7)
    for _ in range(300):
        g = random_graph(rng, rng.randint(2, 10), 0.35)
        non = list(g.non_edges())
        if non:
            u, v = rng.choice(non)
            assert del_edge(add_edge(g, u, v), u, v) == g
        leaves = [v for v in range(g.vertex_count) if g.degrees[v] == 1]
        for a in leaves:
            for b in leaves:
                if a < b and not g.has_edge(a, b) and g.adj[a] != g.adj[b]:
                    merged = merge_degree1_vertices(g, a, b)
                    c = min(a, b)
                    assert merged.degrees[c] == 2
                    assert isomorphic(split_degree2_vertex(merged, c), g)
        for c in range(g.vertex_count):
            if g.degrees[c] == 2:
                s = split_degree2_vertex(g, c)
                new = s.vertex_count - 1
                if not s.has_edge(c, new):
                    assert isomorphic(merge_degree1_vertices(s, c, new), g)


def test_incidence_identities_random():
    rng = random.Random(11)
    for _ in range(500):
        g = random_graph(rng, rng.randint(1, 12), rng.random())
        b = incidence_matrix(g).matrix
        assert (b.sum(axis=0) == 2).all()
        assert (b.sum(axis=1) == np.array(g.degrees)).all()
        assert (b @ b.T - degree_matrix(g) == g.adjacency_matrix()).all()
        lhs = b.T @ b - 2 * np.eye(g.m, dtype=int)
        assert (lhs == L(g).adjacency_matrix()).all()


def test_incidence_is_read_only():
    b = incidence_matrix(path_graph(3)).matrix
    with pytest.raises(ValueError):
        b[0, 0] = 5

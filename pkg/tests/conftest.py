import random

import networkx as nx
import pytest

from lgpinv.graph import Graph


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = frozenset((u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p)
    return Graph(n, edges)


def random_connected(rng: random.Random, n: int, p: float) -> Graph:
    while True:
        g = random_graph(rng, n, p)
        if g.is_connected():
            return g


def to_nx(g: Graph) -> nx.Graph:
    out = nx.Graph()
    out.add_nodes_from(range(g.vertex_count))
    out.add_edges_from(g.edges)
    return out


def from_nx(h: nx.Graph) -> Graph:
    idx = {v: i for i, v in enumerate(sorted(h.nodes()))}
    return Graph(len(idx), frozenset(tuple(sorted((idx[u], idx[v]))) for u, v in h.edges()))


@pytest.fixture
def rng():
    return random.Random(20240601)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for key in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[key])

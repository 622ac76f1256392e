"""Immutable simple graphs, the primary edit operations and edge-list I/O.

Vertices are always ``0..n-1``.  Every edit returns a new :class:`Graph`;
operations that remove a vertex compact the remaining labels while keeping
their relative order.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator

import numpy as np

from .errors import (
    AdjacentEndpoints,
    DegreeViolation,
    DuplicateEdge,
    MalformedHeader,
    MissingEdge,
    NonIsolatedVertex,
    SelfLoop,
    VertexOutOfRange,
)

Edge = tuple[int, int]


def norm_pair(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph on vertices ``0..vertex_count-1``."""

    vertex_count: int
    edges: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self):
        n = self.vertex_count
        if n < 0:
            raise VertexOutOfRange(f"negative vertex count {n}")
        for u, v in self.edges:
            if u == v:
                raise SelfLoop(f"self-loop at {u}")
            if not u < v:
                raise ValueError(f"edge {(u, v)} is not normalised (u < v)")
            if v >= n or u < 0:
                raise VertexOutOfRange(f"edge {(u, v)} outside 0..{n - 1}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> Graph:
        """Build a graph from arbitrary-orientation pairs, rejecting repeats."""
        seen: set[Edge] = set()
        for u, v in edges:
            if u == v:
                raise SelfLoop(f"self-loop at {u}")
            e = norm_pair(u, v)
            if e in seen:
                raise DuplicateEdge(f"edge {e} given twice")
            seen.add(e)
        return cls(n, frozenset(seen))

    # -- structure -----------------------------------------------------------

    @property
    def n(self) -> int:
        return self.vertex_count

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def sorted_edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    @cached_property
    def adj(self) -> tuple[frozenset[int], ...]:
        nbrs: list[set[int]] = [set() for _ in range(self.vertex_count)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Neighbourhoods as integer bitmasks."""
        out = [0] * self.vertex_count
        for u, v in self.edges:
            out[u] |= 1 << v
            out[v] |= 1 << u
        return tuple(out)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self.adj)

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.degrees[v]

    def has_edge(self, u: int, v: int) -> bool:
        return norm_pair(u, v) in self.edges

    def non_edges(self) -> Iterator[Edge]:
        """Unordered non-adjacent pairs in lexicographic order."""
        n = self.vertex_count
        for u in range(n):
            for v in range(u + 1, n):
                if (u, v) not in self.edges:
                    yield (u, v)

    @cached_property
    def components(self) -> tuple[tuple[int, ...], ...]:
        """Connected components as sorted vertex tuples, ordered by smallest vertex."""
        seen = [False] * self.vertex_count
        comps = []
        for s in range(self.vertex_count):
            if seen[s]:
                continue
            seen[s] = True
            stack, comp = [s], [s]
            while stack:
                u = stack.pop()
                for w in self.adj[u]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
                        comp.append(w)
            comps.append(tuple(sorted(comp)))
        return tuple(comps)

    def is_connected(self) -> bool:
        return len(self.components) <= 1

    def induced_subgraph(self, vertices: Iterable[int]) -> Graph:
        """Subgraph induced on ``vertices``, relabelled in the given order."""
        order = list(vertices)
        index = {v: i for i, v in enumerate(order)}
        edges = set()
        for v in order:
            for w in self.adj[v]:
                if w in index:
                    edges.add(norm_pair(index[v], index[w]))
        return Graph(len(order), frozenset(edges))

    def relabel(self, mapping: dict[int, int] | list[int]) -> Graph:
        """Apply a bijection ``old -> new`` to the vertex labels."""
        edges = frozenset(norm_pair(mapping[u], mapping[v]) for u, v in self.edges)
        return Graph(self.vertex_count, edges)

    def without_isolated(self) -> Graph:
        keep = [v for v in range(self.vertex_count) if self.degrees[v] > 0]
        if len(keep) == self.vertex_count:
            return self
        return self.induced_subgraph(keep)

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.vertex_count, self.vertex_count), dtype=np.int64)
        for u, v in self.edges:
            a[u, v] = a[v, u] = 1
        return a

    def with_flips(self, pairs: Iterable[Edge]) -> Graph:
        """Toggle the adjacency of each pair (symmetric difference)."""
        edges = set(self.edges)
        for u, v in pairs:
            e = norm_pair(u, v)
            if e[0] == e[1]:
                raise SelfLoop(f"cannot flip diagonal pair {e}")
            edges ^= {e}
        return Graph(self.vertex_count, frozenset(edges))

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.vertex_count:
            raise VertexOutOfRange(f"vertex {v} outside 0..{self.vertex_count - 1}")

    def __repr__(self) -> str:
        return f"Graph({self.vertex_count}, {list(self.sorted_edges)})"


# -- named families -------------------------------------------------------------


def empty_graph(n: int) -> Graph:
    return Graph(n, frozenset())


def complete_graph(n: int) -> Graph:
    return Graph(n, frozenset((u, v) for u in range(n) for v in range(u + 1, n)))


def path_graph(n: int) -> Graph:
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with the hub at vertex 0."""
    return Graph(leaves + 1, frozenset((0, i) for i in range(1, leaves + 1)))


def disjoint_union(*graphs: Graph) -> Graph:
    edges = set()
    offset = 0
    for g in graphs:
        edges.update((u + offset, v + offset) for u, v in g.edges)
        offset += g.vertex_count
    return Graph(offset, frozenset(edges))


# -- primary edit operations ----------------------------------------------------


def add_edge(g: Graph, u: int, v: int) -> Graph:
    g._check_vertex(u)
    g._check_vertex(v)
    if u == v:
        raise SelfLoop(f"self-loop at {u}")
    e = norm_pair(u, v)
    if e in g.edges:
        raise DuplicateEdge(f"edge {e} already present")
    return Graph(g.vertex_count, g.edges | {e})


def del_edge(g: Graph, u: int, v: int) -> Graph:
    g._check_vertex(u)
    g._check_vertex(v)
    e = norm_pair(u, v)
    if e not in g.edges:
        raise MissingEdge(f"edge {e} not present")
    return Graph(g.vertex_count, g.edges - {e})


def add_vertex(g: Graph) -> Graph:
    return Graph(g.vertex_count + 1, g.edges)


def _drop_vertex(n: int, edges: Iterable[Edge], v: int) -> Graph:
    shift = lambda w: w - 1 if w > v else w  # noqa: E731
    return Graph(n - 1, frozenset((shift(a), shift(b)) for a, b in edges))


def del_vertex(g: Graph, v: int) -> Graph:
    """Delete an isolated vertex; higher labels shift down by one."""
    g._check_vertex(v)
    if g.degrees[v]:
        raise NonIsolatedVertex(f"vertex {v} has degree {g.degrees[v]}")
    return _drop_vertex(g.vertex_count, g.edges, v)


def relocate_edge(g: Graph, source: Edge, target: Edge) -> Graph:
    """Delete edge ``source`` and add edge ``target`` in one step."""
    s = norm_pair(*source)
    t = norm_pair(*target)
    for w in (*s, *t):
        g._check_vertex(w)
    if s not in g.edges:
        raise MissingEdge(f"edge {s} not present")
    if t[0] == t[1]:
        raise SelfLoop(f"self-loop at {t[0]}")
    if t in g.edges or t == s:
        raise DuplicateEdge(f"edge {t} already present")
    return Graph(g.vertex_count, (g.edges - {s}) | {t})


def merge_degree1_vertices(g: Graph, a: int, b: int) -> Graph:
    """Identify two degree-1 vertices.

    The merged vertex keeps label ``min(a, b)`` before compaction.  A merge
    whose two pendant edges end at the same vertex would create a parallel
    edge and is rejected.
    """
    g._check_vertex(a)
    g._check_vertex(b)
    if a == b:
        raise DegreeViolation("cannot merge a vertex with itself")
    if g.degrees[a] != 1 or g.degrees[b] != 1:
        raise DegreeViolation(f"merge needs degree-1 vertices, got {g.degrees[a]} and {g.degrees[b]}")
    if g.has_edge(a, b):
        raise AdjacentEndpoints(f"vertices {a} and {b} are adjacent")
    keep, gone = min(a, b), max(a, b)
    (x,) = g.adj[keep]
    (y,) = g.adj[gone]
    if x == y:
        raise DuplicateEdge(f"merging {a} and {b} would duplicate edge to {x}")
    edges = (g.edges - {norm_pair(gone, y)}) | {norm_pair(keep, y)}
    return _drop_vertex(g.vertex_count, edges, gone)


def split_degree2_vertex(g: Graph, c: int) -> Graph:
    """Split a degree-2 vertex into two pendant vertices.

    ``c`` keeps its smaller neighbour; the larger neighbour moves to a new
    vertex labelled ``vertex_count``.
    """
    g._check_vertex(c)
    if g.degrees[c] != 2:
        raise DegreeViolation(f"split needs a degree-2 vertex, {c} has degree {g.degrees[c]}")
    y = max(g.adj[c])
    new = g.vertex_count
    edges = (g.edges - {norm_pair(c, y)}) | {(y, new)}
    return Graph(new + 1, edges)


def degree_profile(g: Graph) -> dict[int, int]:
    """Number of vertices of each degree, keyed by degree."""
    return dict(sorted(Counter(g.degrees).items()))


# -- incidence matrix -----------------------------------------------------------


@dataclass(frozen=True)
class IncidenceMatrix:
    """Vertex-by-edge 0/1 matrix; column j is ``edge_order[j]``."""

    matrix: np.ndarray
    edge_order: tuple[Edge, ...]

    @property
    def rows(self) -> int:
        return self.matrix.shape[0]

    @property
    def cols(self) -> int:
        return self.matrix.shape[1]


def incidence_matrix(g: Graph) -> IncidenceMatrix:
    order = g.sorted_edges
    b = np.zeros((g.vertex_count, len(order)), dtype=np.int64)
    for j, (u, v) in enumerate(order):
        b[u, j] = b[v, j] = 1
    b.setflags(write=False)
    return IncidenceMatrix(b, order)


def degree_matrix(g: Graph) -> np.ndarray:
    return np.diag(np.array(g.degrees, dtype=np.int64)) if g.vertex_count else np.zeros((0, 0), np.int64)


# -- text formats ---------------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines of ``"u v"``.

    Blank lines and lines starting with ``#`` are ignored.
    """
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise MalformedHeader("missing 'n m' header")
    head = lines[0].split()
    try:
        if len(head) != 2:
            raise ValueError
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise MalformedHeader(f"bad header {lines[0]!r}") from None
    if n < 0 or m < 0:
        raise MalformedHeader(f"negative counts in header {lines[0]!r}")
    body = lines[1:]
    if len(body) != m:
        raise MalformedHeader(f"header promises {m} edges, found {len(body)} lines")
    pairs = []
    for ln in body:
        parts = ln.split()
        try:
            if len(parts) != 2:
                raise ValueError
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise MalformedHeader(f"bad edge line {ln!r}") from None
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRange(f"edge {(u, v)} outside 0..{n - 1}")
        pairs.append((u, v))
    return Graph.from_edges(n, pairs)


def serialize_edge_list(g: Graph) -> str:
    lines = [f"{g.vertex_count} {g.m}"]
    lines += [f"{u} {v}" for u, v in g.sorted_edges]
    return "\n".join(lines)


def adjacency_csv(g: Graph) -> str:
    """Adjacency matrix as comma-separated 0/1 rows (debugging aid)."""
    a = g.adjacency_matrix()
    return "\n".join(",".join(str(int(x)) for x in row) for row in a)

"""Line graphs, root reconstruction and line-graph recognition.

Recognition is constructive: a graph is a line graph exactly when its edges
split into cliques with every vertex in at most two of them (a Krausz
partition).  The partition doubles as the root: cliques become root
vertices and every line-graph vertex becomes the root edge joining its two
cliques.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import NotALineGraph
from .graph import Edge, Graph, norm_pair


@dataclass(frozen=True)
class LineGraphResult:
    h: Graph
    edge_map: tuple[Edge, ...]  # edge_map[i] is the edge of g that became vertex i of h


def line_graph(g: Graph) -> LineGraphResult:
    order = g.sorted_edges
    index = {e: i for i, e in enumerate(order)}
    incident: list[list[int]] = [[] for _ in range(g.vertex_count)]
    for e in order:
        incident[e[0]].append(index[e])
        incident[e[1]].append(index[e])
    edges = set()
    for inc in incident:
        edges.update(combinations(inc, 2))  # inc is ascending
    return LineGraphResult(Graph(len(order), frozenset(edges)), order)


def L(g: Graph) -> Graph:
    return line_graph(g).h


# -- claw search ------------------------------------------------------------------


def contains_induced_claw(h: Graph) -> tuple[int, int, int, int] | None:
    """First induced K_{1,3} as ``(hub, a, b, c)`` with ``a < b < c``, or None."""
    masks = h.masks
    for hub in range(h.vertex_count):
        nbrs = sorted(h.adj[hub])
        if len(nbrs) < 3:
            continue
        nmask = masks[hub]
        for i, a in enumerate(nbrs):
            rest_a = nmask & ~masks[a]
            for b in nbrs[i + 1:]:
                if not (rest_a >> b) & 1:
                    continue
                cand = (rest_a & ~masks[b]) >> (b + 1)
                if cand:
                    c = b + 1 + ((cand & -cand).bit_length() - 1)
                    return (hub, a, b, c)
    return None


# -- Krausz partition -------------------------------------------------------------


@dataclass(frozen=True)
class KrauszPartition:
    cliques: tuple[frozenset[int], ...]
    assignment: dict[Edge, int]  # H-edge -> index into cliques


def krausz_partition(h: Graph) -> KrauszPartition:
    """Partition the edges of ``h`` into cliques, each vertex in at most two.

    Edges are visited in lexicographic order; an uncovered edge first tries to
    extend an existing clique (oldest first) and only then opens a new one.

    Raises :class:`NotALineGraph` when the search is exhausted.
    """
    claw = contains_induced_claw(h)
    if claw is not None:
        raise NotALineGraph(f"induced claw {claw}", claw)
    cliques, owner, stuck = _krausz_search(h)
    if cliques is None:
        raise NotALineGraph(f"no Krausz partition; search exhausted at edge {stuck}", stuck)
    return KrauszPartition(tuple(frozenset(_bits(c)) for c in cliques), owner)


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _krausz_search(h: Graph):
    """Backtracking search returning ``(cliques, owner, None)``.

    On failure returns ``(None, None, edge)`` with the deepest edge reached.
    """
    masks = h.masks
    order = h.sorted_edges
    owner: dict[Edge, int] = {}
    cliques: list[int] = []
    member: list[list[int]] = [[] for _ in range(h.vertex_count)]
    deepest = [-1, order[0] if order else ()]

    def cover(x: int, cmask: int, cid: int, added: list[Edge]) -> None:
        for y in _bits(cmask):
            e = norm_pair(x, y)
            owner[e] = cid
            added.append(e)

    def uncover(added: list[Edge]) -> None:
        for e in added:
            del owner[e]

    def free_edges(x: int, cmask: int) -> bool:
        for y in _bits(cmask):
            if norm_pair(x, y) in owner:
                return False
        return True

    def step(pos: int) -> bool:
        while pos < len(order) and order[pos] in owner:
            pos += 1
        if pos == len(order):
            return True
        if pos > deepest[0]:
            deepest[0], deepest[1] = pos, order[pos]
        u, v = order[pos]
        # extend an existing clique, oldest first
        for cid, cmask in enumerate(cliques):
            if (cmask >> u) & 1 and not (cmask >> v) & 1:
                x = v
            elif (cmask >> v) & 1 and not (cmask >> u) & 1:
                x = u
            else:
                continue
            if len(member[x]) >= 2 or cmask & ~masks[x] or not free_edges(x, cmask):
                continue
            added: list[Edge] = []
            cover(x, cmask, cid, added)
            cliques[cid] = cmask | (1 << x)
            member[x].append(cid)
            if step(pos + 1):
                return True
            member[x].pop()
            cliques[cid] = cmask
            uncover(added)
        # open a new clique {u, v}
        if len(member[u]) < 2 and len(member[v]) < 2:
            cid = len(cliques)
            cliques.append((1 << u) | (1 << v))
            owner[(u, v)] = cid
            member[u].append(cid)
            member[v].append(cid)
            if step(pos + 1):
                return True
            member[u].pop()
            member[v].pop()
            del owner[(u, v)]
            cliques.pop()
        return False

    if step(0):
        return cliques, dict(owner), None
    return None, None, tuple(deepest[1])


def is_line_graph(h: Graph) -> bool:
    if contains_induced_claw(h) is not None:
        return False
    return _krausz_search(h)[0] is not None


# -- roots ------------------------------------------------------------------------


@dataclass(frozen=True)
class RootResult:
    roots: tuple[Graph, ...]
    ambiguous: bool
    # edge_maps[k][i] is the edge of roots[k] corresponding to vertex i of h
    edge_maps: tuple[tuple[Edge, ...], ...] = ()


def _is_triangle(h: Graph, comp: tuple[int, ...]) -> bool:
    return len(comp) == 3 and all(h.has_edge(a, b) for a, b in combinations(comp, 2))


def _component_root(h: Graph, comp: tuple[int, ...]) -> tuple[int, list[Edge]]:
    """Root of one connected component: (vertex count, edge per component vertex)."""
    sub = h.induced_subgraph(comp)
    if sub.m == 0:
        return 2, [(0, 1)]
    part = krausz_partition(sub)
    slots: list[list[int]] = [[] for _ in range(sub.vertex_count)]
    for cid, clique in enumerate(part.cliques):
        for x in clique:
            slots[x].append(cid)
    nxt = len(part.cliques)
    for x in range(sub.vertex_count):
        while len(slots[x]) < 2:
            slots[x].append(nxt)
            nxt += 1
    return nxt, [norm_pair(a, b) for a, b in slots]


def root(h: Graph) -> RootResult:
    """All roots of ``h`` up to isomorphism (two only when a component is K3).

    For K3 components the star K_{1,3} is used in ``roots[0]`` and the
    triangle in ``roots[1]``.
    """
    pieces = []  # per component: list of alternatives (n, edges-per-vertex)
    ambiguous = False
    for comp in h.components:
        if _is_triangle(h, comp):
            ambiguous = True
            # star: triangle vertex i -> spoke (0, i+1); triangle: i -> opposite side
            pieces.append((comp, [(4, [(0, 1), (0, 2), (0, 3)]), (3, [(1, 2), (0, 2), (0, 1)])]))
        else:
            pieces.append((comp, [_component_root(h, comp)]))
    variants = 2 if ambiguous else 1
    roots, maps = [], []
    for k in range(variants):
        offset = 0
        emap: list[Edge] = [(-1, -1)] * h.vertex_count
        for comp, alts in pieces:
            n_c, per_vertex = alts[min(k, len(alts) - 1)]
            for local, x in enumerate(comp):
                a, b = per_vertex[local]
                emap[x] = (a + offset, b + offset)
            offset += n_c
        roots.append(Graph(offset, frozenset(emap)))
        maps.append(tuple(emap))
    return RootResult(tuple(roots), ambiguous, tuple(maps))

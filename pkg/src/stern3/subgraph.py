"""Directed-graph view of the triangle subdivision.

Each subdivided triangle contributes one new vertex, fed by directed edges
from the triangle's three current vertices; nothing connects the three
initial corners.  Counting directed paths from the corners to a vertex
reproduces the sequence value at that vertex's address, which makes the
graph an independent combinatorial oracle.

Vertex identity follows construction genealogy, not value: the sum vertex
of a triangle keeps its identity in every descendant that inherits it, and
equal value vectors created by different subdivisions stay distinct.
"""

from __future__ import annotations

from .indexing import decode

# ('c', k) for initial corner k; ('s', digits) for the sum vertex created by
# subdividing the triangle with that digit address.
VertexId = tuple

CORNERS: tuple[VertexId, VertexId, VertexId] = (("c", 1), ("c", 2), ("c", 3))


class VertexNotBuilt(LookupError):
    """The address refers to a vertex deeper than the built graph."""


class SubdivisionGraph:
    """Immutable once built; construct through build()."""

    def __init__(self, depth: int):
        self.depth = depth
        self._in_edges: dict[VertexId, tuple[VertexId, VertexId, VertexId]] = {}
        self._triangle: dict[tuple[int, ...], tuple[VertexId, VertexId, VertexId]] = {}
        self._counts: dict[VertexId, int] = {}
        self._order: list[VertexId] = list(CORNERS)

    def vertex_count(self) -> int:
        return len(self._order)

    def edge_count(self) -> int:
        return 3 * len(self._in_edges)

    def vertices(self) -> list[VertexId]:
        """Vertices in creation order (a topological order of the DAG)."""
        return list(self._order)

    def in_neighbors(self, v: VertexId) -> tuple[VertexId, ...]:
        return self._in_edges.get(v, ())

    def triangle_vertices(self, digits: tuple[int, ...]) -> tuple[VertexId, VertexId, VertexId]:
        """The three vertices of the triangle at a digit address."""
        try:
            return self._triangle[tuple(digits)]
        except KeyError:
            raise VertexNotBuilt(
                f"triangle {tuple(digits)} needs depth {len(tuple(digits))}, graph has {self.depth}"
            ) from None

    def vertex_for(self, n: int) -> VertexId:
        """Vertex addressed by a sequence index."""
        digits, pos = decode(n)
        if len(digits) > self.depth:
            raise VertexNotBuilt(f"index {n} needs depth {len(digits)}, graph has {self.depth}")
        return self._triangle[digits][pos - 1]

    def path_count(self, n: int) -> int:
        """Directed paths from the corners to the vertex of index n.

        A corner contributes the empty path from itself, so corners count 1;
        with that convention the count equals the unit-seed sequence value
        at every index.
        """
        return self._counts[self.vertex_for(n)]

    def to_dot(self) -> str:
        """Edge list as DOT-compatible text, one "src -> dst" per line."""
        lines = []
        for v in self._order:
            for u in self._in_edges.get(v, ()):
                lines.append(f"{_dot_name(u)} -> {_dot_name(v)}")
        return "\n".join(lines) + ("\n" if lines else "")


def _dot_name(v: VertexId) -> str:
    kind, payload = v
    if kind == "c":
        return f"v{payload}"
    return "w" + "".join(str(d) for d in payload)


def build(depth: int) -> SubdivisionGraph:
    """Subdivision graph through the given depth.

    Depth d subdivides every triangle of depth < d, so the graph gains one
    sum vertex (in-degree 3) per triangle: 3 + (3**d - 1) / 2 vertices in
    total.  Path counts are fixed at creation time; the result is treated
    as read-only afterwards.
    """
    if depth < 0:
        raise ValueError(f"depth must be >= 0, got {depth}")
    g = SubdivisionGraph(depth)
    for c in CORNERS:
        g._counts[c] = 1
    g._triangle[()] = CORNERS
    frontier: list[tuple[int, ...]] = [()]
    for _ in range(depth):
        next_frontier = []
        for address in frontier:
            w1, w2, w3 = g._triangle[address]
            new: VertexId = ("s", address)
            g._in_edges[new] = (w1, w2, w3)
            g._order.append(new)
            g._counts[new] = g._counts[w1] + g._counts[w2] + g._counts[w3]
            for d, verts in ((0, (w1, w2, new)), (1, (w2, w3, new)), (2, (w3, w1, new))):
                child = address + (d,)
                g._triangle[child] = verts
                next_frontier.append(child)
        frontier = next_frontier
    return g


def path_count(g: SubdivisionGraph, n: int) -> int:
    """Module-level alias for SubdivisionGraph.path_count."""
    return g.path_count(n)


def count_paths_brute(g: SubdivisionGraph, n: int) -> int:
    """Path count by explicit forward enumeration.

    Exponential in depth; only sensible as a cross-check oracle on small
    graphs.
    """
    target = g.vertex_for(n)
    out: dict[VertexId, list[VertexId]] = {}
    for v, parents in g._in_edges.items():
        for u in parents:
            out.setdefault(u, []).append(v)

    def walk(v: VertexId) -> int:
        if v == target:
            return 1
        return sum(walk(w) for w in out.get(v, ()))

    return sum(walk(c) for c in CORNERS)

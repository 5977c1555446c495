"""Abstract Lyapunov graph data model.

A Lyapunov graph is a finite, connected, oriented multigraph without
oriented cycles.  Vertices carry a dynamical label (attracting or
repelling closed orbit, suspension of a subshift of finite type given by
a nonnegative integer matrix, or a singularity of index 0..3), edges
carry a nonnegative weight: the genus of the regular level-set surface
the edge represents.  Edges point from higher to lower Lyapunov value.

Graphs are immutable after construction and safe to share; every function
in the library is a pure function of its inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import (
    DisconnectedGraphError,
    DuplicateVertexIdError,
    OrientedCycleError,
    SelfLoopError,
    UnknownVertexRefError,
)
from .gf2 import Matrix, MatrixLike, as_matrix, require_square_nonneg


# -- vertex labels -----------------------------------------------------------

@dataclass(frozen=True)
class SinkOrbit:
    """An attracting closed orbit."""


@dataclass(frozen=True)
class SourceOrbit:
    """A repelling closed orbit."""


@dataclass(frozen=True)
class Ssft:
    """A saddle basic set: the suspension of the subshift of ``matrix``.

    ``matrix`` must be square with nonnegative integer entries.
    Irreducibility is not enforced here; checkers reject non-irreducible
    labels with the LABEL-IRRED condition code.
    """

    matrix: Matrix

    def __init__(self, matrix: MatrixLike):
        m = as_matrix(matrix)
        require_square_nonneg(m)
        object.__setattr__(self, "matrix", m)


@dataclass(frozen=True)
class Singularity:
    """A rest point of the given Morse index (0 = sink, 3 = source)."""

    index: int

    def __post_init__(self):
        if self.index not in (0, 1, 2, 3):
            raise ValueError(f"singularity index must be 0..3, got {self.index}")


VertexLabel = SinkOrbit | SourceOrbit | Ssft | Singularity


def label_code(label: VertexLabel) -> str:
    """Compact canonical text for a label, usable inside census keys.

    Matrix entries are joined with '.' and rows with ';' so the code never
    contains a comma (census tables are comma-separated).
    """
    if isinstance(label, SinkOrbit):
        return "sink-orbit"
    if isinstance(label, SourceOrbit):
        return "source-orbit"
    if isinstance(label, Singularity):
        return f"singularity{label.index}"
    body = ";".join(".".join(str(x) for x in row) for row in label.matrix)
    return f"ssft[{body}]"


# -- edges and graphs --------------------------------------------------------

@dataclass(frozen=True)
class Edge:
    """A directed weighted edge; ``start`` is the higher Lyapunov side."""

    id: str
    start: str
    end: str
    weight: int

    def __post_init__(self):
        if self.weight < 0:
            raise ValueError(f"edge {self.id}: weight must be >= 0")


@dataclass(frozen=True)
class VertexContext:
    """Incident-edge summary of one vertex.

    ``e_plus``/``e_minus`` count incoming/outgoing edges; ``g_plus`` and
    ``g_minus`` are the sorted weight multisets of those edges.
    """

    e_plus: int
    e_minus: int
    g_plus: tuple[int, ...]
    g_minus: tuple[int, ...]

    @property
    def degree(self) -> int:
        return self.e_plus + self.e_minus


@dataclass(frozen=True, eq=False)
class LyapunovGraph:
    """A validated abstract Lyapunov graph.

    Equality is structural: same name, same labeled vertex set and same
    multiset of (start, end, weight) edges, regardless of declaration
    order and of edge ids.
    """

    name: str
    vertices: tuple[tuple[str, VertexLabel], ...]
    edges: tuple[Edge, ...]

    @cached_property
    def labels(self) -> dict[str, VertexLabel]:
        return dict(self.vertices)

    @cached_property
    def vertex_ids(self) -> tuple[str, ...]:
        return tuple(sorted(v for v, _ in self.vertices))

    def label(self, vertex: str) -> VertexLabel:
        try:
            return self.labels[vertex]
        except KeyError:
            raise UnknownVertexRefError(f"unknown vertex {vertex!r}") from None

    @cached_property
    def out_edges(self) -> dict[str, tuple[Edge, ...]]:
        acc: dict[str, list[Edge]] = {v: [] for v, _ in self.vertices}
        for e in sorted(self.edges, key=lambda e: e.id):
            acc[e.start].append(e)
        return {v: tuple(es) for v, es in acc.items()}

    @cached_property
    def in_edges(self) -> dict[str, tuple[Edge, ...]]:
        acc: dict[str, list[Edge]] = {v: [] for v, _ in self.vertices}
        for e in sorted(self.edges, key=lambda e: e.id):
            acc[e.end].append(e)
        return {v: tuple(es) for v, es in acc.items()}

    def _structure(self) -> tuple:
        return (
            self.name,
            tuple(sorted((v, label_code(l)) for v, l in self.vertices)),
            tuple(sorted((e.start, e.end, e.weight) for e in self.edges)),
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LyapunovGraph):
            return NotImplemented
        return self._structure() == other._structure()

    def __hash__(self) -> int:
        return hash(self._structure())

    def __repr__(self) -> str:
        return (
            f"LyapunovGraph({self.name!r}, {len(self.vertices)} vertices, "
            f"{len(self.edges)} edges)"
        )


EdgeLike = Edge | tuple


def _coerce_edge(raw: EdgeLike, auto_index: int) -> Edge:
    if isinstance(raw, Edge):
        return raw
    if len(raw) == 3:
        start, end, weight = raw
        return Edge(id=f"e{auto_index}", start=start, end=end, weight=int(weight))
    if len(raw) == 4:
        eid, start, end, weight = raw
        return Edge(id=eid, start=start, end=end, weight=int(weight))
    raise ValueError(
        f"an edge must be an Edge, (start, end, weight) or (id, start, end, weight): {raw!r}"
    )


def _find_directed_cycle(adjacency: dict[str, list[str]]) -> tuple[str, ...] | None:
    WHITE, GRAY, BLACK = 0, 1, 2
    color = {v: WHITE for v in adjacency}
    parent: dict[str, str] = {}

    for root in sorted(adjacency):
        if color[root] != WHITE:
            continue
        stack = [(root, iter(sorted(adjacency[root])))]
        color[root] = GRAY
        while stack:
            v, it = stack[-1]
            advanced = False
            for w in it:
                if color[w] == WHITE:
                    parent[w] = v
                    color[w] = GRAY
                    stack.append((w, iter(sorted(adjacency[w]))))
                    advanced = True
                    break
                if color[w] == GRAY:
                    cycle = [w]
                    cur = v
                    while cur != w:
                        cycle.append(cur)
                        cur = parent[cur]
                    cycle.reverse()
                    return tuple(cycle)
            if not advanced:
                color[v] = BLACK
                stack.pop()
    return None


def build_graph(
    vertices,
    edges,
    name: str = "g",
) -> LyapunovGraph:
    """Validate and build an abstract Lyapunov graph.

    ``vertices`` is a sequence of (id, label) pairs; ``edges`` a sequence
    of :class:`Edge` or (start, end, weight) / (id, start, end, weight)
    tuples.  Ids for tuple edges are generated as e0, e1, ... in order.

    Raises the corresponding error when a vertex id repeats, an edge
    references an undeclared vertex, an edge is a self-loop, the edge set
    contains a directed cycle, or the underlying undirected graph is
    disconnected.
    """
    vertex_list = [(v, label) for v, label in vertices]
    if not vertex_list:
        raise ValueError("a Lyapunov graph needs at least one vertex")

    seen: set[str] = set()
    for v, _ in vertex_list:
        if v in seen:
            raise DuplicateVertexIdError(f"duplicate vertex id {v!r}")
        seen.add(v)

    edge_list = [_coerce_edge(raw, i) for i, raw in enumerate(edges)]
    edge_ids = [e.id for e in edge_list]
    if len(set(edge_ids)) != len(edge_ids):
        dup = next(x for x in edge_ids if edge_ids.count(x) > 1)
        raise ValueError(f"duplicate edge id {dup!r}")

    for e in edge_list:
        for endpoint in (e.start, e.end):
            if endpoint not in seen:
                raise UnknownVertexRefError(
                    f"edge {e.id!r} references unknown vertex {endpoint!r}"
                )
        if e.start == e.end:
            raise SelfLoopError(f"edge {e.id!r} is a self-loop at {e.start!r}")

    adjacency: dict[str, list[str]] = {v: [] for v, _ in vertex_list}
    for e in edge_list:
        adjacency[e.start].append(e.end)
    cycle = _find_directed_cycle(adjacency)
    if cycle is not None:
        raise OrientedCycleError(cycle)

    undirected: dict[str, set[str]] = {v: set() for v, _ in vertex_list}
    for e in edge_list:
        undirected[e.start].add(e.end)
        undirected[e.end].add(e.start)
    start = vertex_list[0][0]
    reached = {start}
    frontier = [start]
    while frontier:
        v = frontier.pop()
        for w in undirected[v]:
            if w not in reached:
                reached.add(w)
                frontier.append(w)
    if len(reached) != len(vertex_list):
        missing = sorted(set(seen) - reached)
        raise DisconnectedGraphError(
            f"graph is not connected; unreachable vertices: {', '.join(missing)}"
        )

    return LyapunovGraph(name=name, vertices=tuple(vertex_list), edges=tuple(edge_list))


def vertex_context(graph: LyapunovGraph, vertex: str) -> VertexContext:
    """e+/e- counts and sorted weight multisets of one vertex."""
    if vertex not in graph.labels:
        raise UnknownVertexRefError(f"unknown vertex {vertex!r}")
    g_plus = sorted(e.weight for e in graph.in_edges[vertex])
    g_minus = sorted(e.weight for e in graph.out_edges[vertex])
    return VertexContext(
        e_plus=len(g_plus),
        e_minus=len(g_minus),
        g_plus=tuple(g_plus),
        g_minus=tuple(g_minus),
    )

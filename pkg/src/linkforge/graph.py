"""Finite simple graphs with stable vertex labels.

A :class:`Graph` is immutable. Vertex labels are opaque hashables (ints or
strings in practice) kept in insertion order; that order is the canonical
order used everywhere an ordering is needed (edge normalization, cycle
canonical form, serialization).
"""

from __future__ import annotations

from collections.abc import Hashable, Iterable
from typing import Any

from .errors import GraphError, UnknownEdge, UnknownVertex

Vertex = Hashable
Edge = tuple  # (u, v) with index(u) < index(v)


class Graph:
    __slots__ = ("_vertices", "_index", "_adj", "_edges", "name", "meta")

    def __init__(
        self,
        vertices: Iterable[Vertex],
        edges: Iterable[tuple[Vertex, Vertex]] = (),
        name: str = "",
        meta: dict[str, Any] | None = None,
    ):
        verts = tuple(vertices)
        index = {v: i for i, v in enumerate(verts)}
        if len(index) != len(verts):
            raise GraphError("duplicate vertex labels")
        adj: dict[Vertex, set] = {v: set() for v in verts}
        for u, v in edges:
            if u not in index or v not in index:
                raise UnknownVertex(f"edge ({u!r}, {v!r}) has an endpoint outside the vertex set")
            if u == v:
                raise GraphError(f"self-loop at {u!r}")
            if v in adj[u]:
                raise GraphError(f"parallel edge ({u!r}, {v!r})")
            adj[u].add(v)
            adj[v].add(u)
        self._vertices = verts
        self._index = index
        self._adj = {v: frozenset(n) for v, n in adj.items()}
        es = []
        for u in verts:
            iu = index[u]
            for v in adj[u]:
                if index[v] > iu:
                    es.append((u, v))
        es.sort(key=lambda e: (index[e[0]], index[e[1]]))
        self._edges = tuple(es)
        self.name = name
        self.meta = dict(meta or {})

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[Vertex, Vertex]], name: str = "") -> Graph:
        """Build a graph whose vertex set is the endpoints, in first-seen order."""
        edges = list(edges)
        seen: dict[Vertex, None] = {}
        for u, v in edges:
            seen.setdefault(u)
            seen.setdefault(v)
        return cls(seen, edges, name=name)

    # -- basic queries -------------------------------------------------

    @property
    def vertices(self) -> tuple:
        return self._vertices

    @property
    def edges(self) -> tuple:
        return self._edges

    @property
    def n(self) -> int:
        return len(self._vertices)

    @property
    def m(self) -> int:
        return len(self._edges)

    def index(self, v: Vertex) -> int:
        try:
            return self._index[v]
        except KeyError:
            raise UnknownVertex(f"no vertex {v!r}") from None

    def __contains__(self, v) -> bool:
        return v in self._index

    def neighbors(self, v: Vertex) -> frozenset:
        try:
            return self._adj[v]
        except KeyError:
            raise UnknownVertex(f"no vertex {v!r}") from None

    def degree(self, v: Vertex) -> int:
        return len(self.neighbors(v))

    def degrees(self) -> list[int]:
        return [len(self._adj[v]) for v in self._vertices]

    def has_edge(self, u: Vertex, v: Vertex) -> bool:
        return u in self._adj and v in self._adj[u]

    def norm_edge(self, u: Vertex, v: Vertex) -> Edge:
        """Return ``(u, v)`` ordered by vertex index; raise if it is not an edge."""
        if not self.has_edge(u, v):
            raise UnknownEdge(f"({u!r}, {v!r}) is not an edge of {self.name or 'graph'}")
        return (u, v) if self._index[u] < self._index[v] else (v, u)

    def sorted_vertices(self, vs: Iterable[Vertex]) -> list:
        return sorted(vs, key=self._index.__getitem__)

    def is_connected(self, subset: Iterable[Vertex] | None = None) -> bool:
        """Whether ``subset`` (default: all vertices) induces a connected subgraph."""
        vs = set(self._vertices if subset is None else subset)
        if not vs:
            return True
        start = next(iter(vs))
        seen = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in self._adj[x]:
                if y in vs and y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == len(vs)

    # -- derived graphs --------------------------------------------------

    def with_name(self, name: str, **meta) -> Graph:
        return Graph(self._vertices, self._edges, name=name, meta={**self.meta, **meta})

    def induced(self, vs: Iterable[Vertex], name: str = "") -> Graph:
        keep = set(vs)
        verts = [v for v in self._vertices if v in keep]
        if len(verts) != len(keep):
            raise UnknownVertex("subset contains unknown vertices")
        return Graph(verts, [e for e in self._edges if e[0] in keep and e[1] in keep], name=name)

    def relabel(self, mapping: dict | Any, name: str | None = None) -> Graph:
        """Relabel vertices by a dict or a callable; order is preserved."""
        f = mapping.__getitem__ if isinstance(mapping, dict) else mapping
        return Graph(
            [f(v) for v in self._vertices],
            [(f(u), f(v)) for u, v in self._edges],
            name=self.name if name is None else name,
        )

    def prefixed(self, prefix: str) -> Graph:
        return self.relabel(lambda v: f"{prefix}:{v}")

    def add_edges(self, edges: Iterable[tuple], name: str | None = None) -> Graph:
        return Graph(self._vertices, [*self._edges, *edges], name=self.name if name is None else name)

    # -- dunder --------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._vertices == other._vertices and set(map(frozenset, self._edges)) == set(
            map(frozenset, other._edges)
        )

    def __hash__(self) -> int:
        return hash((self._vertices, frozenset(map(frozenset, self._edges))))

    def __repr__(self) -> str:
        label = f"{self.name!r}, " if self.name else ""
        return f"Graph({label}n={self.n}, m={self.m})"

    # -- serialization -------------------------------------------------

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "vertices": list(self._vertices),
            "edges": [list(e) for e in self._edges],
        }

    @classmethod
    def from_json(cls, data: dict) -> Graph:
        return cls(data["vertices"], [tuple(e) for e in data["edges"]], name=data.get("name", ""))


def disjoint_union(*parts: tuple[str, Graph], name: str = "") -> Graph:
    """Union of graphs after namespacing each one's labels as ``prefix:label``."""
    verts: list = []
    edges: list = []
    for prefix, g in parts:
        h = g.prefixed(prefix)
        verts.extend(h.vertices)
        edges.extend(h.edges)
    return Graph(verts, edges, name=name)


def identify_vertices(g: Graph, keep: Vertex, drop: Vertex, label: Vertex | None = None) -> Graph:
    """Merge ``drop`` into ``keep``; loops and parallel edges are simplified away.

    The merged vertex sits at ``keep``'s position and is renamed to ``label``
    when given.
    """
    g.index(keep)
    g.index(drop)
    new = keep if label is None else label
    ren = {v: v for v in g.vertices}
    ren[keep] = new
    ren[drop] = new
    verts = [ren[v] for v in g.vertices if v != drop]
    edges = set()
    for u, v in g.edges:
        a, b = ren[u], ren[v]
        if a != b:
            edges.add(frozenset((a, b)))
    return Graph(verts, [tuple(e) for e in edges], name=g.name)


def delete_edge(g: Graph, e: tuple) -> Graph:
    """Remove edge ``e``; the vertex set is unchanged."""
    u, v = e
    ne = g.norm_edge(u, v)
    return Graph(g.vertices, [x for x in g.edges if x != ne], name=g.name)


def contract_edge(g: Graph, e: tuple) -> Graph:
    """Contract ``e``, keeping the label of its lower-index endpoint."""
    u, v = g.norm_edge(*e)
    return identify_vertices(g, u, v)


def delete_vertex(g: Graph, v: Vertex) -> Graph:
    g.index(v)
    return g.induced([x for x in g.vertices if x != v], name=g.name)


def complete_graph(n: int, name: str | None = None) -> Graph:
    vs = list(range(n))
    return Graph(vs, [(i, j) for i in vs for j in vs if i < j], name=name if name is not None else f"K{n}")


def complete_multipartite(*sizes: int, name: str = "") -> Graph:
    parts = []
    k = 0
    for s in sizes:
        parts.append(list(range(k, k + s)))
        k += s
    edges = [
        (u, v)
        for i, p in enumerate(parts)
        for q in parts[i + 1 :]
        for u in p
        for v in q
    ]
    return Graph(range(k), edges, name=name)


def cycle_graph(n: int, name: str | None = None) -> Graph:
    return Graph(range(n), [(i, (i + 1) % n) for i in range(n)], name=name if name is not None else f"C{n}")


def path_graph(n: int, name: str | None = None) -> Graph:
    return Graph(range(n), [(i, i + 1) for i in range(n - 1)], name=name if name is not None else f"P{n}")

"""Y-Delta and Delta-Y moves and the move closure of a seed graph."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .errors import DegreeNot3, NotATriangle
from .graph import Graph
from .isomorphism import find_isomorphism, invariant

Y_NABLA = "YNabla"
NABLA_Y = "NablaY"


@dataclass(frozen=True)
class MoveSite:
    kind: str
    vertices: tuple

    @classmethod
    def y_nabla(cls, v) -> MoveSite:
        return cls(Y_NABLA, (v,))

    @classmethod
    def nabla_y(cls, a, b, c) -> MoveSite:
        return cls(NABLA_Y, (a, b, c))


def y_nabla_move(g: Graph, site) -> Graph:
    """Delete a degree-3 vertex and join its three neighbours pairwise.

    ``site`` is a vertex label or a :class:`MoveSite`. If some neighbour pair
    is already adjacent the edge is not duplicated, so the edge count drops;
    the result then carries ``meta["simplified"] = True`` and the list of
    absorbed pairs in ``meta["dropped"]``.
    """
    v = site.vertices[0] if isinstance(site, MoveSite) else site
    nb = g.neighbors(v)
    if len(nb) != 3:
        raise DegreeNot3(f"vertex {v!r} has degree {len(nb)}", vertex=v)
    a, b, c = g.sorted_vertices(nb)
    keep = [e for e in g.edges if v not in e]
    dropped = []
    for x, y in ((a, b), (a, c), (b, c)):
        if g.has_edge(x, y):
            dropped.append((x, y))
        else:
            keep.append((x, y))
    meta = {"move": Y_NABLA, "site": [v], "simplified": bool(dropped)}
    if dropped:
        meta["dropped"] = [list(p) for p in dropped]
    return Graph([u for u in g.vertices if u != v], keep, name=g.name, meta=meta)


def nabla_y_move(g: Graph, site, new_vertex=None) -> Graph:
    """Replace the triangle ``site`` by a fresh vertex joined to its corners.

    The fresh label defaults to the smallest unused non-negative integer when
    all labels are ints, else ``"y<k>"``.
    """
    tri = tuple(site.vertices) if isinstance(site, MoveSite) else tuple(site)
    if len(tri) != 3 or len(set(tri)) != 3:
        raise NotATriangle(f"{tri!r} is not three distinct vertices")
    a, b, c = tri
    for x, y in ((a, b), (a, c), (b, c)):
        if x not in g or y not in g or not g.has_edge(x, y):
            raise NotATriangle(f"{tri!r} is not a triangle", site=list(tri))
    if new_vertex is None:
        new_vertex = fresh_label(g)
    tri_edges = {frozenset(p) for p in ((a, b), (a, c), (b, c))}
    edges = [e for e in g.edges if frozenset(e) not in tri_edges]
    edges += [(a, new_vertex), (b, new_vertex), (c, new_vertex)]
    return Graph([*g.vertices, new_vertex], edges, name=g.name, meta={"move": NABLA_Y, "site": list(tri)})


def fresh_label(g: Graph):
    if all(isinstance(v, int) for v in g.vertices):
        return max(g.vertices, default=-1) + 1
    k = 0
    while f"y{k}" in g:
        k += 1
    return f"y{k}"


def move_sites(g: Graph) -> list[MoveSite]:
    sites = [MoveSite.y_nabla(v) for v in g.vertices if g.degree(v) == 3]
    for a, b, c in combinations(g.vertices, 3):
        if g.has_edge(a, b) and g.has_edge(a, c) and g.has_edge(b, c):
            sites.append(MoveSite.nabla_y(a, b, c))
    return sites


def apply_move(g: Graph, site: MoveSite) -> Graph:
    if site.kind == Y_NABLA:
        return y_nabla_move(g, site)
    return nabla_y_move(g, site)


def move_closure(seed: Graph, max_vertices: int) -> list[Graph]:
    """Isomorphism classes reachable from ``seed`` by either move.

    Breadth-first over every move site of every class found; graphs with more
    than ``max_vertices`` vertices are discarded and not expanded. Results are
    returned in discovery order with integer relabelling 0..n-1.
    """
    if max_vertices < seed.n:
        raise ValueError("max_vertices must be at least the seed's vertex count")
    classes: dict[tuple, list[Graph]] = {}
    found: list[Graph] = []

    def register(h: Graph) -> bool:
        h = h.relabel({v: i for i, v in enumerate(h.vertices)})
        bucket = classes.setdefault(invariant(h), [])
        for other in bucket:
            if find_isomorphism(h, other) is not None:
                return False
        bucket.append(h)
        found.append(h)
        queue.append(h)
        return True

    queue: deque[Graph] = deque()
    register(seed)
    while queue:
        g = queue.popleft()
        for site in move_sites(g):
            h = apply_move(g, site)
            if h.n <= max_vertices:
                register(h)
    return found

"""Spatial graphs as combinatorial crossing diagrams.

A :class:`Diagram` records, for each edge of the underlying graph, the ordered
list of crossings the edge passes through and whether it passes over or under
at each. Nothing here checks that the data is the projection of a real
embedding; :func:`diagram_from_points` and :func:`diagram_from_drawing`
produce diagrams that are realizable by construction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DiagramError, DoubleOver, OrphanCrossing, UnknownEdge, UnorderedPassages
from .graph import Graph

OVER = "over"
UNDER = "under"


@dataclass(frozen=True)
class Passage:
    crossing: int
    role: str  # OVER or UNDER
    position: float | None = None  # parameter along the edge, 0 at its first endpoint


@dataclass
class Diagram:
    graph: Graph
    passages: dict  # normalized edge -> tuple of Passage, in order along the edge
    crossing_ids: tuple = ()
    coords: dict | None = None  # optional 2D vertex positions (for DOT output)
    meta: dict = field(default_factory=dict)

    @property
    def crossings(self) -> int:
        return len(self.crossing_ids)

    def passages_of(self, e) -> tuple:
        return self.passages.get(self.graph.norm_edge(*e), ())

    def to_json(self) -> dict:
        ids = list(self.crossing_ids)
        out = {
            "graph": self.graph.to_json(),
            "crossings": len(ids) if ids == list(range(len(ids))) else ids,
            "passages": {},
        }
        for e in self.graph.edges:
            ps = self.passages.get(e)
            if not ps:
                continue
            out["passages"][edge_key(e)] = [
                [p.crossing, p.role] if p.position is None else [p.crossing, p.role, p.position] for p in ps
            ]
        if self.coords is not None:
            out["coords"] = {str(v): list(self.coords[v]) for v in self.graph.vertices}
        if self.meta:
            out["meta"] = self.meta
        return out

    @classmethod
    def from_json(cls, data: dict) -> Diagram:
        g = Graph.from_json(data["graph"])
        by_str = {str(v): v for v in g.vertices}
        raw = data.get("crossings", 0)
        ids = tuple(range(raw)) if isinstance(raw, int) else tuple(raw)
        passages = {}
        for key, slots in data.get("passages", {}).items():
            a, sep, b = key.partition("--")
            if not sep or a not in by_str or b not in by_str or not g.has_edge(by_str[a], by_str[b]):
                raise UnknownEdge(f"passage list for unknown edge {key!r}")
            e = g.norm_edge(by_str[a], by_str[b])
            flip = e != (by_str[a], by_str[b])
            ps = []
            for slot in slots:
                pos = slot[2] if len(slot) > 2 else None
                if flip and pos is not None:
                    pos = 1 - pos
                ps.append(Passage(int(slot[0]), str(slot[1]), pos))
            if flip:
                ps.reverse()
            passages[e] = tuple(ps)
        coords = None
        if "coords" in data:
            coords = {by_str[k]: tuple(v) for k, v in data["coords"].items()}
        return cls(g, passages, ids, coords, dict(data.get("meta", {})))


def edge_key(e) -> str:
    return f"{e[0]}--{e[1]}"


def diagram_problems(d: Diagram) -> list[DiagramError]:
    """Every violated diagram invariant, in a fixed order (empty when valid)."""
    problems: list[DiagramError] = []
    slots: dict = {}
    for e, ps in d.passages.items():
        if e not in d.graph.edges:
            problems.append(UnknownEdge(f"passages on unknown edge {e!r}"))
            continue
        positions = [p.position for p in ps]
        if any(x is not None for x in positions):
            if any(x is None for x in positions) or any(b <= a for a, b in zip(positions, positions[1:])):
                problems.append(
                    UnorderedPassages(f"positions along {edge_key(e)} are not strictly increasing", edge=list(e))
                )
        for p in ps:
            if p.role not in (OVER, UNDER):
                problems.append(DiagramError(f"crossing {p.crossing} has role {p.role!r}", crossing=p.crossing))
            slots.setdefault(p.crossing, []).append(p.role)
    declared = set(d.crossing_ids)
    for cid in sorted(declared | set(slots)):
        roles = slots.get(cid, [])
        if cid not in declared:
            problems.append(OrphanCrossing(f"crossing {cid} is used but not declared", crossing=cid))
        elif len(roles) != 2:
            problems.append(
                OrphanCrossing(f"crossing {cid} appears in {len(roles)} passage slots, not 2", crossing=cid)
            )
        elif roles[0] == roles[1]:
            problems.append(DoubleOver(f"crossing {cid} is marked {roles[0]} twice", crossing=cid))
    return problems


def validate_diagram(d: Diagram) -> Diagram:
    """Return ``d`` unchanged if it is well formed, else raise the first problem.

    Planar realizability is not checked.
    """
    problems = diagram_problems(d)
    if problems:
        raise problems[0]
    return d


# -- geometry --------------------------------------------------------------


def _orient(p, q, r) -> Fraction:
    return (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])


def _on_segment(p, q, r) -> bool:
    """r lies on the closed segment pq (assuming collinear)."""
    return min(p[0], q[0]) <= r[0] <= max(p[0], q[0]) and min(p[1], q[1]) <= r[1] <= max(p[1], q[1])


def _crossings(g: Graph, xy: dict) -> list[tuple]:
    """Proper crossings of the straight-line drawing as (e1, e2, s, t): the
    crossing sits at parameter s along e1 and t along e2."""
    pts = {v: tuple(Fraction(c) for c in xy[v][:2]) for v in g.vertices}
    for v in g.vertices:
        for u in g.vertices:
            if u != v and pts[u] == pts[v]:
                raise DiagramError(f"vertices {u!r} and {v!r} share a position")
    out = []
    edges = g.edges
    for i, e in enumerate(edges):
        p, q = pts[e[0]], pts[e[1]]
        for v in g.vertices:
            if v not in e and _orient(p, q, pts[v]) == 0 and _on_segment(p, q, pts[v]):
                raise DiagramError(f"vertex {v!r} lies on edge {edge_key(e)}")
        for f in edges[i + 1 :]:
            r, s = pts[f[0]], pts[f[1]]
            shared = set(e) & set(f)
            d1, d2 = _orient(p, q, r), _orient(p, q, s)
            d3, d4 = _orient(r, s, p), _orient(r, s, q)
            if shared:
                if d1 == 0 and d2 == 0:
                    # collinear edges sharing an endpoint overlap iff they point the same way
                    o = shared.pop()
                    a = pts[e[1] if e[0] == o else e[0]]
                    b = pts[f[1] if f[0] == o else f[0]]
                    po = pts[o]
                    if (a[0] - po[0]) * (b[0] - po[0]) + (a[1] - po[1]) * (b[1] - po[1]) > 0:
                        raise DiagramError(f"edges {edge_key(e)} and {edge_key(f)} overlap")
                continue
            if d1 * d2 < 0 and d3 * d4 < 0:
                sp = d3 / (d3 - d4)
                tp = d1 / (d1 - d2)
                out.append((e, f, sp, tp))
            elif d1 == 0 and d2 == 0 and (_on_segment(p, q, r) or _on_segment(p, q, s)):
                raise DiagramError(f"edges {edge_key(e)} and {edge_key(f)} overlap")
    seen: dict = {}
    for e, f, s, t in out:
        for edge, pos in ((e, s), (f, t)):
            if (edge, pos) in seen:
                raise DiagramError(f"three edges meet at one point of {edge_key(edge)}")
            seen[(edge, pos)] = True
    return out


def _assemble(g: Graph, found: list[tuple], coords: dict | None, name_meta: dict | None) -> Diagram:
    slots: dict = {e: [] for e in g.edges}
    for cid, (e, f, s, t, e_over) in enumerate(found):
        slots[e].append((s, cid, OVER if e_over else UNDER))
        slots[f].append((t, cid, UNDER if e_over else OVER))
    passages = {
        e: tuple(Passage(cid, role, float(pos)) for pos, cid, role in sorted(ss)) for e, ss in slots.items() if ss
    }
    return Diagram(g, passages, tuple(range(len(found))), coords, dict(name_meta or {}))


def diagram_from_points(g: Graph, xyz: dict, meta: dict | None = None) -> Diagram:
    """The diagram of the straight-line embedding with vertex ``v`` at
    ``xyz[v]``, viewed from above (larger z passes over).

    Raises :class:`DiagramError` if two edges meet in space or the projection
    is degenerate (a vertex on an edge, overlapping edges).
    """
    found = []
    for e, f, s, t in _crossings(g, xyz):
        ze = Fraction(xyz[e[0]][2]) + s * (Fraction(xyz[e[1]][2]) - Fraction(xyz[e[0]][2]))
        zf = Fraction(xyz[f[0]][2]) + t * (Fraction(xyz[f[1]][2]) - Fraction(xyz[f[0]][2]))
        if ze == zf:
            raise DiagramError(f"edges {edge_key(e)} and {edge_key(f)} intersect")
        found.append((e, f, s, t, ze > zf))
    coords = {v: (float(xyz[v][0]), float(xyz[v][1])) for v in g.vertices}
    return _assemble(g, found, coords, meta)


def diagram_from_drawing(g: Graph, xy: dict, over: dict | None = None, meta: dict | None = None) -> Diagram:
    """Diagram of a straight-line plane drawing with chosen crossing roles.

    ``over`` maps a pair of crossing edges (as a frozenset of two normalized
    edges) to the edge passing over; unlisted crossings put the earlier edge
    (in graph edge order) on top. Any choice is realizable: lift the over
    strand slightly near each crossing.
    """
    over = over or {}
    found = []
    for e, f, s, t in _crossings(g, xy):
        top = over.get(frozenset((e, f)), e)
        found.append((e, f, s, t, top == e))
    coords = {v: (float(xy[v][0]), float(xy[v][1])) for v in g.vertices}
    return _assemble(g, found, coords, meta)


def drawing_crossings(g: Graph, xy: dict) -> list[frozenset]:
    """Crossing edge pairs of a straight-line drawing, in crossing-id order."""
    return [frozenset((e, f)) for e, f, _, _ in _crossings(g, xy)]


def moment_curve_points(g: Graph, params=None) -> dict:
    """Vertices on the moment curve (t, t^2, t^3), in vertex order, at
    parameters t_i = i + 1/(i+1) unless ``params`` is given.

    No four such points are coplanar, so straight edges never meet and every
    graph gets an honest spatial embedding. The projection can still have
    three edges through one point for unlucky parameters (small integers
    do this); the diagram builders reject that, and other parameters fix it.
    """
    if params is None:
        params = [i + Fraction(1, i + 1) for i in range(1, g.n + 1)]
    ts = [Fraction(t) for t in params]
    return {v: (t, t * t, t * t * t) for t, v in zip(ts, g.vertices)}

"""The intrinsically 3-linked constructions and the earlier named graphs.

Composite graphs namespace operand labels as ``L:v`` / ``R:v`` (``G:`` and
``K:`` for the K_{4,4}^- attach) so every vertex's provenance stays readable.
Identified vertices get a joined label such as ``L:0=R:0``.

Where a construction leaves a free choice ("all but one" neighbour), the
default is the first neighbour in the operand's vertex order; every choice is
available by parameter.
"""

from __future__ import annotations

from .enm import check_enm_criterion, generate_enm
from .errors import (
    BadEdge,
    BadVertex,
    CriterionViolated,
    NonDisjointMatching,
    OperandNotInFamily,
    RepeatedVertex,
    Unavailable,
    UnknownName,
)
from .family import K44_X, K44_Y, family_member, identify_member, k44_minus, petersen_graph
from .graph import Graph, complete_graph, complete_multipartite, disjoint_union, identify_vertices
from .moves import y_nabla_move

KINDS = (
    "double-star",
    "star-identify",
    "k44-attach",
    "vertex-identify",
    "five-edge-join",
    "edge-identify",
    "six-cycle-connect",
)


def _operand(g) -> Graph:
    if isinstance(g, Graph):
        return g
    try:
        return family_member(g)
    except UnknownName:
        return named_graph(g)


def _family_operand(g) -> tuple[Graph, str]:
    g = _operand(g)
    member = identify_member(g)
    if member is None:
        raise OperandNotInFamily(f"{g.name or 'operand'} is not a Petersen-family graph")
    return g, g.name or member


def _vertex(g: Graph, v):
    if v in g:
        return v
    # CLI passes strings; accept "3" for an int label 3
    for cand in g.vertices:
        if str(cand) == str(v):
            return cand
    raise BadVertex(f"{v!r} is not a vertex of {g.name or 'operand'}", vertex=v)


def _excluded(g: Graph, v, excl):
    nbrs = g.sorted_vertices(g.neighbors(v))
    if excl is None:
        return nbrs[0]
    excl = _vertex(g, excl)
    if excl not in nbrs:
        raise BadVertex(f"{excl!r} is not adjacent to {v!r} in {g.name or 'operand'}", vertex=excl)
    return excl


def double_star(g1, v1, g2, v2, excl1=None, excl2=None) -> Graph:
    """Join two family graphs by stars from each distinguished vertex to all
    but one neighbour of the other's distinguished vertex."""
    g1, n1 = _family_operand(g1)
    g2, n2 = _family_operand(g2)
    v1, v2 = _vertex(g1, v1), _vertex(g2, v2)
    e1, e2 = _excluded(g1, v1, excl1), _excluded(g2, v2, excl2)
    h = disjoint_union(("L", g1), ("R", g2))
    added = [(f"L:{v1}", f"R:{a}") for a in g2.sorted_vertices(g2.neighbors(v2)) if a != e2]
    added += [(f"R:{v2}", f"L:{a}") for a in g1.sorted_vertices(g1.neighbors(v1)) if a != e1]
    return Graph(
        h.vertices,
        [*h.edges, *added],
        name=f"({n1},{v1})**({n2},{v2})",
        meta={"v1": f"L:{v1}", "v2": f"R:{v2}", "excl1": f"L:{e1}", "excl2": f"R:{e2}", "added": added},
    )


def star_identify(g1, v1, g2, v2, excl1=None, excl2=None) -> Graph:
    """Identify v1 with v2 and add an apex ``x`` joined to all but one
    vertex of each neighbour set."""
    g1, n1 = _family_operand(g1)
    g2, n2 = _family_operand(g2)
    v1, v2 = _vertex(g1, v1), _vertex(g2, v2)
    e1, e2 = _excluded(g1, v1, excl1), _excluded(g2, v2, excl2)
    h = disjoint_union(("L", g1), ("R", g2))
    apex = "x"
    star = [(apex, f"L:{a}") for a in g1.sorted_vertices(g1.neighbors(v1)) if a != e1]
    star += [(apex, f"R:{a}") for a in g2.sorted_vertices(g2.neighbors(v2)) if a != e2]
    h = Graph([*h.vertices, apex], [*h.edges, *star])
    merged = f"L:{v1}=R:{v2}"
    h = identify_vertices(h, f"L:{v1}", f"R:{v2}", label=merged)
    return h.with_name(f"({n1},{v1})*x({n2},{v2})", identified=merged, apex=apex, excl1=f"L:{e1}", excl2=f"R:{e2}")


def k44_attach(g, v, excl=None) -> Graph:
    """Identify the degree-3 vertex ``x`` of K_{4,4}^- with ``v`` and join
    the other degree-3 vertex ``y`` to all but one neighbour of ``v``."""
    g, name = _family_operand(g)
    v = _vertex(g, v)
    e = _excluded(g, v, excl)
    k = k44_minus()
    h = disjoint_union(("G", g), ("K", k))
    y = f"K:{K44_Y}"
    added = [(y, f"G:{a}") for a in g.sorted_vertices(g.neighbors(v)) if a != e]
    h = Graph(h.vertices, [*h.edges, *added])
    merged = f"G:{v}=K:{K44_X}"
    h = identify_vertices(h, f"G:{v}", f"K:{K44_X}", label=merged)
    return h.with_name(f"K44({name},{v})", x=merged, y=y, excl=f"G:{e}")


def vertex_identify(g1, v1, g2, v2, edges=None) -> Graph:
    """Add an admissible edge set between the two neighbour sets, then
    identify v1 with v2 into a single vertex ``x``.

    ``edges`` are (a1, a2) pairs in operand labels; by default the circulant
    set from :func:`generate_enm` is laid on the neighbours in vertex order.
    """
    g1, n1 = _family_operand(g1)
    g2, n2 = _family_operand(g2)
    v1, v2 = _vertex(g1, v1), _vertex(g2, v2)
    a1 = g1.sorted_vertices(g1.neighbors(v1))
    a2 = g2.sorted_vertices(g2.neighbors(v2))
    if edges is None:
        edges = [(a1[i], a2[j]) for i, j in generate_enm(len(a1), len(a2))]
    else:
        edges = [(_vertex(g1, a), _vertex(g2, b)) for a, b in edges]
    if not check_enm_criterion(edges, a1, a2):
        raise CriterionViolated("added edges miss some pair of A1 against some pair of A2")
    h = disjoint_union(("L", g1), ("R", g2))
    h = h.add_edges([(f"L:{a}", f"R:{b}") for a, b in edges])
    h = identify_vertices(h, f"L:{v1}", f"R:{v2}", label="x")
    return h.with_name(f"VI({n1},{v1};{n2},{v2})", enm=[[f"L:{a}", f"R:{b}"] for a, b in edges])


def five_edge_join(g1, g2, matching=None) -> Graph:
    """Add five disjoint edges between the two operands' vertex sets."""
    g1, n1 = _family_operand(g1)
    g2, n2 = _family_operand(g2)
    if matching is None:
        matching = list(zip(g1.vertices[:5], g2.vertices[:5]))
    matching = [(_vertex(g1, a), _vertex(g2, b)) for a, b in matching]
    if len(matching) != 5:
        raise NonDisjointMatching(f"need exactly 5 edges, got {len(matching)}")
    if len({a for a, _ in matching}) != 5 or len({b for _, b in matching}) != 5:
        raise NonDisjointMatching("matching reuses a vertex")
    h = disjoint_union(("L", g1), ("R", g2))
    return h.add_edges([(f"L:{a}", f"R:{b}") for a, b in matching], name=f"({n1})==({n2})")


def edge_identify(g1, e1, g2, e2) -> Graph:
    """Glue edge e1 of g1 onto edge e2 of g2 (first endpoints together)."""
    g1 = _operand(g1)
    g2 = _operand(g2)
    try:
        a, b = (_vertex(g1, x) for x in e1)
        c, d = (_vertex(g2, x) for x in e2)
    except BadVertex as exc:
        raise BadEdge(str(exc)) from None
    if not g1.has_edge(a, b):
        raise BadEdge(f"({a!r}, {b!r}) is not an edge of {g1.name}")
    if not g2.has_edge(c, d):
        raise BadEdge(f"({c!r}, {d!r}) is not an edge of {g2.name}")
    h = disjoint_union(("L", g1), ("R", g2))
    h = identify_vertices(h, f"L:{a}", f"R:{c}", label=f"L:{a}=R:{c}")
    h = identify_vertices(h, f"L:{b}", f"R:{d}", label=f"L:{b}=R:{d}")
    return h.with_name(f"{g1.name}|{g2.name}")


def six_cycle_connect(g1, triple1, g2, triple2) -> Graph:
    """Join two family graphs by the 6-cycle u1-w1-u2-w2-u3-w3-u1."""
    g1, n1 = _family_operand(g1)
    g2, n2 = _family_operand(g2)
    us = [_vertex(g1, u) for u in triple1]
    ws = [_vertex(g2, w) for w in triple2]
    if len(us) != 3 or len(ws) != 3:
        raise BadVertex("each side needs exactly three vertices")
    if len(set(us)) != 3 or len(set(ws)) != 3:
        raise RepeatedVertex("triple repeats a vertex")
    cyc = []
    for i in range(3):
        cyc.append((f"L:{us[i]}", f"R:{ws[i]}"))
        cyc.append((f"R:{ws[i]}", f"L:{us[(i + 1) % 3]}"))
    h = disjoint_union(("L", g1), ("R", g2))
    return h.add_edges(cyc).with_name(f"({n1}C{n2})", cycle=[list(e) for e in cyc])


def build_m() -> Graph:
    """The Y-Delta image of the double star of two Petersen graphs.

    The move is applied at the neighbour of v1 left out of v2's star; it is
    still trivalent after the double star, and its other neighbours are at
    distance two from v1, so the move adds three genuinely new edges.
    """
    pg = petersen_graph()
    ds = double_star(pg, 0, pg, 0)
    site = ds.meta["excl1"]
    m = y_nabla_move(ds, site)
    return m.with_name("M", double_star=ds.name, site=site, v1=ds.meta["v1"], v2=ds.meta["v2"])


def _k10_minus(removed, name) -> Graph:
    k = complete_graph(10)
    drop = {frozenset(e) for e in removed}
    return Graph(k.vertices, [e for e in k.edges if frozenset(e) not in drop], name=name)


NAMED = ("K10-{2 edges}", "K10*", "K7|K7", "K7|K44", "J")
_NAME_ALIASES = {
    "K10-2": "K10-{2 edges}",
    "K10-{2edges}": "K10-{2 edges}",
    "K44|K44": "J",
    "K7": "K7",
    "K44": "K44",
    "K4,4": "K44",
}


def named_graph(name: str) -> Graph:
    """Earlier intrinsically 3-linked graphs (and the K7 / K_{4,4} operands)."""
    key = _NAME_ALIASES.get(name, name)
    if key == "K10-{2 edges}":
        return _k10_minus([(0, 1), (2, 3)], "K10-{2 edges}")
    if key == "K10*":
        return _k10_minus([(0, 1), (0, 2), (0, 3), (0, 4)], "K10*")
    if key == "K7":
        return complete_graph(7)
    if key == "K44":
        return complete_multipartite(4, 4, name="K44")
    if key == "K7|K7":
        return edge_identify(complete_graph(7), (0, 1), complete_graph(7), (0, 1))
    if key == "K7|K44":
        return edge_identify(complete_graph(7), (0, 1), named_graph("K44"), (0, 4))
    if key == "J":
        return edge_identify(named_graph("K44"), (0, 4), named_graph("K44"), (0, 4)).with_name("J")
    if key in ("G(2)", "G2"):
        raise Unavailable("G(2): its structure is not described here, so it is not built")
    raise UnknownName(f"unknown graph name {name!r}")

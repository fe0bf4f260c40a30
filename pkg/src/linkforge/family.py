"""Hard-coded catalog of the seven Petersen-family graphs.

Naming of the two 7-vertex and two 8-vertex members follows their degree
sequences, since only the complete multipartite ones have standard names:

========  ========  ==============================  ===========================
name      |V|,|E|   degree sequence                 how obtained
========  ========  ==============================  ===========================
K6        6, 15     5^6                             seed
K331      7, 15     4^6 6                           K_{3,3,1}
G7        7, 15     3 4^3 5^3                       Delta-Y on a triangle of K6
G8        8, 15     3^3 4^4 5                       Delta-Y on G7 at a triangle
                                                    through its degree-4 and
                                                    degree-5 vertices
K44-      8, 15     3^2 4^6                         K_{4,4} minus one edge
G9        9, 15     3^6 4^3                         Y-Delta on one vertex of PG
PG        10, 15    3^10                            Petersen graph
========  ========  ==============================  ===========================

K331 and G7 share a vertex count and are told apart by their degree
sequences (K331 has the degree-6 apex, G7 the single degree-3 vertex); the
same goes for G8 and K44- (three vs two degree-3 vertices).
"""

from __future__ import annotations

from .errors import UnknownName
from .graph import Graph, complete_graph, complete_multipartite

FAMILY_ORDER = ("K6", "K331", "G7", "G8", "K44-", "G9", "PG")

_G7_EDGES = [
    (0, 3), (0, 4), (0, 5), (0, 6), (1, 3), (1, 4), (1, 5), (1, 6),
    (2, 3), (2, 4), (2, 5), (2, 6), (3, 4), (3, 5), (4, 5),
]
_G8_EDGES = [
    (0, 5), (0, 6), (0, 7), (1, 3), (1, 4), (1, 5), (1, 6), (2, 3),
    (2, 4), (2, 5), (2, 6), (3, 5), (3, 7), (4, 5), (4, 7),
]
# outer 5-cycle 0..4, spokes i--i+5, inner pentagram
_PG_EDGES = (
    [(i, (i + 1) % 5) for i in range(5)]
    + [(i, i + 5) for i in range(5)]
    + [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
)
# PG with vertex 0 removed and its neighbours 1, 4, 5 joined into a triangle
_G9_EDGES = [
    (1, 2), (2, 3), (3, 4), (1, 6), (2, 7), (3, 8), (4, 9),
    (5, 7), (7, 9), (9, 6), (6, 8), (8, 5), (1, 4), (1, 5), (4, 5),
]


def petersen_graph() -> Graph:
    return Graph(range(10), _PG_EDGES, name="PG")


def k44_minus() -> Graph:
    """K_{4,4} on parts {0,1,2,3} and {4,5,6,7} minus the edge (0, 4).

    Vertices 0 and 4 are the two degree-3 vertices (``x`` and ``y`` of the
    attach construction).
    """
    g = complete_multipartite(4, 4)
    return Graph(g.vertices, [e for e in g.edges if e != (0, 4)], name="K44-")


K44_X = 0
K44_Y = 4


def _build(name: str) -> Graph:
    if name == "K6":
        return complete_graph(6, name="K6")
    if name == "K331":
        return complete_multipartite(3, 3, 1, name="K331")
    if name == "G7":
        return Graph(range(7), _G7_EDGES, name="G7")
    if name == "G8":
        return Graph(range(8), _G8_EDGES, name="G8")
    if name == "K44-":
        return k44_minus()
    if name == "G9":
        return Graph(range(1, 10), _G9_EDGES, name="G9")
    if name == "PG":
        return petersen_graph()
    raise UnknownName(f"{name!r} is not a Petersen-family member; expected one of {', '.join(FAMILY_ORDER)}")


def petersen_family() -> dict[str, Graph]:
    """The seven members keyed by name, in a fixed order."""
    return {name: _build(name) for name in FAMILY_ORDER}


def family_member(name: str) -> Graph:
    return _build(_ALIASES.get(name, name))


_ALIASES = {"K3,3,1": "K331", "K_{3,3,1}": "K331", "K44^-": "K44-", "G10": "PG", "Petersen": "PG"}


def identify_member(g: Graph) -> str | None:
    """Name of the family member isomorphic to ``g``, if any."""
    from .isomorphism import find_isomorphism

    if g.m != 15:
        return None
    for name, member in petersen_family().items():
        if member.n == g.n and find_isomorphism(g, member) is not None:
            return name
    return None

"""A fixed embedding f(M) of M with no 3-link certificate.

K1 (the side that received the Y-Delta move, 9 vertices) is labelled 1-9 and
K2 (the untouched Petersen graph) a-k, skipping i. The embedding is a
straight-line drawing on the coordinates below with the listed crossing
roles; every such drawing is the projection of a genuine embedding (lift each
over strand a little near its crossing).

K1's linked pair is the triangle 2-5-9 against the hexagon 1-3-4-8-7-6.
"""

from __future__ import annotations

from .constructions import build_m
from .diagram import Diagram, diagram_from_drawing, drawing_crossings
from .errors import DiagramError
from .graph import Graph
from .isomorphism import find_isomorphism

K1_LABELS = tuple("123456789")
K2_LABELS = tuple("abcdefghjk")

COORDS = {
    "1": (25, 88), "2": (45, 94), "3": (63, 104), "4": (107, 90), "5": (107, 72),
    "6": (107, 50), "7": (65, 7), "8": (45, 20), "9": (25, 35),
    "a": (150, 108), "b": (200, 118), "c": (133, 72), "d": (180, 93), "e": (230, 72),
    "f": (157, 55), "g": (187, 75), "h": (203, 57), "j": (150, 23), "k": (207, 23),
}

EDGES = [
    ("1", "3"), ("1", "6"), ("1", "9"), ("2", "3"), ("2", "5"), ("2", "7"), ("2", "9"),
    ("3", "4"), ("4", "5"), ("4", "8"), ("5", "6"), ("5", "9"), ("6", "7"), ("7", "8"),
    ("8", "9"),
    ("a", "b"), ("a", "c"), ("a", "f"), ("b", "e"), ("b", "h"), ("c", "d"), ("c", "j"),
    ("d", "e"), ("d", "g"), ("e", "k"), ("f", "g"), ("f", "k"), ("g", "h"), ("h", "j"),
    ("j", "k"),
    # the four joining edges: 5 is the apex that took over the double-star
    # edges, c is the other star centre
    ("4", "c"), ("5", "a"), ("5", "j"), ("6", "c"),
]

# (over edge, under edge) for every crossing of the drawing
CROSSINGS = [
    (("1", "6"), ("2", "7")),
    (("1", "6"), ("2", "9")),
    (("1", "6"), ("4", "8")),
    (("2", "5"), ("4", "8")),
    (("2", "7"), ("4", "8")),
    (("5", "9"), ("1", "6")),
    (("5", "9"), ("2", "7")),
    (("5", "9"), ("4", "8")),
    (("5", "a"), ("4", "c")),
    (("5", "j"), ("6", "c")),
    (("c", "d"), ("a", "f")),
    (("d", "e"), ("b", "h")),
    (("f", "k"), ("h", "j")),
]

# how the labels sit on build_m()'s vertices
M_LABELS = {
    "L:0": "5", "L:2": "2", "L:3": "3", "L:4": "4", "L:5": "6", "L:6": "9", "L:7": "7",
    "L:8": "1", "L:9": "8",
    "R:0": "c", "R:1": "d", "R:2": "g", "R:3": "f", "R:4": "a", "R:5": "j", "R:6": "e",
    "R:7": "h", "R:8": "k", "R:9": "b",
}


def fm_graph() -> Graph:
    return Graph(K1_LABELS + K2_LABELS, EDGES, name="f(M)")


def fm_diagram() -> Diagram:
    """The diagram of f(M), checked against M and against its own drawing."""
    g = fm_graph()
    if find_isomorphism(g, build_m()) is None:
        raise DiagramError("f(M) data does not describe M")
    over = {}
    for top, bottom in CROSSINGS:
        pair = frozenset((g.norm_edge(*top), g.norm_edge(*bottom)))
        over[pair] = g.norm_edge(*top)
    drawn = set(drawing_crossings(g, COORDS))
    if drawn != set(over):
        raise DiagramError("crossing table does not match the drawing")
    return diagram_from_drawing(
        g, COORDS, over, meta={"sides": {"K1": list(K1_LABELS), "K2": list(K2_LABELS)}}
    )

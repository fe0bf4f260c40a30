"""Hand-built diagrams shared by the spatial, CLI and acceptance tests."""

from __future__ import annotations

import pytest

from linkforge.constructions import double_star, five_edge_join, k44_attach, star_identify
from linkforge.diagram import Diagram, diagram_from_points, moment_curve_points


def triangles(*names: str) -> dict:
    """Graph JSON with one triangle per name: x1-x2-x3."""
    vs, es = [], []
    for x in names:
        a, b, c = f"{x}1", f"{x}2", f"{x}3"
        vs += [a, b, c]
        es += [[a, b], [b, c], [a, c]]
    return {"name": "".join(names), "vertices": vs, "edges": es}


def hopf_json() -> dict:
    """Two triangles forming a Hopf link: each passes over the other once."""
    return {
        "graph": triangles("a", "b"),
        "crossings": 2,
        "passages": {
            "a1--a2": [[0, "over"]],
            "b1--b2": [[0, "under"]],
            "b2--b3": [[1, "over"]],
            "a2--a3": [[1, "under"]],
        },
    }


def split_json() -> dict:
    return {"graph": triangles("a", "b"), "crossings": 0, "passages": {}}


def keychain_json() -> dict:
    """Three rings a-b-c with a, c each linked to b and not to each other."""
    return {
        "graph": triangles("a", "b", "c"),
        "crossings": 4,
        "passages": {
            "a1--a2": [[0, "over"]],
            "b1--b2": [[0, "under"]],
            "b2--b3": [[1, "over"]],
            "a2--a3": [[1, "under"]],
            "b1--b3": [[2, "over", 0.25], [3, "under", 0.75]],
            "c1--c2": [[2, "under"]],
            "c2--c3": [[3, "over"]],
        },
    }


def two_hopfs_json() -> dict:
    """Two separate Hopf links on four triangles."""
    h = hopf_json()
    g = triangles("a", "b", "c", "d")
    passages = dict(h["passages"])
    passages.update(
        {
            "c1--c2": [[2, "over"]],
            "d1--d2": [[2, "under"]],
            "d2--d3": [[3, "over"]],
            "c2--c3": [[3, "under"]],
        }
    )
    return {"graph": g, "crossings": 4, "passages": passages}


@pytest.fixture
def hopf() -> Diagram:
    return Diagram.from_json(hopf_json())


@pytest.fixture
def split() -> Diagram:
    return Diagram.from_json(split_json())


@pytest.fixture
def keychain() -> Diagram:
    return Diagram.from_json(keychain_json())


def moment_diagram(g) -> Diagram:
    return diagram_from_points(g, moment_curve_points(g), meta={"graph": g.name})


# Straight-line embeddings of the constructions on the moment curve; each
# realizes the configuration one of the witness lemmas looks for.
POSITIVE_CONTROLS = {
    "double-star PG": (lambda: double_star("PG", 0, "PG", 0), "TwoPath"),
    "star-identify K6": (lambda: star_identify("K6", 0, "K6", 0), "SharedVertexPath"),
    "k44-attach K6": (lambda: k44_attach("K6", 0), "SharedArc"),
    "five-edge-join K6": (lambda: five_edge_join("K6", "K6"), "TwoPath"),
}


def pytest_terminal_summary(terminalreporter):
    """Repeat the acceptance PASS/FAIL lines at the end of the run."""
    import sys

    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        terminalreporter.write_line(results[number][1])

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from linkforge.constructions import double_star, named_graph
from linkforge.errors import DanglingReference, SearchBudgetExceeded
from linkforge.family import FAMILY_ORDER, family_member
from linkforge.graph import Graph, complete_graph, complete_multipartite, cycle_graph
from linkforge.minors import (
    MinorModel,
    find_minor,
    is_intrinsically_linked,
    is_minor_minimal_il,
    verify_minor_model,
)

from oracles import has_minor_bruteforce


def model(sets: dict) -> MinorModel:
    return MinorModel({p: frozenset(s) for p, s in sets.items()})


class TestVerify:
    def test_k5_in_k6(self):
        sets = {0: {0}, 1: {1}, 2: {2}, 3: {3}, 4: {4, 5}}
        assert verify_minor_model(complete_graph(6), complete_graph(5), model(sets))

    def test_triangle_in_hexagon(self):
        sets = {0: {0, 1}, 1: {2, 3}, 2: {4, 5}}
        assert verify_minor_model(cycle_graph(6), cycle_graph(3), model(sets))

    def test_disconnected_branch_set(self):
        sets = {0: {0, 3}, 1: {1, 2}, 2: {4, 5}}
        assert not verify_minor_model(cycle_graph(6), cycle_graph(3), model(sets))

    def test_overlapping_branch_sets(self):
        sets = {0: {0, 1}, 1: {1, 2}, 2: {3, 4}}
        assert not verify_minor_model(cycle_graph(6), cycle_graph(3), model(sets))

    def test_dangling(self):
        with pytest.raises(DanglingReference):
            verify_minor_model(cycle_graph(6), cycle_graph(3), model({0: {9}, 1: {1}, 2: {2}}))


class TestFindMinor:
    def test_k6_in_k7(self):
        m = find_minor(complete_graph(7), complete_graph(6))
        assert m is not None and verify_minor_model(complete_graph(7), complete_graph(6), m)

    def test_k6_not_in_k5(self):
        assert find_minor(complete_graph(5), complete_graph(6)) is None

    def test_pg_in_double_star(self):
        host = double_star("PG", 0, "PG", 0)
        m = find_minor(host, family_member("PG"))
        assert m is not None and verify_minor_model(host, family_member("PG"), m)

    def test_needs_contraction(self):
        # K4 subdivided on every edge has K4 as a minor but not as a subgraph
        es = []
        k = 4
        for i in range(4):
            for j in range(i + 1, 4):
                es += [(i, k), (k, j)]
                k += 1
        host = Graph(range(k), es)
        m = find_minor(host, complete_graph(4))
        assert m is not None and verify_minor_model(host, complete_graph(4), m)
        assert find_minor(host, complete_graph(5)) is None

    def test_model_json_round_trip(self):
        host, pat = complete_graph(7), family_member("K331")
        m = find_minor(host, pat)
        again = MinorModel.from_json(m.to_json())
        assert verify_minor_model(host, pat, again)

    def test_budget(self):
        host = complete_multipartite(5, 5)
        with pytest.raises(SearchBudgetExceeded):
            find_minor(host, complete_graph(7), budget=50)

    @settings(max_examples=25, deadline=None)
    @given(st.integers(5, 8), st.integers(0, 2**32 - 1))
    def test_monotone_under_adding_edges(self, n, seed):
        rnd = random.Random(seed)
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        es = [p for p in pairs if rnd.random() < 0.5]
        g = Graph(range(n), es)
        pat = complete_graph(4)
        if find_minor(g, pat) is None:
            return
        extra = [p for p in pairs if p not in es]
        h = Graph(range(n + 1), es + extra[: rnd.randint(0, len(extra))] + [(n, 0)])
        assert find_minor(h, pat) is not None

    def test_matches_oracle_on_small_cases(self):
        rnd = random.Random(7)
        for _ in range(30):
            n = rnd.randint(4, 7)
            host = Graph(range(n), [(i, j) for i in range(n) for j in range(i + 1, n) if rnd.random() < 0.5])
            k = rnd.randint(3, 4)
            pat = Graph(range(k), [(i, j) for i in range(k) for j in range(i + 1, k) if rnd.random() < 0.7])
            expect = has_minor_bruteforce(host.vertices, host.edges, pat.vertices, pat.edges)
            assert (find_minor(host, pat) is not None) == expect


class TestIntrinsicLinking:
    def test_k6(self):
        v = is_intrinsically_linked(complete_graph(6))
        assert v.linked and v.family_member == "K6"

    def test_k5(self):
        v = is_intrinsically_linked(complete_graph(5))
        assert not v.linked
        assert v.to_json() == {"verdict": "not-linked", "family_member": None, "branch_sets": None}

    def test_k44(self):
        g = complete_multipartite(4, 4)
        v = is_intrinsically_linked(g)
        assert v.linked
        assert verify_minor_model(g, family_member(v.family_member), v.model)

    def test_verdict_json(self):
        out = is_intrinsically_linked(family_member("PG")).to_json()
        assert out["verdict"] == "linked" and out["family_member"] == "PG"
        assert len(out["branch_sets"]) == 10

    @pytest.mark.parametrize("name", ["K10-2", "K10*", "K7|K7", "J"])
    def test_named_graphs_are_linked(self, name):
        assert is_intrinsically_linked(named_graph(name)).linked

    def test_planar_graph_is_not_linked(self):
        # the octahedron: planar, 6 vertices, 12 edges
        g = complete_multipartite(2, 2, 2)
        assert not is_intrinsically_linked(g).linked


class TestMinimality:
    @pytest.mark.parametrize("name", ["K6", "PG"])
    def test_family_members(self, name):
        report = is_minor_minimal_il(family_member(name))
        assert report.linked and report.minimal
        assert len(report.minors) == 30

    def test_k7_is_not_minimal(self):
        report = is_minor_minimal_il(complete_graph(7))
        assert report.linked and not report.minimal

    def test_isolated_vertex_is_ignored(self):
        k6 = complete_graph(6)
        g = Graph([*k6.vertices, 99], k6.edges)
        report = is_minor_minimal_il(g)
        assert report.linked and not report.minimal

    def test_unlinked_graph(self):
        report = is_minor_minimal_il(complete_graph(5))
        assert not report.linked and not report.minimal

    def test_report_json(self):
        out = is_minor_minimal_il(family_member("K6")).to_json()
        assert out["minimal"] and {m["operation"] for m in out["minors"]} == {"delete", "contract"}


def test_family_order_is_stable():
    assert FAMILY_ORDER[0] == "K6" and FAMILY_ORDER[-1] == "PG"

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from linkforge.cycles import Cycle, disjoint_cycle_tuples, enumerate_cycles
from linkforge.errors import CycleBudgetExceeded, DegreeNot3, GraphError, NotATriangle, UnknownEdge
from linkforge.family import FAMILY_ORDER, family_member, identify_member, petersen_family
from linkforge.graph import Graph, complete_graph, contract_edge, cycle_graph, delete_edge, path_graph
from linkforge.isomorphism import find_isomorphism, is_isomorphic
from linkforge.moves import MoveSite, move_closure, nabla_y_move, y_nabla_move

from oracles import count_cycles_bruteforce, count_disjoint_pairs_bruteforce

# Frozen from the brute-force subset oracle (sum of Hamiltonian cycle counts
# of induced subgraphs) before the enumerator was trusted.
CYCLE_COUNTS = {"K6": 197, "K331": 150, "G7": 151, "G8": 113, "K44-": 123, "G9": 82, "PG": 57}
DISJOINT_PAIR_COUNTS = {"K6": 10, "K331": 9, "G7": 9, "G8": 8, "K44-": 9, "G9": 7, "PG": 6}


def small_graphs(max_n=7):
    @st.composite
    def build(draw):
        n = draw(st.integers(1, max_n))
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
        return Graph(range(n), chosen)

    return build()


class TestGraph:
    def test_rejects_loops_and_parallel_edges(self):
        with pytest.raises(GraphError):
            Graph([1, 2], [(1, 1)])
        with pytest.raises(GraphError):
            Graph([1, 2], [(1, 2), (2, 1)])

    def test_equal_graphs_serialize_identically(self):
        a = Graph([0, 1, 2], [(2, 1), (0, 1)])
        b = Graph([0, 1, 2], [(0, 1), (1, 2)])
        assert a == b
        assert a.to_json() == b.to_json()

    def test_json_round_trip(self):
        g = family_member("PG")
        assert Graph.from_json(g.to_json()) == g

    def test_delete_edge(self):
        k6 = complete_graph(6)
        h = delete_edge(k6, (0, 1))
        assert (h.n, h.m) == (6, 14)
        tri = cycle_graph(3)
        p = delete_edge(tri, (0, 1))
        assert is_isomorphic(p, path_graph(3))[0]
        assert p.degree(2) == 2
        pg = family_member("PG")
        assert delete_edge(pg, pg.edges[0]).m == 14

    def test_delete_unknown_edge(self):
        with pytest.raises(UnknownEdge):
            delete_edge(path_graph(3), (0, 2))

    def test_contract_edge(self):
        assert (lambda h: (h.n, h.m))(contract_edge(cycle_graph(3), (0, 1))) == (2, 1)
        assert is_isomorphic(contract_edge(complete_graph(6), (2, 4)), complete_graph(5))[0]
        assert (lambda h: (h.n, h.m))(contract_edge(path_graph(3), (0, 1))) == (2, 1)
        with pytest.raises(UnknownEdge):
            contract_edge(path_graph(3), (0, 2))


class TestIsomorphism:
    def test_relabelled_k6(self):
        k6 = complete_graph(6)
        ok, mapping = is_isomorphic(k6, k6.relabel(lambda v: f"v{v}"))
        assert ok and len(mapping) == 6

    def test_different_sizes(self):
        assert is_isomorphic(complete_graph(6), family_member("K331")) == (False, None)

    def test_petersen_as_kneser_graph(self):
        from itertools import combinations

        subsets = [frozenset(s) for s in combinations(range(5), 2)]
        kneser = Graph(
            [tuple(sorted(s)) for s in subsets],
            [(tuple(sorted(a)), tuple(sorted(b))) for a, b in combinations(subsets, 2) if not a & b],
        )
        ok, mapping = is_isomorphic(family_member("PG"), kneser)
        assert ok
        pg = family_member("PG")
        for u, v in pg.edges:
            assert kneser.has_edge(mapping[u], mapping[v])

    @settings(max_examples=60, deadline=None)
    @given(small_graphs(), st.randoms(use_true_random=False))
    def test_random_relabelling_is_isomorphic(self, g, rnd):
        perm = list(g.vertices)
        rnd.shuffle(perm)
        h = Graph(perm, g.relabel(dict(zip(g.vertices, perm))).edges)
        ok, mapping = is_isomorphic(g, h)
        assert ok
        assert all(h.has_edge(mapping[u], mapping[v]) for u, v in g.edges)


class TestMoves:
    def test_y_nabla_on_k4(self):
        h = y_nabla_move(complete_graph(4), 0)
        assert (h.n, h.m) == (3, 3)
        assert h.meta["simplified"]

    def test_y_nabla_on_g7_gives_k6(self):
        g7 = family_member("G7")
        site = next(v for v in g7.vertices if g7.degree(v) == 3)
        assert is_isomorphic(y_nabla_move(g7, MoveSite.y_nabla(site)), complete_graph(6))[0]

    def test_nabla_y_on_k6_gives_g7(self):
        h = nabla_y_move(complete_graph(6), (0, 1, 2))
        assert (h.n, h.m) == (7, 15)
        assert identify_member(h) == "G7"

    def test_nabla_y_on_k3_is_a_star(self):
        h = nabla_y_move(cycle_graph(3), (0, 1, 2))
        assert sorted(h.degrees()) == [1, 1, 1, 3]

    def test_round_trip(self):
        g = family_member("K331")
        tri = next(
            (a, b, c)
            for a in g.vertices
            for b in g.vertices
            for c in g.vertices
            if a < b < c and g.has_edge(a, b) and g.has_edge(a, c) and g.has_edge(b, c)
        )
        h = nabla_y_move(g, tri, new_vertex="new")
        back = y_nabla_move(h, "new")
        assert not back.meta["simplified"]
        assert back == g

    def test_move_errors(self):
        with pytest.raises(DegreeNot3):
            y_nabla_move(complete_graph(5), 0)
        with pytest.raises(NotATriangle):
            nabla_y_move(cycle_graph(4), (0, 1, 2))

    @settings(max_examples=40, deadline=None)
    @given(small_graphs(7))
    def test_move_involution_and_counts(self, g):
        for v in g.vertices:
            if g.degree(v) != 3:
                continue
            h = y_nabla_move(g, v)
            if h.meta["simplified"]:
                continue
            assert (h.n, h.m) == (g.n - 1, g.m)
            back = nabla_y_move(h, tuple(g.neighbors(v)), new_vertex=v)
            assert is_isomorphic(back, g)[0]


class TestFamily:
    def test_closure_of_k6(self):
        closure = move_closure(complete_graph(6), 10)
        assert len(closure) == 7
        assert all(g.m == 15 for g in closure)
        fam = petersen_family()
        for g in closure:
            assert identify_member(g) is not None
        for g in fam.values():
            assert any(find_isomorphism(g, h) for h in closure)

    def test_closure_of_k3(self):
        closure = move_closure(cycle_graph(3), 4)
        assert sorted((g.n, g.m) for g in closure) == [(3, 3), (4, 3)]

    def test_catalog(self):
        fam = petersen_family()
        assert tuple(fam) == FAMILY_ORDER
        assert (fam["K6"].n, fam["K6"].m) == (6, 15)
        pg = fam["PG"]
        assert pg.n == 10 and set(pg.degrees()) == {3}
        assert sorted(fam["K44-"].degrees()).count(3) == 2
        assert family_member("G10") == pg

    def test_seven_vertex_members_differ(self):
        assert sorted(family_member("K331").degrees()) == [4, 4, 4, 4, 4, 4, 6]
        assert sorted(family_member("G7").degrees()) == [3, 4, 4, 4, 5, 5, 5]


class TestCycles:
    def test_k4(self):
        cs = enumerate_cycles(complete_graph(4))
        assert len(cs) == 7
        assert sorted(len(c) for c in cs) == [3, 3, 3, 3, 4, 4, 4]

    def test_tree(self):
        assert enumerate_cycles(path_graph(6)) == []

    @pytest.mark.parametrize("name", FAMILY_ORDER)
    def test_family_counts_match_oracle_values(self, name):
        assert len(enumerate_cycles(family_member(name))) == CYCLE_COUNTS[name]

    def test_pg_count_against_oracle(self):
        pg = family_member("PG")
        assert count_cycles_bruteforce(pg.vertices, pg.edges) == len(enumerate_cycles(pg))

    @settings(max_examples=40, deadline=None)
    @given(small_graphs(6))
    def test_count_matches_oracle(self, g):
        assert len(enumerate_cycles(g)) == count_cycles_bruteforce(g.vertices, g.edges)

    def test_canonical_form(self):
        g = complete_graph(5)
        a = Cycle.from_walk(g, [3, 1, 4, 0])
        b = Cycle.from_walk(g, [0, 4, 1, 3])
        assert a == b
        assert a.vertices == (0, 3, 1, 4)
        assert a != Cycle.from_walk(g, [0, 1, 3, 4])

    def test_budget(self):
        with pytest.raises(CycleBudgetExceeded):
            enumerate_cycles(complete_graph(6), max_count=50)

    def test_disjoint_pairs_of_k6(self):
        pairs = disjoint_cycle_tuples(complete_graph(6), 2)
        assert len(pairs) == 10
        assert all(len(a) == len(b) == 3 for a, b in pairs)
        assert disjoint_cycle_tuples(complete_graph(6), 3) == []

    @pytest.mark.parametrize("name", FAMILY_ORDER)
    def test_disjoint_pairs_span_everything(self, name):
        g = family_member(name)
        pairs = disjoint_cycle_tuples(g, 2)
        assert len(pairs) == DISJOINT_PAIR_COUNTS[name]
        assert all(a.vertex_set | b.vertex_set == set(g.vertices) for a, b in pairs)

    def test_pg_pairs_against_oracle(self):
        pg = family_member("PG")
        assert count_disjoint_pairs_bruteforce(pg.vertices, pg.edges) == (6, 0)

    def test_disjoint_triples(self):
        g = Graph(range(9), [(i, j) for k in (0, 3, 6) for i, j in ((k, k + 1), (k + 1, k + 2), (k, k + 2))])
        assert len(disjoint_cycle_tuples(g, 3)) == 1

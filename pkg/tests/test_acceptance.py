"""The eight acceptance criteria, one test each.

Every criterion prints a single PASS/FAIL line (collected into the pytest
terminal summary as well). Runtime ceilings are part of the criteria and are
pinned below. Run standalone with ``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import random
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from linkforge.certify import check_witness  # noqa: E402
from linkforge.constructions import (  # noqa: E402
    build_m,
    double_star,
    k44_attach,
    named_graph,
    star_identify,
)
from linkforge.cycles import disjoint_cycle_tuples  # noqa: E402
from linkforge.enm import check_enm_criterion, generate_enm, lower_bound_as_stated, min_enm  # noqa: E402
from linkforge.family import FAMILY_ORDER, identify_member, petersen_family  # noqa: E402
from linkforge.fm import fm_diagram  # noqa: E402
from linkforge.graph import Graph, complete_graph, complete_multipartite  # noqa: E402
from linkforge.isomorphism import find_isomorphism  # noqa: E402
from linkforge.minors import find_minor, is_minor_minimal_il, verify_minor_model  # noqa: E402
from linkforge.moves import move_closure  # noqa: E402
from linkforge.spatial import WITNESS_SEARCHES, verify_no_3link_certificate  # noqa: E402

from conftest import POSITIVE_CONTROLS, moment_diagram  # noqa: E402
from oracles import count_disjoint_pairs_bruteforce, has_minor_bruteforce  # noqa: E402

# runtime ceilings in seconds
LIMIT_CLOSURE = 60
LIMIT_OBSERVATION = 60
LIMIT_MINIMALITY = 600
LIMIT_ENM = 300
LIMIT_FM = 300

ORACLE_CASES = 200
ORACLE_SEED = 20261016
ORACLE_MAX_HOST = 9

RESULTS: dict[int, tuple[bool, str]] = {}


def report(number: int, title: str, ok: bool, detail: str) -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title} ({detail})"
    RESULTS[number] = (ok, line)
    print(line)
    assert ok, line


def timed(fn):
    start = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - start


# 1 ---------------------------------------------------------------------------


def test_criterion_1_petersen_family_generation():
    closure, secs = timed(lambda: move_closure(complete_graph(6), 10))
    fam = petersen_family()
    names = [identify_member(g) for g in closure]
    ok = (
        len(closure) == 7
        and sorted(names, key=FAMILY_ORDER.index) == list(FAMILY_ORDER)
        and all(g.m == 15 for g in closure)
        and sorted(g.n for g in closure) == [6, 7, 7, 8, 8, 9, 10]
        and all(any(find_isomorphism(m, g) for g in closure) for m in fam.values())
        and secs < LIMIT_CLOSURE
    )
    report(1, "move closure of K6 is the 7-member family", ok, f"{len(closure)} classes, {secs:.2f}s")


# 2 ---------------------------------------------------------------------------


def test_criterion_2_disjoint_pairs_span_all_vertices():
    def scan():
        total = violations = 0
        for g in petersen_family().values():
            pairs = disjoint_cycle_tuples(g, 2)
            total += len(pairs)
            violations += sum(1 for a, b in pairs if a.vertex_set | b.vertex_set != set(g.vertices))
            oracle_total, oracle_missing = count_disjoint_pairs_bruteforce(g.vertices, g.edges)
            violations += oracle_missing + abs(oracle_total - len(pairs))
        return total, violations

    (total, violations), secs = timed(scan)
    ok = violations == 0 and total > 0 and secs < LIMIT_OBSERVATION
    report(2, "every disjoint cycle pair spans its family graph", ok,
           f"{total} pairs, {violations} violations, {secs:.2f}s")


# 3 ---------------------------------------------------------------------------


def test_criterion_3_minor_minimality():
    def scan():
        members = {name: is_minor_minimal_il(g) for name, g in petersen_family().items()}
        k7 = is_minor_minimal_il(complete_graph(7))
        k44 = is_minor_minimal_il(complete_multipartite(4, 4))
        return members, k7, k44

    (members, k7, k44), secs = timed(scan)
    minimal = sum(1 for r in members.values() if r.linked and r.minimal)
    ok = (
        minimal == 7
        and k7.linked and not k7.minimal
        and k44.linked and not k44.minimal
        and secs < LIMIT_MINIMALITY
    )
    report(3, "family minor-minimal, K7 and K44 linked but not minimal", ok,
           f"{minimal}/7 minimal, {secs:.2f}s")


# 4 ---------------------------------------------------------------------------


def _counted(g: Graph) -> tuple[int, int]:
    # direct enumeration, independent of the stored edge tuple
    return len(set(g.vertices)), sum(g.degrees()) // 2


def test_criterion_4_construction_counts():
    fam = petersen_family()
    bad = []
    checked = 0
    for a in FAMILY_ORDER:
        g1 = fam[a]
        for v1 in g1.vertices:
            d1 = g1.degree(v1)
            for excl in g1.neighbors(v1):
                h = k44_attach(g1, v1, excl)
                checked += 1
                if _counted(h) != (g1.n + 7, g1.m + 15 + d1 - 1):
                    bad.append(h.name)
            for b in FAMILY_ORDER:
                g2 = fam[b]
                for v2 in g2.vertices:
                    d2 = g2.degree(v2)
                    want_m = g1.m + g2.m + (d1 - 1) + (d2 - 1)
                    for build in (double_star, star_identify):
                        h = build(g1, v1, g2, v2)
                        checked += 1
                        if _counted(h) != (g1.n + g2.n, want_m):
                            bad.append(h.name)
    fixed = {
        "(K6)**(K6)": (double_star("K6", 0, "K6", 0), (12, 38)),
        "(K6)*x(K6)": (star_identify("K6", 0, "K6", 0), (12, 38)),
        "K44(K6)": (k44_attach("K6", 0), (13, 34)),
        "M": (build_m(), (19, 34)),
        "J": (named_graph("J"), (14, 31)),
        "K10-{2 edges}": (named_graph("K10-{2 edges}"), (10, 43)),
        "K10*": (named_graph("K10*"), (10, 41)),
    }
    for name, (g, want) in fixed.items():
        checked += 1
        if _counted(g) != want or (g.n, g.m) != want:
            bad.append(name)
    report(4, "construction vertex/edge counts", not bad, f"{checked} graphs, mismatches: {bad or 'none'}")


# 5 ---------------------------------------------------------------------------


def test_criterion_5_enm():
    def scan():
        problems = []
        for n in range(3, 7):
            for m in range(3, 7):
                if not check_enm_criterion(generate_enm(n, m), range(n), range(m)):
                    problems.append(f"generate({n},{m})")
        minima = {}
        for n in range(3, 6):
            for m in range(3, 6):
                es = min_enm(n, m)
                minima[(n, m)] = len(es)
                if not check_enm_criterion(es, range(n), range(m)):
                    problems.append(f"min({n},{m}) invalid")
                if len(es) < lower_bound_as_stated(n, m):
                    problems.append(f"min({n},{m})={len(es)} below bound {lower_bound_as_stated(n, m)}")
        if minima[(3, 3)] != 3:
            problems.append(f"min(3,3)={minima[(3, 3)]}")
        return problems, minima

    (problems, minima), secs = timed(scan)
    ok = not problems and secs < LIMIT_ENM
    report(5, "admissible edge sets and the lower bound", ok,
           f"min(3,3)={minima[(3, 3)]}, min(5,5)={minima[(5, 5)]}, problems: {problems or 'none'}, {secs:.2f}s")


# 6 ---------------------------------------------------------------------------


def test_criterion_6_fm_has_no_3link_certificate():
    d = fm_diagram()
    rep, secs = timed(lambda: verify_no_3link_certificate(d))
    checks = {c.name: c.passed for c in rep.checks}
    required = [
        "no-pairwise-linked-triple",
        "no-TwoPath-witness",
        "no-SharedVertexPath-witness",
        "no-SharedArc-witness",
        "one-linked-pair-in-K1",
        "one-linked-pair-in-K2",
        "no-cross-side-linking",
        "no-two-joins-between-linked-cycles",
    ]
    ok = (
        find_isomorphism(d.graph, build_m()) is not None
        and all(checks.get(name) for name in required)
        and rep.passed
        and secs < LIMIT_FM
    )
    failed = [n for n in required if not checks.get(n)]
    report(6, "f(M) passes the no-3-link certificate checks", ok, f"failed: {failed or 'none'}, {secs:.2f}s")


# 7 ---------------------------------------------------------------------------


def test_criterion_7_witness_positive_controls():
    outcomes = []
    for name, (build, lemma) in sorted(POSITIVE_CONTROLS.items()):
        d = moment_diagram(build())
        w = WITNESS_SEARCHES[lemma](d)
        problems = ["no witness"] if w is None else check_witness(d.to_json(), w.to_json())
        outcomes.append((name, lemma, not problems))
    ok = all(good for _, _, good in outcomes) and len(outcomes) == 4
    detail = ", ".join(f"{name}->{lemma}:{'ok' if good else 'missing'}" for name, lemma, good in outcomes)
    report(7, "positive controls yield independently re-checked witnesses", ok, detail)


# 8 ---------------------------------------------------------------------------


def _random_graph(rng: random.Random, n: int, p: float, connected: bool = False) -> Graph:
    while True:
        g = Graph(range(n), [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])
        if not connected or g.is_connected():
            return g


def test_criterion_8_oracle_equivalence():
    rng = random.Random(ORACLE_SEED)
    fam = petersen_family()
    mismatches = []
    found = 0
    for case in range(ORACLE_CASES):
        n = rng.randint(4, ORACLE_MAX_HOST)
        host = _random_graph(rng, n, rng.choice([0.3, 0.45, 0.6, 0.75]))
        if n >= 6 and rng.random() < 0.3:
            pattern = fam[rng.choice([k for k, g in fam.items() if g.n <= n])]
        else:
            pattern = _random_graph(rng, rng.randint(2, min(5, n)), rng.choice([0.5, 0.7, 0.9]), connected=True)
        model = find_minor(host, pattern)
        expect = has_minor_bruteforce(host.vertices, host.edges, pattern.vertices, pattern.edges)
        if (model is not None) != expect or (model is not None and not verify_minor_model(host, pattern, model)):
            mismatches.append(case)
        found += model is not None
    report(8, "find_minor agrees with the brute-force oracle", not mismatches,
           f"{ORACLE_CASES} cases, {found} with a minor, mismatches: {mismatches or 'none'}")


if __name__ == "__main__":
    failures = 0
    for fn in (
        test_criterion_1_petersen_family_generation,
        test_criterion_2_disjoint_pairs_span_all_vertices,
        test_criterion_3_minor_minimality,
        test_criterion_4_construction_counts,
        test_criterion_5_enm,
        test_criterion_6_fm_has_no_3link_certificate,
        test_criterion_7_witness_positive_controls,
        test_criterion_8_oracle_equivalence,
    ):
        try:
            fn()
        except AssertionError:
            failures += 1
    sys.exit(1 if failures else 0)

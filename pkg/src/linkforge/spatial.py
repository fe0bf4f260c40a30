"""Mod-2 linking on diagrams and searches for 3-link certificates.

Cycles are ordered by (length, canonical key); linked pairs are ordered
lexicographically with the smaller cycle first; witness searches walk pairs
of linked pairs in that order, so every result is the first one under a
fixed total order and does not depend on anything but the input.

Everything here is homological: an empty result means "no certificate of
this kind", never a proof that the embedding is split.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

import numpy as np

from .cycles import DEFAULT_CYCLE_BUDGET, Cycle, enumerate_cycles
from .diagram import OVER, Diagram, validate_diagram
from .errors import CycleBudgetExceeded, CyclesNotDisjoint, GraphError, WrongUnderlyingGraph
from .graph import Graph, complete_multipartite
from .isomorphism import find_isomorphism

TWO_PATH = "TwoPath"
SHARED_VERTEX_PATH = "SharedVertexPath"
SHARED_ARC = "SharedArc"
PAIRWISE_LINKED = "PairwiseLinked"


def _as_cycle(g: Graph, c) -> Cycle:
    return c if isinstance(c, Cycle) else Cycle.from_walk(g, c)


class _Signatures:
    """Per-edge bitmasks of crossings passed over / under.

    For disjoint cycles C and D, the crossings where C passes over D are
    exactly ``over(C) & under(D)``: a crossing has one over strand, and the
    under strand lies on D only.
    """

    def __init__(self, d: Diagram):
        bit = {cid: i for i, cid in enumerate(sorted(d.crossing_ids))}
        self.over: dict = {}
        self.under: dict = {}
        for e, ps in d.passages.items():
            o = u = 0
            for p in ps:
                if p.role == OVER:
                    o |= 1 << bit[p.crossing]
                else:
                    u |= 1 << bit[p.crossing]
            self.over[e] = o
            self.under[e] = u
        self.graph = d.graph

    def of(self, c: Cycle) -> tuple[int, int]:
        o = u = 0
        for e in c.edges(self.graph):
            o |= self.over.get(e, 0)
            u |= self.under.get(e, 0)
        return o, u


def _omega(sa: tuple, sb: tuple) -> int:
    return bin(sa[0] & sb[1]).count("1") & 1


def mod2_linking(d: Diagram, a, b) -> int:
    """Parity of the crossings where ``a`` passes over ``b``."""
    g = d.graph
    a, b = _as_cycle(g, a), _as_cycle(g, b)
    if a.vertex_set & b.vertex_set:
        raise CyclesNotDisjoint("linking is only defined for vertex-disjoint cycles")
    sig = _Signatures(d)
    return _omega(sig.of(a), sig.of(b))


@dataclass
class _Analysis:
    """Cycles of a diagram with their vertex masks and crossing signatures."""

    cycles: list
    vmask: list
    sigs: list
    pairs: list  # (i, j) index pairs, i < j, with omega = 1


def _vertex_words(g: Graph, cycles: list) -> np.ndarray:
    words = (g.n + 63) // 64
    arr = np.zeros((len(cycles), max(words, 1)), dtype=np.uint64)
    for r, c in enumerate(cycles):
        for i in c.key:
            arr[r, i // 64] |= np.uint64(1 << (i % 64))
    return arr


def _linked_index_pairs(g: Graph, cycles: list, sigs: list, live: list, max_count: int) -> list:
    """Index pairs (i, j), i < j, of disjoint cycles with omega(C_i, C_j) = 1.

    Disjoint pairs are far rarer than linking signatures, so cycles are
    grouped by vertex set, disjoint vertex-set pairs are found with a
    vectorized mask test, and linking is evaluated only inside those.
    """
    groups: dict = {}
    for i in live:
        m = 0
        for v in cycles[i].key:
            m |= 1 << v
        groups.setdefault(m, []).append(i)
    masks = list(groups)
    if not masks:
        return []
    words = _vertex_words(g, [cycles[groups[m][0]] for m in masks])
    pairs: list = []
    for r in range(len(masks)):
        disjoint = ~np.any(words[r + 1 :] & words[r], axis=1)
        for off in np.nonzero(disjoint)[0].tolist():
            for i in groups[masks[r]]:
                for j in groups[masks[r + 1 + off]]:
                    a, b = (i, j) if i < j else (j, i)
                    if bin(sigs[a][0] & sigs[b][1]).count("1") & 1:
                        pairs.append((a, b))
        if len(pairs) > max_count:
            raise CycleBudgetExceeded(f"more than {max_count} linked pairs", budget=max_count)
    pairs.sort()
    return pairs


def _analyse(d: Diagram, max_count: int) -> _Analysis:
    validate_diagram(d)
    g = d.graph
    cycles = enumerate_cycles(g, max_count)
    sig = _Signatures(d)
    sigs = [sig.of(c) for c in cycles]
    vmask = []
    for c in cycles:
        m = 0
        for i in c.key:
            m |= 1 << i
        vmask.append(m)
    # only cycles touching some crossing can link anything
    live = [i for i, s in enumerate(sigs) if s[0] or s[1]]
    pairs = _linked_index_pairs(g, cycles, sigs, live, max_count)
    pairs.sort()
    return _Analysis(cycles, vmask, sigs, pairs)


def linked_pairs(d: Diagram, max_count: int = DEFAULT_CYCLE_BUDGET) -> list[tuple[Cycle, Cycle]]:
    """All disjoint cycle pairs with odd linking, smaller cycle first, sorted."""
    an = _analyse(d, max_count)
    return [(an.cycles[i], an.cycles[j]) for i, j in an.pairs]


def pairwise_linked_triples(d: Diagram, max_count: int = DEFAULT_CYCLE_BUDGET) -> list[tuple[Cycle, Cycle, Cycle]]:
    """Triples of pairwise disjoint cycles whose linking graph is connected."""
    return [(an_c[a], an_c[b], an_c[c]) for an_c, (a, b, c) in _triples(_analyse(d, max_count))]


def _triples(an: _Analysis):
    partners: dict = {}
    for i, j in an.pairs:
        partners.setdefault(i, []).append(j)
        partners.setdefault(j, []).append(i)
    found = set()
    for centre, ps in partners.items():
        ps = sorted(ps)
        for x in range(len(ps)):
            for y in range(x + 1, len(ps)):
                a, b = ps[x], ps[y]
                if not an.vmask[a] & an.vmask[b]:
                    found.add(tuple(sorted((centre, a, b))))
    return [(an.cycles, t) for t in sorted(found)]


# -- witnesses ---------------------------------------------------------------


@dataclass
class Witness:
    lemma: str
    cycles: tuple  # C1..C4 (C1..C3 for PairwiseLinked)
    paths: tuple = ()  # vertex sequences
    arc: tuple = ()  # shared arc (SharedArc) or shared vertex (SharedVertexPath)
    linking: dict = field(default_factory=dict)  # "i,j" (1-based) -> omega

    def to_json(self) -> dict:
        return {
            "lemma": self.lemma,
            "cycles": [list(c.vertices) for c in self.cycles],
            "paths": [list(p) for p in self.paths],
            "shared": list(self.arc),
            "linking": dict(self.linking),
        }


def _pair_orientations(an: _Analysis):
    """(C1, C2), (C3, C4) index choices over all ordered pairs of distinct
    linked pairs, in search order."""
    pairs = an.pairs
    for x in range(len(pairs)):
        for y in range(x + 1, len(pairs)):
            p, q = pairs[x], pairs[y]
            for c1, c2 in (p, p[::-1]):
                for c3, c4 in (q, q[::-1]):
                    yield c1, c2, c3, c4


def _adjacency(g: Graph) -> list[list[int]]:
    return [sorted(g.index(u) for u in g.neighbors(v)) for v in g.vertices]


def _flow_paths(adj: list, sources: int, sinks: int, blocked: int, k: int = 2) -> list[list[int]] | None:
    """``k`` vertex-disjoint paths from the ``sources`` set to the ``sinks``
    set whose interior vertices avoid ``blocked`` and both end sets, or None.

    Unit vertex capacities via node splitting and ``k`` rounds of BFS
    augmenting-path search on the residual network.
    """
    n = len(adj)
    S, T = 2 * n, 2 * n + 1  # v_in = 2v, v_out = 2v + 1
    cap: dict = {}
    nbrs: dict = {}
    flow: dict = {}

    def arc(a, b):
        if (a, b) in cap:
            return
        cap[(a, b)] = 1
        cap.setdefault((b, a), 0)
        nbrs.setdefault(a, []).append(b)
        nbrs.setdefault(b, []).append(a)

    for v in range(n):
        if sources >> v & 1:
            arc(S, 2 * v + 1)
        elif sinks >> v & 1:
            arc(2 * v, T)
            continue
        elif not blocked >> v & 1:
            arc(2 * v, 2 * v + 1)
        else:
            continue
        for w in adj[v]:
            if sources >> w & 1:
                continue
            if sinks >> w & 1 or not blocked >> w & 1:
                arc(2 * v + 1, 2 * w)

    for _ in range(k):
        prev = {S: None}
        queue = deque([S])
        while queue and T not in prev:
            a = queue.popleft()
            for b in nbrs.get(a, ()):
                if b not in prev and cap[(a, b)] > 0:
                    prev[b] = a
                    queue.append(b)
        if T not in prev:
            return None
        b = T
        while prev[b] is not None:
            a = prev[b]
            cap[(a, b)] -= 1
            cap[(b, a)] += 1
            # net flow on the original arc direction
            if flow.get((b, a), 0) > 0:
                flow[(b, a)] -= 1
            else:
                flow[(a, b)] = flow.get((a, b), 0) + 1
            b = a

    succ = {a: b for (a, b), f in flow.items() if f > 0 and a != S}
    paths = []
    for (a, b), f in sorted(flow.items()):
        if a != S or f <= 0:
            continue
        node = b  # v_out of a source vertex
        path = [node // 2]
        while node != T:
            node = succ[node]
            if node != T and node % 2 == 0:
                path.append(node // 2)
        paths.append(path)
    return paths


def _mask_of(vs) -> int:
    m = 0
    for i in vs:
        m |= 1 << i
    return m


def _linking_record(an: _Analysis, idx: tuple, links: list[tuple[int, int]]) -> dict:
    return {f"{a + 1},{b + 1}": _omega(an.sigs[idx[a]], an.sigs[idx[b]]) for a, b in links}


def _disjoint_quad(an: _Analysis, c1, c2, c3, c4, c2c3_disjoint: bool) -> bool:
    vm = an.vmask
    if vm[c1] & vm[c4] or vm[c1] & vm[c3] or vm[c4] & vm[c2]:
        return False
    return not (vm[c2] & vm[c3]) if c2c3_disjoint else True


def witness_two_path(d: Diagram, max_count: int = DEFAULT_CYCLE_BUDGET) -> Witness | None:
    """Four disjoint cycles, C1-C2 and C3-C4 linked, and two vertex-disjoint
    C2 -> C3 paths whose interiors avoid all four cycles."""
    return _two_path(d, _analyse(d, max_count))


def _two_path(d: Diagram, an: _Analysis) -> Witness | None:
    g = d.graph
    adj = _adjacency(g)
    vm = an.vmask
    for c1, c2, c3, c4 in _pair_orientations(an):
        if not _disjoint_quad(an, c1, c2, c3, c4, True):
            continue
        blocked = vm[c1] | vm[c2] | vm[c3] | vm[c4]
        paths = _flow_paths(adj, vm[c2], vm[c3], blocked)
        if paths is None:
            continue
        idx = (c1, c2, c3, c4)
        return Witness(
            TWO_PATH,
            tuple(an.cycles[i] for i in idx),
            tuple(tuple(g.vertices[v] for v in p) for p in paths),
            (),
            _linking_record(an, idx, [(0, 1), (2, 3)]),
        )
    return None


def _shortest_path(adj: list, sources: int, sinks: int, blocked: int) -> list[int] | None:
    """BFS path from the ``sources`` set to the ``sinks`` set with interior
    outside ``blocked`` (smallest vertex indices first)."""
    prev: dict = {}
    queue = deque()
    for v in range(len(adj)):
        if sources >> v & 1:
            prev[v] = None
            queue.append(v)
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if w in prev:
                continue
            if sinks >> w & 1:
                path = [w, v]
                while prev[path[-1]] is not None:
                    path.append(prev[path[-1]])
                return path[::-1]
            if not blocked >> w & 1:
                prev[w] = v
                queue.append(w)
    return None


def witness_shared_vertex_path(d: Diagram, max_count: int = DEFAULT_CYCLE_BUDGET) -> Witness | None:
    """C2 and C3 meet in exactly one vertex x, C1 and C4 are disjoint from
    everything else, C1-C2 and C3-C4 are linked, and some path joins
    C2 - x to C3 - x with interior off all four cycles."""
    return _shared_vertex_path(d, _analyse(d, max_count))


def _shared_vertex_path(d: Diagram, an: _Analysis) -> Witness | None:
    g = d.graph
    adj = _adjacency(g)
    vm = an.vmask
    for c1, c2, c3, c4 in _pair_orientations(an):
        common = vm[c2] & vm[c3]
        if not common or common & (common - 1):
            continue
        if not _disjoint_quad(an, c1, c2, c3, c4, False):
            continue
        blocked = vm[c1] | vm[c2] | vm[c3] | vm[c4]
        path = _shortest_path(adj, vm[c2] & ~common, vm[c3] & ~common, blocked)
        if path is None:
            continue
        idx = (c1, c2, c3, c4)
        x = g.vertices[common.bit_length() - 1]
        return Witness(
            SHARED_VERTEX_PATH,
            tuple(an.cycles[i] for i in idx),
            (tuple(g.vertices[v] for v in path),),
            (x,),
            _linking_record(an, idx, [(0, 1), (2, 3)]),
        )
    return None


def _shared_arc(c2: Cycle, c3: Cycle) -> tuple | None:
    """The common arc of two cycles, as a vertex sequence, if their
    intersection is exactly one path with at least one edge."""
    common = c2.vertex_set & c3.vertex_set
    if len(common) < 2 or len(common) == len(c2) or len(common) == len(c3):
        return None
    e2 = set(c2.edge_pairs())
    shared = [e for e in c3.edge_pairs() if e in e2]
    if len(shared) != len(common) - 1:
        return None
    # the shared edges must form one path covering the common vertices
    vs = c2.vertices
    n = len(vs)
    start = next(i for i in range(n) if vs[i] in common and vs[i - 1] not in common)
    arc = []
    i = start
    while vs[i % n] in common:
        arc.append(vs[i % n])
        i += 1
    if len(arc) != len(common):
        return None
    if any(frozenset((a, b)) not in shared for a, b in zip(arc, arc[1:])):
        return None
    return tuple(arc)


def witness_shared_arc(d: Diagram, max_count: int = DEFAULT_CYCLE_BUDGET) -> Witness | None:
    """C2 and C3 share exactly one arc, C1 and C4 are disjoint from
    everything else, and C1-C2, C3-C4 are linked."""
    return _shared_arc_search(d, _analyse(d, max_count))


def _shared_arc_search(d: Diagram, an: _Analysis) -> Witness | None:
    vm = an.vmask
    for c1, c2, c3, c4 in _pair_orientations(an):
        common = vm[c2] & vm[c3]
        if not common or not common & (common - 1):
            continue
        if not _disjoint_quad(an, c1, c2, c3, c4, False):
            continue
        arc = _shared_arc(an.cycles[c2], an.cycles[c3])
        if arc is None:
            continue
        idx = (c1, c2, c3, c4)
        return Witness(
            SHARED_ARC,
            tuple(an.cycles[i] for i in idx),
            (),
            arc,
            _linking_record(an, idx, [(0, 1), (2, 3)]),
        )
    return None


def triple_witness(d: Diagram, max_count: int = DEFAULT_CYCLE_BUDGET) -> Witness | None:
    """The first pairwise-linked triple, packaged as a witness."""
    an = _analyse(d, max_count)
    found = _triples(an)
    if not found:
        return None
    _, (a, b, c) = found[0]
    idx = (a, b, c)
    links = [(x, y) for x in range(3) for y in range(x + 1, 3)]
    return Witness(PAIRWISE_LINKED, tuple(an.cycles[i] for i in idx), (), (), _linking_record(an, idx, links))


WITNESS_SEARCHES = {
    TWO_PATH: witness_two_path,
    SHARED_VERTEX_PATH: witness_shared_vertex_path,
    SHARED_ARC: witness_shared_arc,
    PAIRWISE_LINKED: triple_witness,
}


# -- K_{4,4} -----------------------------------------------------------------


def k44_edge_link_check(d: Diagram, max_count: int = DEFAULT_CYCLE_BUDGET) -> dict:
    """For each edge, whether it lies on a cycle of some linked pair.

    In any genuine embedding of K_{4,4} every entry is True, so a False entry
    shows the crossing data cannot come from a real embedding.
    """
    if find_isomorphism(d.graph, complete_multipartite(4, 4)) is None:
        raise WrongUnderlyingGraph("underlying graph is not K_{4,4}")
    hit = set()
    for a, b in linked_pairs(d, max_count):
        hit.update(a.edges(d.graph))
        hit.update(b.edges(d.graph))
    return {e: e in hit for e in d.graph.edges}


# -- certificate report ------------------------------------------------------

SCOPE_NOTE = (
    "Certifies the homological and combinatorial content only: no pairwise "
    "linked triple of cycles and no configuration matching the three witness "
    "lemmas. That other cycles bound disks disjoint from the graph is a "
    "topological property that crossing data cannot express, so it is not checked."
)


@dataclass
class Check:
    name: str
    passed: bool
    detail: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


@dataclass
class CertificateReport:
    checks: list
    note: str = SCOPE_NOTE

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> dict:
        return {"passed": self.passed, "checks": [c.to_json() for c in self.checks], "note": self.note}


def _side_checks(d: Diagram, an: _Analysis, sides: dict) -> list[Check]:
    g = d.graph
    names = list(sides)
    if len(names) != 2:
        raise GraphError("side split needs exactly two named vertex sets")
    masks = {k: _mask_of(g.index(v) for v in sides[k]) for k in names}
    inside: dict = {k: [] for k in names}
    across = []  # one cycle inside each side
    mixed = 0  # some cycle uses a joining edge; reported, not a failure
    k1, k2 = names
    vm = an.vmask

    def within(i, k):
        return vm[i] & masks[k] == vm[i]

    for i, j in an.pairs:
        if within(i, k1) and within(j, k1):
            inside[k1].append((i, j))
        elif within(i, k2) and within(j, k2):
            inside[k2].append((i, j))
        elif (within(i, k1) and within(j, k2)) or (within(i, k2) and within(j, k1)):
            across.append((i, j))
        else:
            mixed += 1

    def listed(pairs):
        return [[list(an.cycles[i].vertices), list(an.cycles[j].vertices)] for i, j in pairs]

    checks = [Check(f"one-linked-pair-in-{k}", len(inside[k]) == 1, {"pairs": listed(inside[k])}) for k in names]
    checks.append(
        Check("no-cross-side-linking", not across, {"pairs": listed(across), "pairs-through-joins": mixed})
    )
    # two disjoint joining edges between one cycle of each side's linked pair
    bad = []
    for p in inside[k1]:
        for q in inside[k2]:
            for a in p:
                for b in q:
                    hits = [
                        e
                        for e in g.edges
                        if (vm[a] >> g.index(e[0]) & 1 and vm[b] >> g.index(e[1]) & 1)
                        or (vm[b] >> g.index(e[0]) & 1 and vm[a] >> g.index(e[1]) & 1)
                    ]
                    for x in range(len(hits)):
                        for y in range(x + 1, len(hits)):
                            if not set(hits[x]) & set(hits[y]):
                                bad.append(
                                    {
                                        "cycles": [list(an.cycles[a].vertices), list(an.cycles[b].vertices)],
                                        "edges": [list(hits[x]), list(hits[y])],
                                    }
                                )
    checks.append(Check("no-two-joins-between-linked-cycles", not bad, {"violations": bad}))
    return checks


def verify_no_3link_certificate(
    d: Diagram, sides: dict | None = None, max_count: int = DEFAULT_CYCLE_BUDGET
) -> CertificateReport:
    """Run every certificate search and report which ones come up empty.

    ``sides`` (default: ``d.meta["sides"]`` when present) names two vertex
    sets; then the report also requires exactly one linked pair inside each,
    no other linked pairs, and no two disjoint joining edges running between
    a cycle of one side's linked pair and a cycle of the other's.
    """
    an = _analyse(d, max_count)
    if sides is None:
        sides = d.meta.get("sides")
    checks = [Check("linked-pairs", True, {"count": len(an.pairs)})]
    triples = _triples(an)
    checks.append(
        Check(
            "no-pairwise-linked-triple",
            not triples,
            {"count": len(triples), "first": [list(an.cycles[i].vertices) for i in triples[0][1]] if triples else None},
        )
    )
    for lemma, search in ((TWO_PATH, _two_path), (SHARED_VERTEX_PATH, _shared_vertex_path), (SHARED_ARC, _shared_arc_search)):
        w = search(d, an)
        checks.append(Check(f"no-{lemma}-witness", w is None, {"witness": w.to_json() if w else None}))
    if sides:
        checks.extend(_side_checks(d, an, sides))
    return CertificateReport(checks)

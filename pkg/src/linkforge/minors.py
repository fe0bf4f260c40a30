"""Exact minor containment for small graphs and intrinsic-linking verdicts.

A graph is intrinsically linked exactly when it has a Petersen-family minor,
so :func:`is_intrinsically_linked` is a scan of seven :func:`find_minor`
calls. The search is exact (sound and complete); a node-expansion budget makes
hopeless instances fail with :class:`SearchBudgetExceeded` instead of hanging.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

from .errors import DanglingReference, SearchBudgetExceeded
from .family import FAMILY_ORDER, petersen_family
from .graph import Graph, contract_edge, delete_edge
from .isomorphism import automorphisms, find_monomorphism

DEFAULT_SEARCH_BUDGET = 10**7


def default_budget() -> int:
    env = os.environ.get("LINKFORGE_BUDGET")
    return int(env) if env else DEFAULT_SEARCH_BUDGET


@dataclass
class MinorModel:
    """Branch sets for each pattern vertex plus one host edge per pattern edge."""

    branch_sets: dict
    witness_edges: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "branch_sets": [[p, sorted(s, key=repr)] for p, s in self.branch_sets.items()],
            "witness_edges": [[list(pe), list(he)] for pe, he in self.witness_edges.items()],
        }

    @classmethod
    def from_json(cls, data: dict) -> MinorModel:
        bs = {p: frozenset(s) for p, s in data["branch_sets"]}
        we = {tuple(pe): tuple(he) for pe, he in data.get("witness_edges", [])}
        return cls(bs, we)


def verify_minor_model(host: Graph, pattern: Graph, model: MinorModel) -> bool:
    """Check every model invariant from scratch.

    Raises :class:`DanglingReference` when the model names vertices or edges
    that do not exist in host/pattern; otherwise returns whether the model is
    valid. Missing witness edges are allowed: then any joining host edge
    counts.
    """
    for p, s in model.branch_sets.items():
        if p not in pattern:
            raise DanglingReference(f"pattern has no vertex {p!r}")
        for v in s:
            if v not in host:
                raise DanglingReference(f"host has no vertex {v!r}")
    for pe, he in model.witness_edges.items():
        a, b = pe
        if a not in pattern or b not in pattern or not pattern.has_edge(a, b):
            raise DanglingReference(f"pattern has no edge {pe!r}")
        if he[0] not in host or he[1] not in host or not host.has_edge(*he):
            raise DanglingReference(f"host has no edge {he!r}")

    sets = model.branch_sets
    if set(sets) != set(pattern.vertices):
        return False
    owner: dict = {}
    for p, s in sets.items():
        if not s:
            return False
        for v in s:
            if v in owner:
                return False
            owner[v] = p
        if not host.is_connected(s):
            return False
    witnessed = {frozenset(pe): he for pe, he in model.witness_edges.items()}
    for a, b in pattern.edges:
        he = witnessed.get(frozenset((a, b)))
        if he is not None:
            x, y = he
            if not ((x in sets[a] and y in sets[b]) or (x in sets[b] and y in sets[a])):
                return False
        elif not any(host.has_edge(x, y) for x in sets[a] for y in sets[b]):
            return False
    return True


def _witnesses(host: Graph, pattern: Graph, sets: dict) -> dict:
    we = {}
    for a, b in pattern.edges:
        for x in host.sorted_vertices(sets[a]):
            ys = [y for y in host.sorted_vertices(host.neighbors(x)) if y in sets[b]]
            if ys:
                we[(a, b)] = (x, ys[0])
                break
    return we


# -- host reduction ------------------------------------------------------


def _reduce(host: Graph, pattern: Graph) -> tuple[Graph, list]:
    """Shrink the host without changing whether it has ``pattern`` as a minor.

    Degree <= 1 vertices go when the pattern's minimum degree is >= 2;
    degree-2 vertices are suppressed when it is >= 3. Returns the reduced host
    and the suppression log used to lift models back.
    """
    mindeg = min(pattern.degrees(), default=0)
    if pattern.n == 0 or mindeg < 2:
        return host, []
    verts = list(host.vertices)
    adj = {v: set(host.neighbors(v)) for v in verts}
    log: list = []
    changed = True
    while changed:
        changed = False
        for v in list(adj):
            d = len(adj[v])
            if d <= 1:
                for u in adj[v]:
                    adj[u].discard(v)
                del adj[v]
                changed = True
            elif d == 2 and mindeg >= 3:
                u, w = sorted(adj[v], key=host.index)
                adj[u].discard(v)
                adj[w].discard(v)
                adj[u].add(w)
                adj[w].add(u)
                del adj[v]
                log.append((v, u, w))
                changed = True
    keep = [v for v in verts if v in adj]
    edges = {frozenset((u, w)) for u in adj for w in adj[u]}
    return Graph(keep, [tuple(e) for e in edges], name=host.name), log


def _lift(sets: dict, log: list) -> dict:
    owner = {v: p for p, s in sets.items() for v in s}
    out = {p: set(s) for p, s in sets.items()}
    for v, u, w in reversed(log):
        pu, pw = owner.get(u), owner.get(w)
        target = pu if pu is not None and (pw is not None) else None
        if target is not None:
            out[target].add(v)
            owner[v] = target
    return {p: frozenset(s) for p, s in out.items()}


# -- exact search --------------------------------------------------------


def _twin_classes(pattern: Graph) -> list[list[int]]:
    """Index classes of interchangeable pattern vertices (true or false twins)."""
    idx = {v: i for i, v in enumerate(pattern.vertices)}
    closed: dict = {}
    for v in pattern.vertices:
        closed.setdefault(frozenset(pattern.neighbors(v) | {v}), []).append(idx[v])
    classes = [c for c in closed.values() if len(c) > 1]
    taken = {i for c in classes for i in c}
    opened: dict = {}
    for v in pattern.vertices:
        if idx[v] not in taken:
            opened.setdefault(pattern.neighbors(v), []).append(idx[v])
    classes += [c for c in opened.values() if len(c) > 1]
    return [sorted(c) for c in classes]


class _Search:
    """Partition search: label every host vertex with a pattern vertex.

    In a connected host any unused vertex next to a branch set can be absorbed
    into it, so a model exists iff some component's vertices split into k
    connected classes with the required adjacencies (other components unused).
    Host vertices are labelled in BFS order; a class that can no longer grow
    (no unlabelled neighbours) must already be connected and already touch
    every class it will ever touch, which prunes most dead branches early.
    """

    def __init__(self, host: Graph, pattern: Graph, budget: int):
        self.budget = budget
        self.nodes = 0
        hv = host.vertices
        hidx = {v: i for i, v in enumerate(hv)}
        self.N = len(hv)
        self.hadj = [0] * self.N
        for u, v in host.edges:
            self.hadj[hidx[u]] |= 1 << hidx[v]
            self.hadj[hidx[v]] |= 1 << hidx[u]
        pv = pattern.vertices
        pidx = {v: i for i, v in enumerate(pv)}
        self.k = len(pv)
        self.pnbrs = [[pidx[u] for u in pattern.neighbors(v)] for v in pv]
        self.pedges = [(pidx[a], pidx[b]) for a, b in pattern.edges]
        self.pdeg = [len(x) for x in self.pnbrs]
        self.auts = automorphisms(pattern)
        self.twin_prev = [-1] * self.k
        for c in _twin_classes(pattern):
            for a, b in zip(c, c[1:]):
                self.twin_prev[b] = a
        self.order, self.comp_end = self._bfs_order()
        self.hnbrs = [[y for y in range(self.N) if self.hadj[x] >> y & 1] for x in range(self.N)]
        self._reps: dict = {}
        # a connected pattern lives inside one host component
        self.single_block = pattern.is_connected() and self.k > 0

    def _new_label_options(self, intro: tuple) -> list[int]:
        """Labels worth introducing next, one per orbit of the stabiliser of
        the labels already introduced (any model can be mapped by a pattern
        automorphism onto one whose introduction sequence uses these)."""
        cached = self._reps.get(intro)
        if cached is not None:
            return cached
        rest = [p for p in sorted(range(self.k), key=lambda p: (-self.pdeg[p], p)) if p not in intro]
        if self.auts is None:
            reps = [p for p in rest if self.twin_prev[p] < 0 or self.twin_prev[p] in intro]
        else:
            stab = [a for a in self.auts if all(a[p] == p for p in intro)]
            reps, seen = [], set()
            for p in rest:
                if p in seen:
                    continue
                reps.append(p)
                seen.update(a[p] for a in stab)
        self._reps[intro] = reps
        return reps

    def _bfs_order(self) -> tuple[list[int], dict]:
        order: list[int] = []
        comp_end: dict = {}
        remaining = set(range(self.N))
        deg = [bin(a).count("1") for a in self.hadj]
        comps = []
        while remaining:
            start = max(remaining, key=lambda i: (deg[i], -i))
            seen = {start}
            queue = [start]
            comp = []
            while queue:
                x = queue.pop(0)
                comp.append(x)
                nb = [y for y in range(self.N) if self.hadj[x] >> y & 1 and y not in seen]
                nb.sort(key=lambda i: (-deg[i], i))
                seen.update(nb)
                queue.extend(nb)
            remaining -= seen
            comps.append(comp)
        comps.sort(key=len, reverse=True)
        for comp in comps:
            begin = len(order)
            order.extend(comp)
            comp_end[begin] = len(order)
        return order, comp_end

    def _components(self, mask: int) -> list[int]:
        comps = []
        while mask:
            comp = mask & -mask
            frontier = comp
            while frontier:
                nb = 0
                f = frontier
                while f:
                    b = f & -f
                    nb |= self.hadj[b.bit_length() - 1]
                    f ^= b
                frontier = nb & mask & ~comp
                comp |= frontier
            comps.append(comp)
            mask &= ~comp
        return comps

    def _nbhd(self, mask: int) -> int:
        nb = 0
        while mask:
            b = mask & -mask
            nb |= self.hadj[b.bit_length() - 1]
            mask ^= b
        return nb

    def run(self) -> list[int] | None:
        N, k = self.N, self.k
        labels = [-1] * N
        sets = [0] * k
        nbh = [0] * k
        order = self.order
        hadj = self.hadj
        hnbrs = self.hnbrs
        pnbrs = self.pnbrs
        intro: list[int] = []
        # waste accounting (single-block case only): cycle edges inside
        # classes and repeated edges between one pair of classes
        inner = [0] * k
        pair = [[0] * k for _ in range(k)]
        waste = [0, 0]  # [excess, duplicates]
        single = self.single_block
        m_pattern = len(self.pedges)

        def stuck(p: int, unassigned: int) -> bool:
            """True if class p can no longer be completed."""
            s = sets[p]
            if not s:
                return False
            if not nbh[p] & unassigned:
                if len(self._components(s)) > 1:
                    return True
                for q in pnbrs[p]:
                    if not nbh[p] & sets[q]:
                        # q could only reach p through a neighbour of p, and none is left
                        return True
                return False
            comps = self._components(s)
            if len(comps) > 1:
                for c in comps:
                    if not self._nbhd(c) & unassigned:
                        return True
            return False

        def excess(p: int) -> int:
            s = sets[p]
            return inner[p] - (bin(s).count("1") - len(self._components(s))) if s else 0

        def rec(t: int, unassigned: int, block_end: int, slack: int) -> bool:
            self.nodes += 1
            if self.nodes > self.budget:
                raise SearchBudgetExceeded(
                    f"minor search exceeded {self.budget} node expansions", budget=self.budget
                )
            if t == block_end:
                if all(sets):
                    return all(len(self._components(s)) == 1 for s in sets) and all(
                        nbh[a] & sets[b] for a, b in self.pedges
                    )
                if t == N:
                    return False
                return start_block(t, unassigned)
            x = order[t]
            bit = 1 << x
            rest = unassigned & ~bit
            empty = k - len(intro)
            cand_adj, cand_far = [], []
            for p in intro:
                (cand_adj if nbh[p] & bit else cand_far).append(p)
            cand_new = self._new_label_options(tuple(intro)) if empty else []
            remaining_in_block = block_end - t - 1
            nbr_labels = [labels[y] for y in hnbrs[x] if labels[y] >= 0]
            for p in cand_adj + cand_new + cand_far:
                fresh = not sets[p]
                # every still-empty class needs a vertex of its own
                if empty - fresh > remaining_in_block:
                    continue
                old_nbh = nbh[p]
                old_excess = excess(p)
                old_waste = (waste[0], waste[1])
                sets[p] |= bit
                nbh[p] |= hadj[x]
                labels[x] = p
                if fresh:
                    intro.append(p)
                r = 0
                for q in nbr_labels:
                    if q == p:
                        r += 1
                    else:
                        if pair[p][q]:
                            waste[1] += 1
                        pair[p][q] += 1
                        pair[q][p] += 1
                inner[p] += r
                waste[0] += excess(p) - old_excess
                ok = not (single and waste[0] + waste[1] > slack)
                if ok:
                    ok = not any(stuck(q, rest) for q in {p, *nbr_labels})
                if ok and rec(t + 1, rest, block_end, slack):
                    return True
                inner[p] -= r
                for q in nbr_labels:
                    if q != p:
                        pair[p][q] -= 1
                        pair[q][p] -= 1
                waste[0], waste[1] = old_waste
                if fresh:
                    intro.pop()
                sets[p] &= ~bit
                nbh[p] = old_nbh
                labels[x] = -1
            return False

        def start_block(t: int, unassigned: int) -> bool:
            end = self.comp_end[t]
            size = end - t
            verts = [order[i] for i in range(t, end)]
            m_block = sum(bin(hadj[v]).count("1") for v in verts) // 2
            slack = m_block - (size - k) - m_pattern
            if size >= k and (not single or slack >= 0) and rec(t, unassigned, end, slack):
                return True
            # leave this whole component unused
            skipped = 0
            for v in verts:
                skipped |= 1 << v
            if end == N:
                return False
            return start_block(end, unassigned & ~skipped)

        full = (1 << N) - 1
        if not start_block(0, full):
            return None
        return labels


def find_minor(host: Graph, pattern: Graph, budget: int | None = None) -> MinorModel | None:
    """Find a minor model of ``pattern`` in ``host`` or return None.

    Exact at the sizes this package deals in (hosts up to about 25 vertices,
    patterns up to 10). The result always passes :func:`verify_minor_model`.
    """
    budget = default_budget() if budget is None else budget
    if pattern.n == 0:
        return MinorModel({}, {})
    if pattern.n > host.n or pattern.m > host.m:
        return None

    emb = find_monomorphism(pattern, host, budget=min(budget, 200_000))
    if emb is not None:
        sets = {p: frozenset([emb[p]]) for p in pattern.vertices}
        return MinorModel(sets, _witnesses(host, pattern, sets))

    reduced, log = _reduce(host, pattern)
    if pattern.n > reduced.n or pattern.m > reduced.m:
        return None

    pattern_connected = pattern.is_connected()
    pieces = _component_hosts(reduced) if pattern_connected else [reduced]
    spent = 0
    for piece in pieces:
        if pattern.n > piece.n or pattern.m > piece.m:
            continue
        search = _Search(piece, pattern, budget - spent)
        try:
            labels = search.run()
        finally:
            spent += search.nodes
        if labels is None:
            continue
        sets = {p: set() for p in pattern.vertices}
        for hi, lab in enumerate(labels):
            if lab >= 0:
                sets[pattern.vertices[lab]].add(piece.vertices[hi])
        lifted = _lift({p: frozenset(s) for p, s in sets.items()}, log)
        model = MinorModel(lifted, _witnesses(host, pattern, lifted))
        assert verify_minor_model(host, pattern, model)
        return model
    return None


def _component_hosts(g: Graph) -> list[Graph]:
    seen: set = set()
    out = []
    for v in g.vertices:
        if v in seen:
            continue
        comp = {v}
        stack = [v]
        while stack:
            x = stack.pop()
            for y in g.neighbors(x):
                if y not in comp:
                    comp.add(y)
                    stack.append(y)
        seen |= comp
        out.append(g.induced(comp, name=g.name))
    out.sort(key=lambda h: -h.n)
    return out


# -- intrinsic linking ----------------------------------------------------


@dataclass
class LinkVerdict:
    linked: bool
    family_member: str | None = None
    model: MinorModel | None = None

    @property
    def verdict(self) -> str:
        return "linked" if self.linked else "not-linked"

    def to_json(self) -> dict:
        out = {"verdict": self.verdict, "family_member": self.family_member, "branch_sets": None}
        if self.model is not None:
            out["branch_sets"] = {str(p): sorted(s, key=repr) for p, s in self.model.branch_sets.items()}
            out["model"] = self.model.to_json()
        return out


def is_intrinsically_linked(g: Graph, budget: int | None = None) -> LinkVerdict:
    """Linked iff some Petersen-family graph is a minor.

    Two passes over the catalog order: first a cheap subgraph test for every
    member, then the full minor search. A member whose search runs out of
    budget does not stop the scan, since a later member may still be found;
    the budget error is re-raised only if nothing is found at all.
    """
    budget = default_budget() if budget is None else budget
    fam = petersen_family()
    for name in FAMILY_ORDER:
        pat = fam[name]
        if pat.n > g.n or pat.m > g.m:
            continue
        emb = find_monomorphism(pat, g, budget=min(budget, 200_000))
        if emb is not None:
            sets = {p: frozenset([emb[p]]) for p in pat.vertices}
            return LinkVerdict(True, name, MinorModel(sets, _witnesses(g, pat, sets)))
    exhausted = None
    for name in FAMILY_ORDER:
        try:
            model = find_minor(g, fam[name], budget=budget)
        except SearchBudgetExceeded as exc:
            exhausted = exc
            continue
        if model is not None:
            return LinkVerdict(True, name, model)
    if exhausted is not None:
        raise exhausted
    return LinkVerdict(False)


def _drop_isolated(g: Graph) -> Graph:
    return g.induced([v for v in g.vertices if g.degree(v) > 0], name=g.name)


@dataclass
class MinimalityReport:
    linked: bool
    minimal: bool
    minors: list = field(default_factory=list)  # (operation, edge, verdict)

    def to_json(self) -> dict:
        return {
            "linked": self.linked,
            "minimal": self.minimal,
            "minors": [
                {"operation": op, "edge": list(e), "verdict": v.verdict, "family_member": v.family_member}
                for op, e, v in self.minors
            ],
        }


def is_minor_minimal_il(g: Graph, budget: int | None = None) -> MinimalityReport:
    """Whether ``g`` is linked while every one-step minor is not.

    One-step minors are single edge deletions and contractions (isolated
    vertices are dropped first; they never affect linkedness). Every minor is
    checked so the report is complete even when the answer is no.
    """
    h = _drop_isolated(g)
    own = is_intrinsically_linked(h, budget)
    report = MinimalityReport(own.linked, own.linked)
    for e in h.edges:
        for op, f in (("delete", delete_edge), ("contract", contract_edge)):
            v = is_intrinsically_linked(f(h, e), budget)
            report.minors.append((op, e, v))
            if v.linked:
                report.minimal = False
    if h.n < g.n:
        report.minimal = False
    return report

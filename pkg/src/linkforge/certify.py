"""Stand-alone re-check of 3-link witnesses.

Works from the JSON forms of a diagram and a witness only and deliberately
imports nothing from the rest of the package, so a bug in the searches cannot
hide itself here. Vertices are compared by their string form.
"""

from __future__ import annotations

from collections import defaultdict


def _edge(a, b) -> frozenset:
    return frozenset((str(a), str(b)))


class _RawDiagram:
    def __init__(self, data: dict):
        graph = data["graph"]
        self.vertices = {str(v) for v in graph["vertices"]}
        self.edges = {_edge(a, b) for a, b in graph["edges"]}
        self.slots = defaultdict(list)  # crossing id -> [(edge, role)]
        for key, entries in data.get("passages", {}).items():
            a, _, b = key.partition("--")
            for entry in entries:
                self.slots[entry[0]].append((_edge(a, b), entry[1]))

    def cycle_edges(self, walk: list) -> set | None:
        walk = [str(v) for v in walk]
        if len(walk) < 3 or len(set(walk)) != len(walk):
            return None
        es = {_edge(walk[i], walk[(i + 1) % len(walk)]) for i in range(len(walk))}
        return es if es <= self.edges else None

    def omega(self, ea: set, eb: set) -> int:
        count = 0
        for slots in self.slots.values():
            top = [e for e, role in slots if role == "over"]
            bottom = [e for e, role in slots if role == "under"]
            if len(top) == 1 and len(bottom) == 1 and top[0] in ea and bottom[0] in eb:
                count += 1
        return count % 2

    def is_path(self, walk: list) -> bool:
        walk = [str(v) for v in walk]
        if not walk or len(set(walk)) != len(walk):
            return False
        return all(_edge(walk[i], walk[i + 1]) in self.edges for i in range(len(walk) - 1))


def check_witness(diagram: dict, witness: dict) -> list[str]:
    """Problems with ``witness`` against ``diagram`` (empty list = valid)."""
    d = _RawDiagram(diagram)
    lemma = witness["lemma"]
    walks = witness["cycles"]
    problems: list[str] = []
    cyc_edges = []
    for i, w in enumerate(walks, 1):
        es = d.cycle_edges(w)
        if es is None:
            problems.append(f"C{i} is not a cycle of the graph")
        cyc_edges.append(es)
    if problems:
        return problems
    vs = [{str(v) for v in w} for w in walks]

    def linked(i, j):
        if vs[i] & vs[j]:
            problems.append(f"C{i + 1} and C{j + 1} are not disjoint")
            return
        if d.omega(cyc_edges[i], cyc_edges[j]) != 1:
            problems.append(f"omega(C{i + 1}, C{j + 1}) is not 1")
        if d.omega(cyc_edges[j], cyc_edges[i]) != 1:
            problems.append(f"omega(C{j + 1}, C{i + 1}) is not 1")

    if lemma == "PairwiseLinked":
        if len(walks) != 3:
            return ["PairwiseLinked needs three cycles"]
        pairs = [(0, 1), (0, 2), (1, 2)]
        for i, j in pairs:
            if vs[i] & vs[j]:
                problems.append(f"C{i + 1} and C{j + 1} are not disjoint")
        if problems:
            return problems
        links = [(i, j) for i, j in pairs if d.omega(cyc_edges[i], cyc_edges[j])]
        if len(links) < 2:
            problems.append("linking graph on the three cycles is not connected")
        return problems

    if len(walks) != 4:
        return [f"{lemma} needs four cycles"]
    linked(0, 1)
    linked(2, 3)
    for i, j in ((0, 2), (0, 3), (1, 3)):
        if vs[i] & vs[j]:
            problems.append(f"C{i + 1} and C{j + 1} are not disjoint")
    every = set().union(*vs)
    common = vs[1] & vs[2]

    if lemma == "TwoPath":
        if common:
            problems.append("C2 and C3 are not disjoint")
        paths = witness.get("paths", [])
        if len(paths) != 2:
            return problems + ["TwoPath needs two paths"]
        used = []
        for k, p in enumerate(paths, 1):
            p = [str(v) for v in p]
            if not d.is_path(p) or len(p) < 2:
                problems.append(f"path {k} is not a path of the graph")
                continue
            if p[0] not in vs[1] or p[-1] not in vs[2]:
                problems.append(f"path {k} does not run from C2 to C3")
            if set(p[1:-1]) & every:
                problems.append(f"path {k} meets a cycle in its interior")
            used.append(set(p))
        if len(used) == 2 and used[0] & used[1]:
            problems.append("the two paths are not disjoint")
    elif lemma == "SharedVertexPath":
        if len(common) != 1:
            problems.append("C2 and C3 do not meet in exactly one vertex")
        paths = witness.get("paths", [])
        if len(paths) != 1:
            return problems + ["SharedVertexPath needs one path"]
        p = [str(v) for v in paths[0]]
        if not d.is_path(p) or len(p) < 2:
            problems.append("P is not a path of the graph")
        else:
            if p[0] not in vs[1] - common or p[-1] not in vs[2] - common:
                problems.append("P does not join C2 - x to C3 - x")
            if set(p[1:-1]) & every:
                problems.append("P meets a cycle in its interior")
    elif lemma == "SharedArc":
        shared_edges = cyc_edges[1] & cyc_edges[2]
        if len(common) < 2 or len(shared_edges) != len(common) - 1:
            problems.append("C2 and C3 do not meet in a single arc")
        else:
            # a set of k-1 edges on k vertices spanning them is a path iff connected
            adj = defaultdict(set)
            for e in shared_edges:
                a, b = tuple(e)
                adj[a].add(b)
                adj[b].add(a)
            start = next(iter(common))
            seen = {start}
            stack = [start]
            while stack:
                x = stack.pop()
                for y in adj[x]:
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
            if seen != common:
                problems.append("C2 and C3 do not meet in a single arc")
    else:
        problems.append(f"unknown lemma {lemma!r}")
    return problems

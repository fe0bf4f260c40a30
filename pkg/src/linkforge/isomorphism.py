"""Backtracking isomorphism and subgraph-monomorphism search for small graphs.

Graphs here stay below a few dozen vertices, so a refinement-pruned
backtracking search is plenty; no canonical labelling machinery is used.
"""

from __future__ import annotations

from collections import Counter

from .graph import Graph


def _refine(g: Graph, init: dict | None = None, rounds: int | None = None) -> dict:
    """Colour refinement (1-WL) returning vertex -> stable colour signature."""
    col = dict(init) if init else {v: g.degree(v) for v in g.vertices}
    limit = g.n if rounds is None else rounds
    for _ in range(limit):
        sig = {v: (col[v], tuple(sorted(Counter(col[u] for u in g.neighbors(v)).items()))) for v in g.vertices}
        if len(set(sig.values())) == len(set(col.values())):
            break
        col = {v: hash(s) for v, s in sig.items()}
    return col


def _joint_colours(g: Graph, h: Graph) -> tuple[dict, dict]:
    cg = {v: g.degree(v) for v in g.vertices}
    ch = {v: h.degree(v) for v in h.vertices}
    for _ in range(max(g.n, h.n)):
        sg = {v: (cg[v], tuple(sorted(Counter(cg[u] for u in g.neighbors(v)).items()))) for v in g.vertices}
        sh = {v: (ch[v], tuple(sorted(Counter(ch[u] for u in h.neighbors(v)).items()))) for v in h.vertices}
        palette = {s: i for i, s in enumerate(sorted(set(sg.values()) | set(sh.values()), key=repr))}
        ng = {v: palette[s] for v, s in sg.items()}
        nh = {v: palette[s] for v, s in sh.items()}
        stable = len(set(ng.values())) == len(set(cg.values())) and len(set(nh.values())) == len(set(ch.values()))
        cg, ch = ng, nh
        if stable:
            break
    return cg, ch


def find_isomorphism(g: Graph, h: Graph) -> dict | None:
    """Return a vertex bijection g -> h preserving adjacency, or None."""
    if g.n != h.n or g.m != h.m:
        return None
    if sorted(g.degrees()) != sorted(h.degrees()):
        return None
    cg, ch = _joint_colours(g, h)
    if Counter(cg.values()) != Counter(ch.values()):
        return None

    by_colour: dict = {}
    for v in h.vertices:
        by_colour.setdefault(ch[v], []).append(v)

    # rarest colour first, then prefer vertices adjacent to already-placed ones
    order: list = []
    placed: set = set()
    remaining = set(g.vertices)
    while remaining:
        def key(v):
            return (-len(g.neighbors(v) & placed), len(by_colour[cg[v]]), g.index(v))

        v = min(remaining, key=key)
        order.append(v)
        placed.add(v)
        remaining.discard(v)

    mapping: dict = {}
    used: set = set()

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        nv = g.neighbors(v)
        for w in by_colour[cg[v]]:
            if w in used:
                continue
            nw = h.neighbors(w)
            ok = True
            for u, x in mapping.items():
                if (u in nv) != (x in nw):
                    ok = False
                    break
            if not ok:
                continue
            mapping[v] = w
            used.add(w)
            if extend(i + 1):
                return True
            del mapping[v]
            used.discard(w)
        return False

    return dict(mapping) if extend(0) else None


def is_isomorphic(g: Graph, h: Graph) -> tuple[bool, dict | None]:
    """Isomorphism test returning ``(True, mapping)`` or ``(False, None)``."""
    m = find_isomorphism(g, h)
    return (m is not None, m)


def invariant(g: Graph) -> tuple:
    """Cheap isomorphism invariant used to bucket graphs before exact tests."""
    col = _refine(g)
    return (g.n, g.m, tuple(sorted(g.degrees())), tuple(sorted(Counter(col.values()).values())))


def find_monomorphism(pattern: Graph, host: Graph, budget: int | None = None) -> dict | None:
    """Injective map pattern -> host sending edges to edges (non-induced).

    ``budget`` caps the number of candidate trials; ``None`` means unbounded.
    Returns None when no embedding exists or the budget ran out.
    """
    if pattern.n > host.n or pattern.m > host.m:
        return None
    hdeg = {v: host.degree(v) for v in host.vertices}
    order: list = []
    placed: set = set()
    remaining = set(pattern.vertices)
    while remaining:
        v = max(remaining, key=lambda x: (len(pattern.neighbors(x) & placed), pattern.degree(x), -pattern.index(x)))
        order.append(v)
        placed.add(v)
        remaining.discard(v)

    mapping: dict = {}
    used: set = set()
    counter = [0]

    def candidates(v):
        mapped_nbrs = [mapping[u] for u in pattern.neighbors(v) if u in mapping]
        if mapped_nbrs:
            pool = set(host.neighbors(mapped_nbrs[0]))
            for x in mapped_nbrs[1:]:
                pool &= host.neighbors(x)
            return host.sorted_vertices(pool)
        return list(host.vertices)

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        dv = pattern.degree(v)
        for w in candidates(v):
            if w in used or hdeg[w] < dv:
                continue
            counter[0] += 1
            if budget is not None and counter[0] > budget:
                return False
            mapping[v] = w
            used.add(w)
            if extend(i + 1):
                return True
            del mapping[v]
            used.discard(w)
        return False

    return dict(mapping) if extend(0) else None


def automorphisms(g: Graph, limit: int = 50_000) -> list[tuple[int, ...]] | None:
    """All automorphisms as index permutations, or None if there are more than ``limit``."""
    n = g.n
    idx = {v: i for i, v in enumerate(g.vertices)}
    adj = [0] * n
    for u, v in g.edges:
        adj[idx[u]] |= 1 << idx[v]
        adj[idx[v]] |= 1 << idx[u]
    col = _refine(g)
    colour = [col[v] for v in g.vertices]
    out: list[tuple[int, ...]] = []
    image = [-1] * n
    used = [False] * n

    def rec(i: int) -> bool:
        if i == n:
            out.append(tuple(image))
            return len(out) <= limit
        for j in range(n):
            if used[j] or colour[j] != colour[i]:
                continue
            ok = True
            for a in range(i):
                if (adj[i] >> a & 1) != (adj[j] >> image[a] & 1):
                    ok = False
                    break
            if not ok:
                continue
            image[i] = j
            used[j] = True
            if not rec(i + 1):
                return False
            used[j] = False
            image[i] = -1
        return True

    if not rec(0):
        return None
    return out

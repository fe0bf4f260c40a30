"""Simple-cycle enumeration and disjoint cycle tuples."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .errors import CycleBudgetExceeded, GraphError
from .graph import Graph

DEFAULT_CYCLE_BUDGET = 10**6


@dataclass(frozen=True, order=True)
class Cycle:
    """A vertex-simple cycle stored in canonical form.

    Canonical form: start at the vertex of least index in the owning graph and
    walk in the direction whose second vertex has the smaller index. Two cycles
    are equal exactly when they have the same vertices in the same cyclic
    adjacency.
    """

    key: tuple = field(repr=False)  # vertex indices, canonical
    vertices: tuple = field(compare=False)
    owner: str = field(default="", compare=False, repr=False)

    @classmethod
    def from_walk(cls, g: Graph, walk) -> Cycle:
        walk = list(walk)
        if len(walk) < 3 or len(set(walk)) != len(walk):
            raise GraphError(f"not a simple closed walk: {walk!r}")
        for a, b in zip(walk, walk[1:] + walk[:1]):
            if not g.has_edge(a, b):
                raise GraphError(f"({a!r}, {b!r}) is not an edge")
        idx = [g.index(v) for v in walk]
        k = idx.index(min(idx))
        idx = idx[k:] + idx[:k]
        if idx[1] > idx[-1]:
            idx = [idx[0]] + idx[1:][::-1]
        verts = tuple(g.vertices[i] for i in idx)
        return cls(tuple(idx), verts, g.name)

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def vertex_set(self) -> frozenset:
        return frozenset(self.vertices)

    def edge_pairs(self) -> list[tuple]:
        """Consecutive vertex pairs, each as a frozenset."""
        vs = self.vertices
        return [frozenset((vs[i], vs[(i + 1) % len(vs)])) for i in range(len(vs))]

    def edges(self, g: Graph) -> list[tuple]:
        vs = self.vertices
        return [g.norm_edge(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    def to_json(self) -> list:
        return list(self.vertices)


def enumerate_cycles(g: Graph, max_count: int = DEFAULT_CYCLE_BUDGET) -> list[Cycle]:
    """All simple cycles of ``g`` in canonical form, sorted by (length, key).

    Depth-first search from each start vertex ``s`` through vertices of larger
    index only; a cycle is emitted once, in the direction whose second vertex
    has smaller index than its last.
    """
    n = g.n
    nbrs = [sorted(g.index(u) for u in g.neighbors(v)) for v in g.vertices]
    out: list[tuple] = []

    for s in range(n):
        path = [s]
        on_path = [False] * n
        on_path[s] = True
        # iterative DFS; stack of neighbour iterators
        stack = [iter([u for u in nbrs[s] if u > s])]
        while stack:
            nxt = next(stack[-1], None)
            if nxt is None:
                stack.pop()
                on_path[path.pop()] = False
                continue
            if on_path[nxt]:
                continue
            path.append(nxt)
            on_path[nxt] = True
            last = nxt
            if len(path) >= 3 and s in nbrs[last] and path[1] < last:
                out.append(tuple(path))
                if len(out) > max_count:
                    raise CycleBudgetExceeded(
                        f"more than {max_count} cycles in {g.name or 'graph'}", budget=max_count
                    )
            stack.append(iter([u for u in nbrs[last] if u > s and not on_path[u]]))
        # path holds only s once stack is drained
    out.sort(key=lambda t: (len(t), t))
    verts = g.vertices
    return [Cycle(t, tuple(verts[i] for i in t), g.name) for t in out]


def disjoint_cycle_tuples(
    g: Graph, k: int, max_count: int = DEFAULT_CYCLE_BUDGET, cycles: list[Cycle] | None = None
) -> list[tuple[Cycle, ...]]:
    """All unordered ``k``-tuples (k = 2 or 3) of pairwise vertex-disjoint cycles."""
    if k not in (2, 3):
        raise ValueError("k must be 2 or 3")
    cyc = enumerate_cycles(g, max_count) if cycles is None else cycles
    masks = [_mask(c) for c in cyc]
    res: list[tuple[Cycle, ...]] = []
    if k == 2:
        for i, j in combinations(range(len(cyc)), 2):
            if not masks[i] & masks[j]:
                res.append((cyc[i], cyc[j]))
                if len(res) > max_count:
                    raise CycleBudgetExceeded(f"more than {max_count} disjoint pairs", budget=max_count)
        return res
    for i in range(len(cyc)):
        mi = masks[i]
        js = [j for j in range(i + 1, len(cyc)) if not mi & masks[j]]
        for a, j in enumerate(js):
            mij = mi | masks[j]
            for l in js[a + 1 :]:
                if not mij & masks[l]:
                    res.append((cyc[i], cyc[j], cyc[l]))
                    if len(res) > max_count:
                        raise CycleBudgetExceeded(f"more than {max_count} disjoint triples", budget=max_count)
    return res


def _mask(c: Cycle) -> int:
    m = 0
    for i in c.key:
        m |= 1 << i
    return m

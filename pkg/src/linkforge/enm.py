"""Added-edge sets between two neighbour sets for the vertex identification
construction.

An edge set E between A1 (size n) and A2 (size m) is *admissible* when every
pair from A1 and every pair from A2 are joined by at least one edge of E.
Equivalently, any two vertices of A1 together miss at most one vertex of A2.
"""

from __future__ import annotations

import math
from itertools import combinations

from .errors import EdgeOutsideBipartition, SizeOutOfRange


def check_enm_criterion(edges, a1, a2) -> bool:
    a1 = list(a1)
    a2 = list(a2)
    s1, s2 = set(a1), set(a2)
    es = set()
    for u, v in edges:
        if u in s1 and v in s2:
            es.add((u, v))
        elif v in s1 and u in s2:
            es.add((v, u))
        else:
            raise EdgeOutsideBipartition(f"edge ({u!r}, {v!r}) does not join A1 to A2")
    for a, b in combinations(a1, 2):
        for c, d in combinations(a2, 2):
            if (a, c) not in es and (a, d) not in es and (b, c) not in es and (b, d) not in es:
                return False
    return True


def counting_lower_bound(n: int, m: int) -> int:
    """Counting lower bound on |E_{n,m}|, stated for m >= n (arguments are
    swapped otherwise)."""
    if m < n:
        n, m = m, n
    if m % 2:
        return (m - 1) // 2 * n
    return (m // 2) * (n - 1) + (m - 2) // 2


def lower_bound_as_stated(n: int, m: int) -> int:
    """The same counting bound evaluated literally for the given (n, m)."""
    if m % 2:
        return (m - 1) // 2 * n
    return (m // 2) * (n - 1) + (m - 2) // 2


def _violations(es: set, n: int, m: int) -> list:
    out = []
    for a, b in combinations(range(n), 2):
        for c, d in combinations(range(m), 2):
            if not ({(a, c), (a, d), (b, c), (b, d)} & es):
                out.append((a, b, c, d))
    return out


def generate_enm(n: int, m: int) -> list[tuple[int, int]]:
    """Balanced circulant edge set on A1 = range(n), A2 = range(m), repaired
    greedily until admissible.

    Vertex i of A1 is joined to ceil((m-1)/2) consecutive A2 vertices starting
    at floor(i*m/n) (cyclically). Repair adds, one at a time, the missing edge
    that fixes the most violated pair-pairs (ties to the smallest edge).
    """
    if not (3 <= n <= 6 and 3 <= m <= 6):
        raise SizeOutOfRange(f"sizes must lie in 3..6, got ({n}, {m})")
    span = math.ceil((m - 1) / 2)
    es = set()
    for i in range(n):
        start = (i * m) // n
        for j in range(span):
            es.add((i, (start + j) % m))
    bad = _violations(es, n, m)
    while bad:
        best = None
        best_score = 0
        for i in range(n):
            for j in range(m):
                if (i, j) in es:
                    continue
                score = sum(1 for a, b, c, d in bad if i in (a, b) and j in (c, d))
                if score > best_score:
                    best, best_score = (i, j), score
        es.add(best)
        bad = _violations(es, n, m)
    return sorted(es)


def min_enm(n: int, m: int) -> list[tuple[int, int]]:
    """A minimum-size admissible edge set (exact), for n, m <= 5.

    A1 vertices are interchangeable, so the search assigns each one a
    neighbourhood bitmask in non-decreasing order, prunes any pair whose union
    misses two or more A2 vertices, and bounds by the best total so far.
    """
    if not (1 <= n <= 5 and 1 <= m <= 5):
        raise SizeOutOfRange(f"exhaustive search supports sizes 1..5, got ({n}, {m})")
    need = m - 1
    pop = [bin(x).count("1") for x in range(1 << m)]
    best: list = [None, n * m + 1]

    def rec(chosen: list, start: int, total: int):
        if total >= best[1]:
            return
        if len(chosen) == n:
            best[0], best[1] = list(chosen), total
            return
        for mask in range(start, 1 << m):
            if total + pop[mask] >= best[1]:
                continue
            if any(pop[mask | c] < need for c in chosen):
                continue
            chosen.append(mask)
            rec(chosen, mask, total + pop[mask])
            chosen.pop()

    rec([], 0, 0)
    return sorted((i, j) for i, mask in enumerate(best[0]) for j in range(m) if mask >> j & 1)

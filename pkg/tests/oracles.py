"""Brute-force reference computations used only by the tests.

Nothing in here imports search code from linkforge; it works on raw vertex
and edge lists so that agreement with the library is meaningful.
"""

from __future__ import annotations

from itertools import combinations, permutations


def _adj(vertices, edges):
    adj = {v: set() for v in vertices}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def _connected(block, adj):
    block = set(block)
    start = next(iter(block))
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y in block and y not in seen:
                seen.add(y)
                stack.append(y)
    return seen == block


def has_minor_bruteforce(host_vertices, host_edges, pat_vertices, pat_edges) -> bool:
    """Enumerate every partition of the host into a discard pile plus exactly
    k connected blocks, and test each quotient for the pattern under all k!
    block assignments."""
    hv = list(host_vertices)
    k = len(pat_vertices)
    if k == 0:
        return True
    adj = _adj(hv, host_edges)
    pidx = {p: i for i, p in enumerate(pat_vertices)}
    pe = [(pidx[a], pidx[b]) for a, b in pat_edges]
    n = len(hv)
    labels = [0] * n

    def check(nblocks):
        blocks = [[hv[i] for i in range(n) if labels[i] == b] for b in range(1, nblocks + 1)]
        if not all(_connected(b, adj) for b in blocks):
            return False
        owner = {v: bi for bi, b in enumerate(blocks) for v in b}
        qadj = set()
        for u in hv:
            for w in adj[u]:
                if u in owner and w in owner and owner[u] != owner[w]:
                    qadj.add((owner[u], owner[w]))
        for perm in permutations(range(nblocks)):
            if all((perm[a], perm[b]) in qadj for a, b in pe):
                return True
        return False

    def rec(i, nblocks):
        if n - i < k - nblocks:
            return False
        if i == n:
            return nblocks == k and check(nblocks)
        for lab in range(0, min(nblocks + 1, k) + 1):
            labels[i] = lab
            if rec(i + 1, max(nblocks, lab)):
                return True
        labels[i] = 0
        return False

    return rec(0, 0)


def count_cycles_bruteforce(vertices, edges) -> int:
    """Sum over vertex subsets of the number of Hamiltonian cycles of the
    induced subgraph (each undirected cycle counted once)."""
    adj = _adj(vertices, edges)
    vs = list(vertices)
    total = 0
    for r in range(3, len(vs) + 1):
        for sub in combinations(vs, r):
            first, rest = sub[0], sub[1:]
            count = 0
            for perm in permutations(rest):
                if perm[0] > perm[-1]:
                    continue
                walk = (first,) + perm
                if all(walk[i + 1] in adj[walk[i]] for i in range(r - 1)) and first in adj[walk[-1]]:
                    count += 1
            total += count
    return total


def enm_ok(edges, n, m) -> bool:
    es = set(edges)
    for a, a2 in combinations(range(n), 2):
        for b, b2 in combinations(range(m), 2):
            if not any((x, y) in es for x in (a, a2) for y in (b, b2)):
                return False
    return True


def min_enm_bruteforce(n, m) -> int:
    """Smallest edge set meeting the pair criterion, by plain increasing-size
    subset enumeration over all of A1 x A2."""
    allpairs = [(i, j) for i in range(n) for j in range(m)]
    for size in range(len(allpairs) + 1):
        for sub in combinations(allpairs, size):
            if enm_ok(sub, n, m):
                return size
    raise AssertionError("unreachable")


def _hamiltonian_cycles(sub, adj) -> int:
    first, rest = sub[0], sub[1:]
    count = 0
    for perm in permutations(rest):
        if perm[0] > perm[-1]:
            continue
        walk = (first,) + perm
        if all(walk[i + 1] in adj[walk[i]] for i in range(len(walk) - 1)) and first in adj[walk[-1]]:
            count += 1
    return count


def count_disjoint_pairs_bruteforce(vertices, edges) -> tuple[int, int]:
    """(number of unordered vertex-disjoint cycle pairs, how many of them miss
    some vertex), by summing products of Hamiltonian-cycle counts over pairs
    of disjoint vertex subsets."""
    adj = _adj(vertices, edges)
    vs = sorted(vertices)
    ham = {}
    for r in range(3, len(vs) + 1):
        for sub in combinations(vs, r):
            c = _hamiltonian_cycles(sub, adj)
            if c:
                ham[frozenset(sub)] = c
    subsets = list(ham)
    total = missing = 0
    for i, s in enumerate(subsets):
        for t in subsets[i + 1 :]:
            if not s & t:
                k = ham[s] * ham[t]
                total += k
                if len(s) + len(t) < len(vs):
                    missing += k
    return total, missing

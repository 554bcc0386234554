"""Naive brute-force oracles, deliberately sharing no code with the fast paths.

They work on plain adjacency sets (no bitsets) and enumerate everything, so
they are only practical for small graphs (n <= 10 or so).
"""

from __future__ import annotations

from itertools import combinations, permutations
from typing import Optional

from toughcycles.graph import Graph


def _adjacency_sets(g: Graph) -> list[set[int]]:
    return [{j for j in range(g.n) if g.adj[i] >> j & 1} for i in range(g.n)]


def _independent(nbrs: list[set[int]], vertices) -> bool:
    vs = list(vertices)
    return all(b not in nbrs[a] for a, b in combinations(vs, 2))


def alpha_bruteforce(g: Graph) -> int:
    nbrs = _adjacency_sets(g)
    for size in range(g.n, 0, -1):
        for subset in combinations(range(g.n), size):
            if _independent(nbrs, subset):
                return size
    return 0


def sigma3_bruteforce(g: Graph) -> int:
    nbrs = _adjacency_sets(g)
    sums = [sum(len(nbrs[v]) for v in t) for t in combinations(range(g.n), 3)
            if _independent(nbrs, t)]
    if alpha_bruteforce(g) >= 3:
        return min(sums)
    return 3 * (g.n - 1)


def distance_matrix(g: Graph) -> list[list[Optional[int]]]:
    """All-pairs hop distances by Floyd-Warshall; None for unreachable."""
    inf = float("inf")
    n = g.n
    d = [[0 if i == j else (1 if g.adj[i] >> j & 1 else inf) for j in range(n)] for i in range(n)]
    for k in range(n):
        for i in range(n):
            for j in range(n):
                if d[i][k] + d[k][j] < d[i][j]:
                    d[i][j] = d[i][k] + d[k][j]
    return [[None if x == inf else int(x) for x in row] for row in d]


def nc2_bruteforce(g: Graph) -> Optional[int]:
    n = g.n
    nbrs = _adjacency_sets(g)
    if all(len(nbrs[v]) == n - 1 for v in range(n)):
        return n - 1
    d = distance_matrix(g)
    values = [len(nbrs[x] | nbrs[y]) for x, y in combinations(range(n), 2) if d[x][y] == 2]
    return min(values) if values else None


def components_bruteforce(g: Graph, removed) -> int:
    """Component count of G - removed by union-find."""
    removed = set(removed)
    keep = [v for v in range(g.n) if v not in removed]
    parent = {v: v for v in keep}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for a, b in g.edges():
        if a in parent and b in parent:
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
    return len({find(v) for v in keep})


def tough_bruteforce(g: Graph) -> Optional[tuple[int, ...]]:
    """Smallest violating cut over all nonempty proper subsets, or None if 1-tough."""
    for size in range(1, g.n):
        for s in combinations(range(g.n), size):
            if components_bruteforce(g, s) > size:
                return s
    return None


def circumference_dp(g: Graph) -> int:
    """Held-Karp style subset DP.

    For each root r (the cycle's smallest vertex), ``ends[S]`` is the set of
    vertices at which a path from r covering exactly S can stop.
    """
    n = g.n
    nbrs = _adjacency_sets(g)
    best = 0
    for r in range(n):
        higher = [v for v in range(r + 1, n)]
        ends: dict[frozenset, set[int]] = {frozenset([r]): {r}}
        frontier = [frozenset([r])]
        while frontier:
            nxt = []
            for subset in frontier:
                for e in ends[subset]:
                    for w in nbrs[e]:
                        if w in subset or w not in higher:
                            continue
                        bigger = subset | {w}
                        if bigger not in ends:
                            ends[bigger] = set()
                            nxt.append(bigger)
                        ends[bigger].add(w)
            frontier = nxt
        for subset, stops in ends.items():
            if len(subset) >= 3 and len(subset) > best and any(r in nbrs[e] for e in stops):
                best = len(subset)
    return best


def cycles_bruteforce(g: Graph, length: int) -> set[tuple[int, ...]]:
    """All cycles of a given length as canonical tuples, via vertex orderings."""
    nbrs = _adjacency_sets(g)
    found = set()
    for subset in combinations(range(g.n), length):
        first = subset[0]
        for order in permutations(subset[1:]):
            seq = (first,) + order
            if seq[1] > seq[-1]:
                continue
            if all(seq[(i + 1) % length] in nbrs[seq[i]] for i in range(length)):
                found.add(seq)
    return found


def is_path_bruteforce(g: Graph, path) -> bool:
    return len(set(path)) == len(path) and all(
        g.adj[path[i]] >> path[i + 1] & 1 for i in range(len(path) - 1)
    )

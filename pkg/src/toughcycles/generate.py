"""Exhaustive generation of graphs up to isomorphism.

Graphs on n vertices are grown from representatives on n - 1 vertices by
adding one vertex with every possible neighbor set; duplicates are removed by
canonical certificate. Connected graphs only need connected parents, since
every connected graph has a vertex whose removal keeps it connected.
"""

from __future__ import annotations

from typing import Iterator

from toughcycles import kernels
from toughcycles.graph import Graph

MAX_GENERATED = 10

# connected / all graph counts by vertex count, for cross-checking
CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117, 9: 261080,
                    10: 11716571}
ALL_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346, 9: 274668,
              10: 12005168}


def canonical_form(g: Graph) -> Graph:
    """Canonically relabeled copy of ``g``; isomorphic inputs give equal outputs."""
    _, order = kernels.canonical_labeling(g.adj, g.n)
    return g.relabel(order)


def certificate(g: Graph) -> tuple[int, ...]:
    return kernels.canonical_labeling(g.adj, g.n)[0]


def _extend(parents: list[Graph], connected_only: bool) -> list[Graph]:
    seen = set()
    out = []
    if not parents:
        return out
    m = parents[0].n
    first = 1 if connected_only else 0
    for parent in parents:
        for nbrs in range(first, 1 << m):
            adj = list(parent.adj)
            for w in range(m):
                if nbrs >> w & 1:
                    adj[w] |= 1 << m
            adj.append(nbrs)
            cert, order = kernels.canonical_labeling(adj, m + 1)
            if cert in seen:
                continue
            seen.add(cert)
            out.append(Graph(m + 1, cert))
    return out


def enumerate_graphs(n: int, connected_only: bool = True) -> Iterator[Graph]:
    """One canonical representative per isomorphism class on ``n`` vertices."""
    if not 1 <= n <= MAX_GENERATED:
        raise ValueError(f"internal generation supports 1 <= n <= {MAX_GENERATED}, got {n}")
    level = [Graph(1, (0,))]
    for _ in range(1, n):
        level = _extend(level, connected_only)
    yield from level

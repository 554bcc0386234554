"""Exact graph invariants: alpha, sigma3, NC2, 1-toughness, circumference, mu."""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional

from toughcycles import kernels
from toughcycles.cycles import OrientedCycle
from toughcycles.graph import Graph, VertexSet, members


def max_independent_set(g: Graph) -> VertexSet:
    return kernels.max_independent_set(g.adj, g.n)


def independence_number(g: Graph) -> int:
    return max_independent_set(g).bit_count()


def sigma3(g: Graph, alpha: Optional[int] = None) -> int:
    """Minimum degree sum over independent triples; ``3(n-1)`` when alpha < 3."""
    if alpha is None:
        alpha = independence_number(g)
    if alpha < 3:
        return 3 * (g.n - 1)
    deg = g.degrees()
    full = g.vertex_mask
    best = None
    for x in range(g.n):
        non_x = full & ~g.adj[x] & ~((2 << x) - 1)
        for y in members(non_x):
            pair = deg[x] + deg[y]
            if best is not None and pair >= best:
                continue
            rest = non_x & ~g.adj[y] & ~((2 << y) - 1)
            for z in members(rest):
                total = pair + deg[z]
                if best is None or total < best:
                    best = total
    return best


def nc2(g: Graph) -> Optional[int]:
    """Minimum ``|N(x) | N(y)|`` over pairs at distance 2; ``n - 1`` when complete.

    Returns None for a non-complete graph with no distance-2 pair (a disjoint
    union of cliques), where the quantity is undefined.
    """
    if g.is_complete():
        return g.n - 1
    best = None
    adj = g.adj
    for x in range(g.n):
        for y in range(x + 1, g.n):
            if not adj[x] >> y & 1 and adj[x] & adj[y]:
                size = (adj[x] | adj[y]).bit_count()
                if best is None or size < best:
                    best = size
    return best


def components_after_removal(g: Graph, s: VertexSet) -> int:
    return kernels.count_components(g.adj, g.n, s)


class ToughnessResult(NamedTuple):
    one_tough: bool
    cut: Optional[tuple[int, ...]]


def is_one_tough(g: Graph, alpha: Optional[int] = None) -> ToughnessResult:
    """1-toughness with a minimum-size violating cut when it fails."""
    if alpha is None:
        alpha = independence_number(g)
    s = kernels.tough_violation(g.adj, g.n, alpha)
    if s:
        return ToughnessResult(False, tuple(members(s)))
    return ToughnessResult(True, None)


def circumference(g: Graph) -> tuple[int, Optional[OrientedCycle]]:
    """Longest cycle length with a witness; ``(0, None)`` for forests."""
    verts = kernels.longest_cycle(g.adj, g.n)
    if not verts:
        return 0, None
    return len(verts), OrientedCycle(tuple(verts))


class TooManyCycles(RuntimeError):
    """Raised when a cycle enumeration exceeds its budget."""


def cycles_of_length(g: Graph, length: int, limit: Optional[int] = None) -> list[OrientedCycle]:
    cap = limit if limit is not None else 1 << 62
    found = kernels.cycles_of_length(g.adj, g.n, length, cap)
    if len(found) > cap:
        raise TooManyCycles(f"more than {cap} cycles of length {length}")
    return [OrientedCycle(tuple(c)) for c in found]


def enumerate_longest_cycles(g: Graph, limit: Optional[int] = None) -> list[OrientedCycle]:
    """Every longest cycle once, up to rotation and reflection."""
    c, _ = circumference(g)
    if c == 0:
        return []
    return cycles_of_length(g, c, limit)


def is_dominating_cycle(g: Graph, c: OrientedCycle) -> bool:
    return g.is_independent(g.vertex_mask & ~c.mask)


def mu_cycle(g: Graph, c: OrientedCycle) -> Optional[int]:
    """Largest degree of a vertex off ``c``; None when ``c`` is hamiltonian."""
    off = members(g.vertex_mask & ~c.mask)
    if not off:
        return None
    return max(g.degree(v) for v in off)


def mu_graph(g: Graph, limit: Optional[int] = None) -> Optional[int]:
    """Maximum of ``mu_cycle`` over all longest cycles; None if hamiltonian or acyclic."""
    values = [mu_cycle(g, c) for c in enumerate_longest_cycles(g, limit)]
    values = [v for v in values if v is not None]
    return max(values) if values else None


@dataclass(frozen=True)
class InvariantBundle:
    n: int
    alpha: int
    sigma3: int
    nc2: Optional[int]
    circumference: int
    is_one_tough: bool
    is_hamiltonian: bool
    mu_graph: Optional[int]


def compute_invariants(g: Graph, with_mu: bool = True) -> InvariantBundle:
    alpha = independence_number(g)
    c, _ = circumference(g)
    hamiltonian = c == g.n
    return InvariantBundle(
        n=g.n,
        alpha=alpha,
        sigma3=sigma3(g, alpha),
        nc2=nc2(g),
        circumference=c,
        is_one_tough=is_one_tough(g, alpha).one_tough,
        is_hamiltonian=hamiltonian,
        mu_graph=mu_graph(g) if with_mu and c and not hamiltonian else None,
    )

"""The hopping fixpoint on a cycle and an off-cycle vertex."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from toughcycles.cycles import OrientedCycle
from toughcycles.graph import Graph, VertexSet, members
from toughcycles.invariants import TooManyCycles, components_after_removal, cycles_of_length


@dataclass(frozen=True)
class HoppingSets:
    X: VertexSet
    Y: VertexSet
    trace: tuple[tuple[VertexSet, VertexSet], ...]

    @property
    def iterations(self) -> int:
        return len(self.trace)


def hopping_fixpoint(g: Graph, c: OrientedCycle, u: int) -> HoppingSets:
    """Iterate ``X_i = N(Y_{i-1} + u)``, ``Y_i = (X_i & C)+ & (X_i & C)-`` to the fixpoint."""
    if u in c:
        raise ValueError(f"u={u} lies on the cycle")
    if g.adj[u] & ~c.mask:
        raise ValueError(f"u={u} is not isolated in G - V(C)")
    y = 0
    x = None
    trace = []
    while True:
        new_x = g.neighborhood(y | 1 << u)
        on = new_x & c.mask
        new_y = c.shift(on, 1) & c.shift(on, -1)
        trace.append((new_x, new_y))
        if new_x == x:
            break
        x, y = new_x, new_y
    return HoppingSets(X=x, Y=y, trace=tuple(trace))


@dataclass(frozen=True)
class PartVerdict:
    status: str  # holds | fails | skipped
    witness: Optional[list[int]] = None


def hopping_hypotheses(g: Graph, c: OrientedCycle, u: int, limit: Optional[int] = None,
                       next_cycles: Optional[list] = None,
                       same_cycles: Optional[list] = None) -> Optional[str]:
    """None when the hopping hypotheses hold, else the reason they fail.

    ``next_cycles`` / ``same_cycles`` may pass precomputed cycle lists of
    lengths |C|+1 and |C| to avoid re-enumeration.
    """
    if u in c:
        return "u on cycle"
    if g.adj[u] & ~c.mask:
        return "u not isolated off the cycle"
    k = len(c)
    if next_cycles is None:
        try:
            next_cycles = cycles_of_length(g, k + 1, 1) if k < g.n else []
        except TooManyCycles:  # more than one: existence is all that matters
            next_cycles = [None]
    if next_cycles:
        return f"a cycle of length {k + 1} exists"
    omega = components_after_removal(g, c.mask)
    pool = same_cycles if same_cycles is not None else cycles_of_length(g, k, limit)
    for other in pool:
        if components_after_removal(g, other.mask) < omega:
            return "another cycle of the same length leaves fewer components"
    return None


def check_hopping_conclusions(g: Graph, c: OrientedCycle, u: int,
                              h: Optional[HoppingSets] = None,
                              limit: Optional[int] = None) -> dict[str, PartVerdict]:
    """Verdicts for parts (a)-(d); all "skipped" when the hypotheses fail."""
    try:
        reason = hopping_hypotheses(g, c, u, limit)
    except TooManyCycles:
        reason = "cycle budget exhausted"
    if reason is not None:
        return {part: PartVerdict("skipped") for part in "abcd"}
    if h is None:
        h = hopping_fixpoint(g, c, u)
    return hopping_parts(g, c, h)


def hopping_parts(g: Graph, c: OrientedCycle, h: HoppingSets) -> dict[str, PartVerdict]:
    out = {}
    off = h.X & ~c.mask
    out["a"] = PartVerdict("fails", members(off)) if off else PartVerdict("holds")
    on = h.X & c.mask
    consecutive = [x for x in members(on) if on >> c.succ(x) & 1]
    out["b"] = (PartVerdict("fails", [consecutive[0], c.succ(consecutive[0])])
                if consecutive else PartVerdict("holds"))
    both = h.X & h.Y
    out["c"] = PartVerdict("fails", members(both)) if both else PartVerdict("holds")
    edge = next(([y, z] for y in members(h.Y) for z in members(g.adj[y] & h.Y) if y < z), None)
    out["d"] = PartVerdict("fails", edge) if edge else PartVerdict("holds")
    return out

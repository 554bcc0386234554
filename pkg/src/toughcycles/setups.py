"""Setups (u, v, C) on an oriented cycle and the structure derived from them.

A setup fixes an off-cycle vertex ``u`` and a cycle vertex ``v`` whose two
cycle neighbors are both adjacent to ``u``. From it come the ordered set
``B = N(u) | N(v)`` (listed along the cycle starting at ``v+``), its shifts,
the interval decomposition, small pairs and bad paths.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Optional

from toughcycles import kernels
from toughcycles.cycles import CycleError, OrientedCycle
from toughcycles.graph import Graph, VertexSet, bit, members
from toughcycles.invariants import enumerate_longest_cycles


class LemmaViolation(Exception):
    """A structural statement failed on a concrete instance; carries a witness."""

    def __init__(self, lemma: str, message: str, witness: Optional[dict] = None):
        super().__init__(f"{lemma}: {message}")
        self.lemma = lemma
        self.witness = witness or {}


class SetupError(ValueError):
    pass


@dataclass(frozen=True)
class BSets:
    order: tuple[int, ...]
    plus: VertexSet
    minus: VertexSet

    @property
    def mask(self) -> VertexSet:
        m = 0
        for b in self.order:
            m |= 1 << b
        return m


@dataclass(frozen=True)
class Interval:
    start: int
    end: int
    length: int
    inner: tuple[int, ...]
    good: bool


@dataclass(frozen=True)
class IntervalDecomposition:
    intervals: tuple[Interval, ...]

    def __iter__(self):
        return iter(self.intervals)

    def __len__(self):
        return len(self.intervals)

    @property
    def lengths(self) -> list[int]:
        return [iv.length for iv in self.intervals]

    def count(self, length: int) -> int:
        return sum(1 for iv in self.intervals if iv.length == length)

    @property
    def good_count(self) -> int:
        return sum(1 for iv in self.intervals if iv.good)


@dataclass(frozen=True)
class Setup:
    graph: Graph = field(repr=False)
    cycle: OrientedCycle
    u: int
    v: int

    def __post_init__(self):
        c, g = self.cycle, self.graph
        if self.u in c:
            raise SetupError(f"u={self.u} lies on the cycle")
        if self.v not in c:
            raise SetupError(f"v={self.v} is not on the cycle")
        if not (g.has_edge(self.u, c.succ(self.v)) and g.has_edge(self.u, c.pred(self.v))):
            raise SetupError(f"v+ and v- are not both neighbors of u={self.u}")

    @property
    def Nu(self) -> VertexSet:
        return self.graph.adj[self.u]

    @property
    def Nv(self) -> VertexSet:
        return self.graph.adj[self.v]

    @property
    def B_mask(self) -> VertexSet:
        return self.Nu | self.Nv

    @cached_property
    def bsets(self) -> BSets:
        return compute_B(self)

    @property
    def B(self) -> tuple[int, ...]:
        return self.bsets.order

    @property
    def m(self) -> int:
        return len(self.bsets.order)

    @property
    def Bplus(self) -> VertexSet:
        return self.bsets.plus

    @property
    def Bminus(self) -> VertexSet:
        return self.bsets.minus

    @cached_property
    def decomposition(self) -> IntervalDecomposition:
        return interval_decomposition(self)

    @property
    def s3_satisfied(self) -> bool:
        return self.decomposition.good_count >= 4

    def b(self, i: int) -> int:
        """1-based access ``b_i``."""
        return self.bsets.order[i - 1]

    def index(self, x: int) -> int:
        """1-based index of ``x`` in B."""
        return self.bsets.order.index(x) + 1

    def describe(self) -> dict:
        return {"u": self.u, "v": self.v, "cycle": list(self.cycle.vertices)}


def compute_B(s: Setup) -> BSets:
    """Order B along the cycle from ``v+`` and form B+ / B-.

    Raises LemmaViolation when some neighbor of u or v is off the cycle.
    """
    c = s.cycle
    raw = s.Nu | s.Nv
    off = raw & ~c.mask
    if off:
        raise LemmaViolation(
            "l3", "B is not contained in V(C)",
            {"setup": s.describe(), "off_cycle": members(off)},
        )
    start = c.succ(s.v)
    order = tuple(x for x in c.segment(start, c.pred(start)) if raw >> x & 1)
    return BSets(order=order, plus=c.shift(raw, 1), minus=c.shift(raw, -1))


def interval_decomposition(s: Setup) -> IntervalDecomposition:
    """Tile the cycle by the C-paths ``b_i -> b_{i+1}`` (indices mod m)."""
    c = s.cycle
    order = s.bsets.order
    m = len(order)
    out = []
    for i in range(m):
        a, b = order[i], order[(i + 1) % m]
        length = c.gap(a, b) or len(c)
        inner = c.segment(a, b)[1:-1] if length < len(c) else c.segment(a, c.pred(a))[1:]
        good = length == 2 and (
            (s.Nu >> a & 1 and s.Nu >> b & 1) or (s.Nv >> a & 1 and s.Nv >> b & 1)
        )
        out.append(Interval(a, b, length, tuple(inner), bool(good)))
    return IntervalDecomposition(tuple(out))


def neighborhood_intervals(g: Graph, c: OrientedCycle, u: int) -> IntervalDecomposition:
    """Intervals between successive on-cycle neighbors of ``u`` alone.

    A 2-interval is "good" here when both of its ends are in N(u), which is
    automatic for this decomposition.
    """
    nu = g.adj[u] & c.mask
    order = [x for x in c.vertices if nu >> x & 1]
    m = len(order)
    out = []
    for i in range(m):
        a, b = order[i], order[(i + 1) % m]
        length = c.gap(a, b) or len(c)
        inner = c.segment(a, b)[1:-1] if length < len(c) else c.segment(a, c.pred(a))[1:]
        out.append(Interval(a, b, length, tuple(inner), length == 2))
    return IntervalDecomposition(tuple(out))


def inner_connected(s: Setup, p: Interval, q: Interval) -> bool:
    adj = s.graph.adj
    q_inner = 0
    for y in q.inner:
        q_inner |= 1 << y
    return any(adj[x] & q_inner for x in p.inner)


# orientation and role changes --------------------------------------------------

def reverse_orientation(s: Setup) -> Setup:
    return Setup(s.graph, s.cycle.reversed(), s.u, s.v)


def swap_roles(s: Setup) -> Setup:
    """Splice u in for v: the cycle ``u v+ ... v-`` with v now off the cycle."""
    c = s.cycle
    start = c.succ(s.v)
    path = c.segment(start, c.pred(s.v))
    g = s.graph
    if not (g.has_edge(s.u, path[0]) and g.has_edge(s.u, path[-1])):
        raise SetupError("u is not adjacent to both v+ and v-")
    return Setup(g, OrientedCycle((s.u,) + path), s.v, s.u)


def relocated_setup(s: Setup, v0: int) -> tuple[Setup, str]:
    """The setup with pivot ``v0`` and which part applies, without comparing B."""
    if v0 == s.v:
        raise SetupError("v0 must differ from v")
    lengths = s.decomposition.lengths
    if any(k not in (2, 3) for k in lengths):
        raise SetupError(f"interval lengths {sorted(set(lengths))} not all in {{2, 3}}")
    c = s.cycle
    if v0 not in c:
        raise SetupError(f"v0={v0} is not on the cycle")
    ends = bit(c.succ(v0)) | bit(c.pred(v0))
    if s.Nu & ends == ends:
        return Setup(s.graph, c, s.u, v0), "a"
    if s.Nv & ends == ends:
        return Setup(s.graph, swap_roles(s).cycle, s.v, v0), "b"
    raise SetupError(f"neither N(u) nor N(v) contains both cycle neighbors of v0={v0}")


def relocate_v(s: Setup, v0: int) -> Setup:
    """Move the pivot to ``v0`` keeping B; requires all intervals of length 2 or 3.

    Part (a): v0+ and v0- in N(u) gives (u, v0, C). Part (b): both in N(v)
    gives (v, v0, C') with C' the role-swapped cycle.
    """
    new, part = relocated_setup(s, v0)
    if new.B_mask != s.B_mask:
        raise LemmaViolation(
            "inva", f"relocating v to {v0} (part {part}) changed B",
            {"setup": s.describe(), "v0": v0, "B": members(s.B_mask),
             "new_B": members(new.B_mask)},
        )
    return new


# enumeration --------------------------------------------------------------------

def setups_on_cycle(g: Graph, c: OrientedCycle) -> list[Setup]:
    out = []
    for u in members(g.vertex_mask & ~c.mask):
        nu = g.adj[u]
        for v in c.vertices:
            if nu >> c.succ(v) & 1 and nu >> c.pred(v) & 1:
                out.append(Setup(g, c, u, v))
    return out


def find_setups(g: Graph, require_s3: bool = False, limit: Optional[int] = None) -> list[Setup]:
    """All setups over every longest cycle in both orientations.

    Setups whose B leaves the cycle are skipped (they cannot be ordered); the
    verifier reports those separately.
    """
    out = []
    for c in enumerate_longest_cycles(g, limit):
        if len(c) == g.n:
            return []
        for oriented in (c, c.reversed()):
            for s in setups_on_cycle(g, oriented):
                if s.B_mask & ~oriented.mask:
                    continue
                if require_s3 and not s.s3_satisfied:
                    continue
                out.append(s)
    return out


# small pairs ---------------------------------------------------------------------

@dataclass(frozen=True)
class SmallPair:
    x: int
    y: int
    union_size: int


def find_small_pairs(s: Setup) -> list[SmallPair]:
    g = s.graph
    limit = s.B_mask.bit_count() - 1
    out = []
    for x in range(g.n):
        for y in range(x + 1, g.n):
            if g.adj[x] >> y & 1 or not g.adj[x] & g.adj[y]:
                continue
            size = (g.adj[x] | g.adj[y]).bit_count()
            if size <= limit:
                out.append(SmallPair(x, y, size))
    return out


# bad paths -----------------------------------------------------------------------

@dataclass(frozen=True)
class BadPathWitness:
    form: str  # "i" or "ii"
    i: int
    j: int
    path: tuple[int, ...]
    case: Optional[int]
    degenerate: bool = False


def _rewire_case(s: Setup, bi: int, bj: int) -> Optional[int]:
    nu, nv = s.Nu, s.Nv
    if nu >> bi & 1 and nu >> bj & 1:
        return 1
    if nv >> bi & 1 and nv >> bj & 1:
        return 2
    if nv >> bj & 1 and nu >> bi & 1:
        return 3
    if nu >> bj & 1 and nv >> bi & 1:
        return 4
    return None


def find_bad_paths(s: Setup, limit: int = 10_000) -> list[BadPathWitness]:
    """All bad paths of both forms, by pinned Hamiltonian-path search."""
    c, g = s.cycle, s.graph
    order = s.B
    m = len(order)
    vp, vm = c.succ(s.v), c.pred(s.v)
    out: list[BadPathWitness] = []
    for i in range(2, m):
        bi = order[i - 1]
        seg = c.segment(vp, c.pred(bi))
        seg_mask = sum(1 << x for x in seg)
        for j in range(1, i):
            bj = order[j - 1]
            for p in kernels.hamiltonian_paths(g.adj, seg_mask, vp, bj, limit):
                out.append(BadPathWitness("i", i, j, tuple(p), _rewire_case(s, bi, bj),
                                          degenerate=len(p) == 1))
        seg = c.segment(c.succ(bi), vm)
        seg_mask = sum(1 << x for x in seg)
        for j in range(i + 1, m + 1):
            bj = order[j - 1]
            for p in kernels.hamiltonian_paths(g.adj, seg_mask, vm, bj, limit):
                out.append(BadPathWitness("ii", i, j, tuple(p), _rewire_case(s, bi, bj),
                                          degenerate=len(p) == 1))
    return out


def extend_cycle(s: Setup, w: BadPathWitness) -> OrientedCycle:
    """Turn a bad path into a cycle on V(C) + u, one longer than C."""
    if w.form == "ii":
        # a form-(ii) path on C is a form-(i) path on the reversed orientation
        r = reverse_orientation(s)
        m = len(s.B)
        mirrored = BadPathWitness("i", m + 1 - w.i, m + 1 - w.j, w.path, w.case, w.degenerate)
        return extend_cycle(r, mirrored)
    c = s.cycle
    bi, bj = s.b(w.i), s.b(w.j)
    vp, vm = c.succ(s.v), c.pred(s.v)
    path = tuple(w.path)
    if path[0] != vp:
        path = path[::-1]
    if path[0] != vp or path[-1] != bj:
        raise SetupError("witness path does not run from v+ to b_j")
    expected = set(c.segment(vp, c.pred(bi)))
    if set(path) != expected or len(path) != len(expected):
        raise SetupError("witness path does not cover v+ -> b_i- exactly")
    back = path[::-1]  # b_j ... v+
    if w.case is not None and _case_holds(s, w.case, bi, bj):
        case = w.case
    else:
        case = _rewire_case(s, bi, bj)
    if case is None:
        raise SetupError("no rewiring case applies to this witness")
    tail_back = tuple(reversed(c.segment(bi, vm)))  # v- <-C b_i
    head_fwd = c.segment(bi, vm)  # b_i ->C v-
    if case == 1:
        seq = (s.v,) + tail_back + (s.u,) + back
    elif case == 2:
        seq = (s.u,) + tail_back + (s.v,) + back
    elif case == 3:
        seq = (s.u,) + head_fwd + (s.v,) + back
    else:
        seq = (s.v,) + head_fwd + (s.u,) + back
    out = OrientedCycle(seq)
    if not out.is_valid_in(s.graph) or len(out) != len(c) + 1:
        raise CycleError(f"rewiring case {case} produced an invalid cycle {seq}")
    return out


def _case_holds(s: Setup, case: int, bi: int, bj: int) -> bool:
    nu, nv = s.Nu, s.Nv
    need = {1: (nu, bi, nu, bj), 2: (nv, bi, nv, bj), 3: (nu, bi, nv, bj), 4: (nv, bi, nu, bj)}
    a, x, b, y = need[case]
    return bool(a >> x & 1 and b >> y & 1)

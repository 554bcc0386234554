"""Per-instance predicates for the structural statements about longest cycles.

Each ``check_*`` function inspects one configuration and returns a list of
violations (dicts naming the offending vertices); an empty list means the
statement held there. They also return how many premise instances were
actually examined, so callers can tell "held" from "never applied".
"""

from __future__ import annotations

from typing import Callable, NamedTuple, Optional

from toughcycles.cycles import OrientedCycle
from toughcycles.graph import Graph, bit, members
from toughcycles.hopping import hopping_fixpoint, hopping_parts
from toughcycles.invariants import is_dominating_cycle
from toughcycles.setups import (
    Setup,
    find_bad_paths,
    find_small_pairs,
    inner_connected,
    relocated_setup,
)


class Outcome(NamedTuple):
    checked: int
    violations: list


def _segment_mask(c: OrientedCycle, a: int, b: int) -> int:
    m = 0
    for x in c.segment(a, b):
        m |= 1 << x
    return m


def check_dominating(g: Graph, c: OrientedCycle) -> Outcome:
    if is_dominating_cycle(g, c):
        return Outcome(1, [])
    off = g.vertex_mask & ~c.mask
    edge = next([a, b] for a in members(off) for b in members(g.adj[a] & off))
    return Outcome(1, [{"cycle": list(c.vertices), "edge": edge}])


def check_disjoint_shifts(s: Setup) -> Outcome:
    """B is on the cycle and meets neither B+ nor B-."""
    B = s.B_mask
    bad = []
    if B & ~s.cycle.mask:
        bad.append({"off_cycle_B": members(B & ~s.cycle.mask)})
    else:
        if B & s.Bplus:
            bad.append({"B_and_Bplus": members(B & s.Bplus)})
        if B & s.Bminus:
            bad.append({"B_and_Bminus": members(B & s.Bminus)})
    return Outcome(1, bad)


def check_shift_independence(s: Setup) -> Outcome:
    """B+ with V(G-C) is independent, and likewise B-."""
    g = s.graph
    off = g.vertex_mask & ~s.cycle.mask
    bad = []
    for name, shifted in (("Bplus", s.Bplus), ("Bminus", s.Bminus)):
        union = shifted | off
        for a in members(union):
            hit = g.adj[a] & union
            if hit:
                bad.append({"set": name, "edge": [a, members(hit)[0]]})
                break
    return Outcome(2, bad)


def check_short_interval_isolation(s: Setup) -> Outcome:
    """Inner vertices of 2- and 3-intervals see no inner vertex of another 2-interval."""
    ivs = s.decomposition.intervals
    checked = 0
    bad = []
    for p in ivs:
        if p.length not in (2, 3):
            continue
        for q in ivs:
            if q is p or q.length != 2:
                continue
            checked += 1
            if inner_connected(s, p, q):
                bad.append({"interval": [p.start, p.end], "other": [q.start, q.end]})
    return Outcome(checked, bad)


def check_long_intervals(s: Setup) -> Outcome:
    """If intervals are pairwise inner-disconnected, at least two are longer than 3."""
    ivs = s.decomposition.intervals
    for a in range(len(ivs)):
        for b in range(a + 1, len(ivs)):
            if inner_connected(s, ivs[a], ivs[b]):
                return Outcome(0, [])
    long_ones = sum(1 for iv in ivs if iv.length > 3)
    if long_ones >= 2:
        return Outcome(1, [])
    return Outcome(1, [{"lengths": [iv.length for iv in ivs]}])


def check_small_pairs(s: Setup, nc2_value: Optional[int]) -> Outcome:
    if nc2_value is None or s.B_mask.bit_count() != nc2_value:
        return Outcome(0, [])
    pairs = find_small_pairs(s)
    return Outcome(1, [{"pair": [p.x, p.y], "union": p.union_size} for p in pairs[:1]])


def check_bad_paths(s: Setup) -> Outcome:
    paths = find_bad_paths(s, limit=1)
    return Outcome(1, [{"form": w.form, "i": w.i, "j": w.j, "path": list(w.path),
                        "case": w.case, "degenerate": w.degenerate} for w in paths[:1]])


# claims on a single setup ---------------------------------------------------------

def check_triangle_hop(s: Setup) -> Outcome:
    """x with x- x+ adjacent and x+2 in B sees nothing of B- apart from x-, x, x+.

    Mirror: x- x+ adjacent and x-2 in B, then x sees nothing of B+ apart from them.
    """
    g, c = s.graph, s.cycle
    B = s.B_mask
    checked = 0
    bad = []
    for x in c.vertices:
        xm, xp = c.pred(x), c.succ(x)
        if not g.has_edge(xm, xp):
            continue
        near = bit(xm) | bit(x) | bit(xp)
        if B >> c.step(x, 2) & 1:
            checked += 1
            hit = g.adj[x] & s.Bminus & ~near
            if hit:
                bad.append({"x": x, "side": "Bminus", "y": members(hit)})
        if B >> c.step(x, -2) & 1:
            checked += 1
            hit = g.adj[x] & s.Bplus & ~near
            if hit:
                bad.append({"x": x, "side": "Bplus", "y": members(hit)})
    return Outcome(checked, bad)


def _two_interval_inner(s: Setup) -> int:
    m = 0
    for iv in s.decomposition.intervals:
        if iv.length == 2:
            m |= bit(iv.inner[0])
    return m


def check_chord_across(s: Setup) -> Outcome:
    """x+ = b_i, y- = b_j (j < i), xy an edge: x- and y+ avoid inner vertices of
    2-intervals lying on x+2 -> C -> y-2."""
    g, c = s.graph, s.cycle
    order = s.B
    m = len(order)
    inner2 = _two_interval_inner(s)
    checked = 0
    bad = []
    for i in range(1, m + 1):
        x = c.pred(order[i - 1])
        for j in range(1, i):
            y = c.succ(order[j - 1])
            if x == y or not g.has_edge(x, y):
                continue
            checked += 1
            targets = inner2 & _segment_mask(c, c.step(x, 2), c.step(y, -2))
            for w in (c.pred(x), c.succ(y)):
                hit = g.adj[w] & targets
                if hit:
                    bad.append({"x": x, "y": y, "vertex": w, "inner": members(hit)})
    return Outcome(checked, bad)


def check_adjacent_pair(s: Setup) -> Outcome:
    """x, x+ inside v+2 -> C -> v-2: no a, b in (B+ & B-) - {x, x+} with xa, x+b edges."""
    g, c = s.graph, s.cycle
    both = s.Bplus & s.Bminus
    region = c.segment(c.step(s.v, 2), c.step(s.v, -2))
    checked = 0
    bad = []
    for x in region[:-1]:
        xp = c.succ(x)
        checked += 1
        pool = both & ~bit(x) & ~bit(xp)
        if g.adj[x] & pool and g.adj[xp] & pool:
            bad.append({"x": x, "a": members(g.adj[x] & pool), "b": members(g.adj[xp] & pool)})
    return Outcome(checked, bad)


def _chords(s: Setup, a_side: int, c_side: int):
    """Yield (i, j, a, c) with a = b_i shifted by a_side, c = b_j shifted by c_side,
    i < j, a != c, ac an edge."""
    g, cyc = s.graph, s.cycle
    order = s.B
    m = len(order)
    for i in range(1, m + 1):
        a = cyc.step(order[i - 1], a_side)
        for j in range(i + 1, m + 1):
            c = cyc.step(order[j - 1], c_side)
            if a != c and g.has_edge(a, c):
                yield i, j, a, c


def check_chord_neighbors(s: Setup) -> Outcome:
    """a = b_i+, c = b_j-, ac an edge.

    (1) b_k- and b_k+ for i < k < j are adjacent to neither a- nor c+.
    (2) x on a+ -> C -> c-: x v+2 an edge forbids x+ v+ and x- v+ (needs
        b_i != v+); x v-2 an edge forbids x+ v- and x- v- (needs b_j != v-).
        With b_i = v+ the vertex a is v+2 itself and the forbidden pairs can
        be cycle edges, so those configurations are outside the statement.
    """
    g, cyc = s.graph, s.cycle
    order = s.B
    vp, vm = cyc.succ(s.v), cyc.pred(s.v)
    vp2, vm2 = cyc.step(s.v, 2), cyc.step(s.v, -2)
    checked = 0
    bad = []
    for i, j, a, c in _chords(s, 1, -1):
        checked += 1
        am, cp = cyc.pred(a), cyc.succ(c)
        for k in range(i + 1, j):
            for x in (cyc.pred(order[k - 1]), cyc.succ(order[k - 1])):
                for w in (am, cp):
                    if g.has_edge(x, w):
                        bad.append({"part": 1, "a": a, "c": c, "x": x, "w": w})
        if cyc.gap(a, c) >= 2:
            for x in cyc.segment(cyc.succ(a), cyc.pred(c)):
                xp, xm = cyc.succ(x), cyc.pred(x)
                if am != vp and g.has_edge(x, vp2):
                    for w in (xp, xm):
                        if g.has_edge(w, vp):
                            bad.append({"part": 2, "a": a, "c": c, "x": x, "w": w, "end": vp})
                if cp != vm and g.has_edge(x, vm2):
                    for w in (xp, xm):
                        if g.has_edge(w, vm):
                            bad.append({"part": 2, "a": a, "c": c, "x": x, "w": w, "end": vm})
    return Outcome(checked, bad)


def check_common_neighbor(s: Setup) -> Outcome:
    """a = b_i+, c = b_j-, ac an edge, x in N(u) & N(v) on a+ -> C -> c-:
    none of x+v+, x+v-, x-v+, x-v- is an edge."""
    g, cyc = s.graph, s.cycle
    common = s.Nu & s.Nv
    vp, vm = cyc.succ(s.v), cyc.pred(s.v)
    checked = 0
    bad = []
    for _, _, a, c in _chords(s, 1, -1):
        if cyc.gap(a, c) < 2:
            continue
        for x in cyc.segment(cyc.succ(a), cyc.pred(c)):
            if not common >> x & 1:
                continue
            checked += 1
            for w in (cyc.succ(x), cyc.pred(x)):
                for end in (vp, vm):
                    if g.has_edge(w, end):
                        bad.append({"a": a, "c": c, "x": x, "w": w, "end": end})
    return Outcome(checked, bad)


def check_reverse_chord(s: Setup) -> Outcome:
    """a = b_p-, c = b_q+, ac an edge: b_p, b_q both in N(u)-N(v) or both in
    N(v)-N(u), and neither is adjacent to v+2 or v-2."""
    g, cyc = s.graph, s.cycle
    order = s.B
    nu, nv = s.Nu, s.Nv
    ends = (cyc.step(s.v, 2), cyc.step(s.v, -2))
    checked = 0
    bad = []
    for p, q, a, c in _chords(s, -1, 1):
        checked += 1
        bp, bq = order[p - 1], order[q - 1]
        only_u = nu & ~nv
        only_v = nv & ~nu
        if not ((only_u >> bp & 1 and only_u >> bq & 1) or (only_v >> bp & 1 and only_v >> bq & 1)):
            bad.append({"part": 1, "a": a, "c": c, "b_p": bp, "b_q": bq})
        for b in (bp, bq):
            for e in ends:
                if g.has_edge(b, e):
                    bad.append({"part": 2, "a": a, "c": c, "b": b, "w": e})
    return Outcome(checked, bad)


def check_three_intervals(s: Setup) -> Outcome:
    """Two inner-connected 3-intervals with inner x1 x1+ and x2 x2+:
    exactly one of x1 x2+ and x1+ x2 is an edge."""
    g = s.graph
    threes = [iv for iv in s.decomposition.intervals if iv.length == 3]
    checked = 0
    bad = []
    for a in range(len(threes)):
        for b in range(a + 1, len(threes)):
            p, q = threes[a], threes[b]
            if not inner_connected(s, p, q):
                continue
            checked += 1
            x1, x1p = p.inner
            x2, x2p = q.inner
            if g.has_edge(x1, x2p) + g.has_edge(x1p, x2) != 1:
                bad.append({"first": [x1, x1p], "second": [x2, x2p]})
    return Outcome(checked, bad)


def check_relocation(s: Setup, local: Optional[Callable[[Setup], bool]] = None) -> Outcome:
    """With every interval of length 2 or 3, moving v to any admissible v0
    keeps B; a setup with four good 2-intervals passes that on to the new one.

    ``local``, when given, must accept the relocated setup for the pair to
    count; the argument for B equality uses the same facts at both setups.
    """
    if any(k not in (2, 3) for k in s.decomposition.lengths):
        return Outcome(0, [])
    c = s.cycle
    checked = 0
    bad = []
    for v0 in c.vertices:
        if v0 == s.v:
            continue
        ends = bit(c.succ(v0)) | bit(c.pred(v0))
        if s.Nu & ends != ends and s.Nv & ends != ends:
            continue
        new, part = relocated_setup(s, v0)
        if local is not None and not local(new):
            continue
        checked += 1
        if new.B_mask != s.B_mask:
            bad.append({"v0": v0, "part": part, "B": members(s.B_mask),
                        "new_B": members(new.B_mask)})
        elif s.s3_satisfied and not new.s3_satisfied:
            bad.append({"v0": v0, "good_2_intervals": new.decomposition.good_count})
    return Outcome(checked, bad)


def shift_independent(s: Setup) -> bool:
    """B on the cycle, and B+ and B- each independent together with V(G-C)."""
    if s.B_mask & ~s.cycle.mask:
        return False
    return not check_shift_independence(s).violations


def check_hopping(g: Graph, c: OrientedCycle, u: int) -> Outcome:
    """Conclusions (a)-(d) at (G, C, u); hypotheses are the caller's job."""
    parts = hopping_parts(g, c, hopping_fixpoint(g, c, u))
    bad = [{"part": k, "witness": v.witness, "cycle": list(c.vertices), "u": u}
           for k, v in parts.items() if v.status == "fails"]
    return Outcome(1, bad)

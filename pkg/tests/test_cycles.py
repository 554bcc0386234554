import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tests.graphs import complete, corpus, cycle, k23
from tests.test_graph import graphs
from toughcycles.cycles import CycleError, OrientedCycle, cycle_step
from toughcycles.graph import Graph, mask_of, parse_graph6
from toughcycles.hopping import check_hopping_conclusions, hopping_fixpoint
from toughcycles.invariants import circumference, cycles_of_length
from toughcycles.setups import (
    BadPathWitness,
    LemmaViolation,
    Setup,
    SetupError,
    extend_cycle,
    find_bad_paths,
    find_setups,
    find_small_pairs,
    inner_connected,
    neighborhood_intervals,
    relocate_v,
    reverse_orientation,
    setups_on_cycle,
    swap_roles,
)

A1, A2, B1, B2, B3 = 0, 1, 2, 3, 4
K23_CYCLE = OrientedCycle((A1, B1, A2, B2))


def k23_setup() -> Setup:
    return Setup(k23(), K23_CYCLE, B3, B1)


def five_vertex():
    """v=0, a=1, b=2, c=3, u=4 with C = (v, a, b, c) one short of hamiltonian."""
    g = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (4, 1), (4, 3)])
    return Setup(g, OrientedCycle((0, 1, 2, 3)), 4, 0)


class TestOrientedCycle:
    def test_step(self):
        c = OrientedCycle((0, 1, 2, 3))
        assert cycle_step(c, 1, 1) == 2
        assert cycle_step(c, 0, -1) == 3

    @given(st.integers(3, 12), st.integers(-30, 30), st.data())
    def test_step_inverse(self, k, offset, data):
        c = OrientedCycle(tuple(range(k)))
        x = data.draw(st.integers(0, k - 1))
        assert c.step(c.step(x, offset), -offset) == x

    def test_off_cycle(self):
        with pytest.raises(CycleError):
            OrientedCycle((0, 1, 2)).step(5, 1)

    @pytest.mark.parametrize("verts", [(0, 1), (0, 1, 0)])
    def test_rejects_degenerate(self, verts):
        with pytest.raises(CycleError):
            OrientedCycle(verts)

    def test_canonical_key_ignores_rotation_and_reflection(self):
        keys = {OrientedCycle((3, 0, 2, 1)).canonical_key(),
                OrientedCycle((1, 2, 0, 3)).canonical_key(),
                OrientedCycle((0, 2, 1, 3)).canonical_key()}
        assert keys == {(0, 2, 1, 3)}


class TestK23Setup:
    def test_B(self):
        s = k23_setup()
        assert s.B == (A2, A1)
        assert s.b(1) == K23_CYCLE.succ(B1) and s.b(s.m) == K23_CYCLE.pred(B1)
        assert s.Bplus == mask_of([B1, B2])
        assert not s.B_mask & s.Bplus

    def test_intervals(self):
        d = k23_setup().decomposition
        assert [(iv.start, iv.end, iv.length, iv.inner) for iv in d.intervals] == [
            (A2, A1, 2, (B2,)), (A1, A2, 2, (B1,))]
        assert all(iv.good for iv in d.intervals)
        assert sum(d.lengths) == 4
        nu = neighborhood_intervals(k23(), K23_CYCLE, B3)
        assert sum(1 for iv in nu.intervals if iv.length == 2) == 2

    def test_inner_connected(self):
        s = k23_setup()
        p, q = s.decomposition.intervals
        assert not inner_connected(s, p, q)

    def test_reverse(self):
        s = k23_setup()
        r = reverse_orientation(s)
        assert r.Bminus == s.Bplus == mask_of([B1, B2])
        assert r.B_mask == s.B_mask
        assert reverse_orientation(r).cycle == s.cycle

    def test_swap(self):
        s = k23_setup()
        t = swap_roles(s)
        assert t.cycle.vertices == (B3, A2, B2, A1)
        assert (t.u, t.v) == (B1, B3)
        assert t.B_mask == s.B_mask
        assert len(t.cycle) == len(s.cycle)
        back = swap_roles(t)
        assert (back.u, back.v) == (s.u, s.v)

    def test_relocate(self):
        s = relocate_v(k23_setup(), B2)
        assert (s.u, s.v, s.cycle) == (B3, B2, K23_CYCLE)
        assert s.B_mask == mask_of([A1, A2])

    def test_relocate_to_itself_refused(self):
        with pytest.raises(SetupError):
            relocate_v(k23_setup(), B1)

    def test_relocate_refuses_long_interval(self):
        # C8 plus u adjacent to 1 and 7: the B-intervals have lengths 2 and 6
        g = Graph.from_edges(9, [(i, (i + 1) % 8) for i in range(8)] + [(8, 1), (8, 7)])
        s = Setup(g, OrientedCycle(tuple(range(8))), 8, 0)
        assert max(s.decomposition.lengths) > 3
        with pytest.raises(SetupError):
            relocate_v(s, 4)

    def test_small_pairs_and_bad_paths(self):
        s = k23_setup()
        assert find_small_pairs(s) == []
        assert find_bad_paths(s) == []


class TestFindSetups:
    def test_k23(self):
        found = find_setups(k23())
        assert found
        for s in found:
            assert s.u in (B1, B2, B3) and s.v in (B1, B2, B3) and s.u != s.v
            assert s.B_mask == mask_of([A1, A2])

    def test_k23_require_s3(self):
        assert find_setups(k23(), require_s3=True) == []

    def test_hamiltonian(self):
        assert find_setups(cycle(6)) == []

    def test_setup_validation(self):
        with pytest.raises(SetupError):
            Setup(k23(), K23_CYCLE, A1, B1)
        with pytest.raises(SetupError):
            Setup(k23(), K23_CYCLE, B3, B3)

    def test_B_off_cycle_reported(self):
        # triangle 0-1-2 with pendant path: u=3 sees 1 and 2 and also 4 off the cycle
        g = Graph.from_edges(5, [(0, 1), (1, 2), (2, 0), (3, 1), (3, 2), (3, 4)])
        s = Setup(g, OrientedCycle((0, 1, 2)), 3, 0)
        with pytest.raises(LemmaViolation) as info:
            s.B
        assert info.value.lemma == "l3"


class TestBadPathsAndExtension:
    def test_five_vertex_witness(self):
        s = five_vertex()
        assert s.B == (1, 2, 3)
        found = find_bad_paths(s)
        assert BadPathWitness("i", 2, 1, (1,), 2, degenerate=True) in found

    def test_five_vertex_extension(self):
        s = five_vertex()
        w = BadPathWitness("i", 2, 1, (1,), 2, degenerate=True)
        out = extend_cycle(s, w)
        assert out.canonical_key() == OrientedCycle((1, 4, 3, 2, 0)).canonical_key()
        assert out.is_valid_in(s.graph) and len(out) == 5
        assert out.mask == s.cycle.mask | 1 << s.u

    @pytest.mark.parametrize("n", [5, 6, 7])
    def test_every_witness_extends(self, n):
        seen = 0
        for text in corpus(n):
            g = parse_graph6(text)
            for k in range(3, n):
                for c in cycles_of_length(g, k):
                    for oriented in (c, c.reversed()):
                        for s in setups_on_cycle(g, oriented):
                            if s.B_mask & ~oriented.mask:
                                continue
                            for w in find_bad_paths(s):
                                out = extend_cycle(s, w)
                                assert out.is_valid_in(g)
                                assert out.mask == oriented.mask | 1 << s.u
                                seen += 1
        assert seen > 0

    def test_longest_cycles_have_no_bad_paths(self, small_corpus):
        for text in small_corpus[:2000]:
            g = parse_graph6(text)
            for s in find_setups(g):
                assert find_bad_paths(s) == []


class TestSetupProperties:
    @settings(max_examples=150, deadline=None)
    @given(graphs(min_n=4, max_n=9))
    def test_tiling_and_role_changes(self, g):
        c_len, c = circumference(g)
        if not c_len or c_len == g.n:
            return
        for oriented in (c, c.reversed()):
            for s in setups_on_cycle(g, oriented):
                if s.B_mask & ~oriented.mask:
                    continue
                d = s.decomposition
                assert sum(d.lengths) == len(oriented)
                covered = []
                for iv in d.intervals:
                    covered += [iv.start, *iv.inner]
                    assert len(iv.inner) == iv.length - 1
                assert sorted(covered) == sorted(oriented.vertices)
                assert reverse_orientation(s).B_mask == s.B_mask
                assert swap_roles(s).B_mask == s.B_mask


class TestHopping:
    def test_k23(self):
        h = hopping_fixpoint(k23(), K23_CYCLE, B3)
        assert h.X == mask_of([A1, A2])
        assert h.Y == mask_of([B1, B2])
        assert h.iterations == 2
        assert h.trace[0][0] == k23().adj[B3]
        parts = check_hopping_conclusions(k23(), K23_CYCLE, B3, h)
        assert {k: p.status for k, p in parts.items()} == dict.fromkeys("abcd", "holds")

    def test_preconditions(self):
        with pytest.raises(ValueError):
            hopping_fixpoint(k23(), K23_CYCLE, A1)
        g = Graph.from_edges(5, [(0, 1), (1, 2), (2, 0), (3, 0), (3, 4)])
        with pytest.raises(ValueError):
            hopping_fixpoint(g, OrientedCycle((0, 1, 2)), 3)

    def test_longer_cycle_skips(self):
        # K4 minus nothing: a triangle leaves one vertex off, but a 4-cycle exists
        parts = check_hopping_conclusions(complete(4), OrientedCycle((0, 1, 2)), 3)
        assert {p.status for p in parts.values()} == {"skipped"}

    def test_many_longer_cycles(self):
        # K4 has three 4-cycles; the existence probe must not trip its own cap
        from toughcycles.hopping import hopping_hypotheses

        reason = hopping_hypotheses(complete(4), OrientedCycle((0, 1, 2)), 3)
        assert reason == "a cycle of length 4 exists"

    @settings(max_examples=150, deadline=None)
    @given(graphs(min_n=4, max_n=10))
    def test_monotone_and_idempotent(self, g):
        c_len, c = circumference(g)
        if not c_len:
            return
        off = g.vertex_mask & ~c.mask
        for u in range(g.n):
            if not off >> u & 1 or g.adj[u] & off:
                continue
            h = hopping_fixpoint(g, c, u)
            for (x0, y0), (x1, y1) in zip(h.trace, h.trace[1:]):
                assert x0 & ~x1 == 0 and y0 & ~y1 == 0
            assert h.iterations <= g.n + 1
            again = g.neighborhood(h.Y | 1 << u)
            assert again == h.X

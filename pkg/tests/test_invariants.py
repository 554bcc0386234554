import pytest
from hypothesis import given, settings

from tests.graphs import complete, corpus, cycle, k23, path, petersen, star, triangles_bridged
from tests.test_graph import graphs
from toughcycles import oracles
from toughcycles.cycles import OrientedCycle
from toughcycles.graph import Graph, mask_of, parse_graph6
from toughcycles.invariants import (
    circumference,
    components_after_removal,
    compute_invariants,
    enumerate_longest_cycles,
    independence_number,
    is_dominating_cycle,
    is_one_tough,
    max_independent_set,
    mu_cycle,
    mu_graph,
    nc2,
    sigma3,
)


class TestAlpha:
    @pytest.mark.parametrize("g, expected", [(complete(4), 1), (cycle(5), 2), (petersen(), 4)])
    def test_examples(self, g, expected):
        assert independence_number(g) == expected == oracles.alpha_bruteforce(g)

    def test_witness_is_independent(self):
        s = max_independent_set(petersen())
        assert petersen().is_independent(s) and s.bit_count() == 4


class TestSigma3:
    def test_complete_uses_otherwise_branch(self):
        assert sigma3(complete(4)) == 9

    def test_c6(self):
        assert sigma3(cycle(6)) == 6 == oracles.sigma3_bruteforce(cycle(6))

    def test_star(self):
        assert sigma3(star(3)) == 3 == oracles.sigma3_bruteforce(star(3))

    @given(graphs(min_n=3, max_n=10))
    def test_branches(self, g):
        a = independence_number(g)
        if a <= 2:
            assert sigma3(g) == 3 * (g.n - 1)
        else:
            assert sigma3(g) <= 3 * max(g.degrees())


class TestNC2:
    def test_complete(self):
        assert nc2(complete(5)) == 4

    def test_p3(self):
        assert nc2(path(3)) == 1 == oracles.nc2_bruteforce(path(3))

    def test_c6(self):
        assert nc2(cycle(6)) == 3 == oracles.nc2_bruteforce(cycle(6))

    def test_undefined_for_disjoint_cliques(self):
        g = Graph.from_edges(4, [(0, 1), (2, 3)])
        assert nc2(g) is None

    @pytest.mark.parametrize("n", range(2, 12))
    def test_complete_family(self, n):
        assert nc2(complete(n)) == n - 1


class TestToughness:
    def test_complete(self):
        assert is_one_tough(complete(4)).one_tough

    def test_c5(self):
        assert is_one_tough(cycle(5)).one_tough
        assert oracles.tough_bruteforce(cycle(5)) is None

    def test_k23_cut(self):
        result = is_one_tough(k23())
        assert not result.one_tough
        assert result.cut == (0, 1)
        assert oracles.tough_bruteforce(k23()) == (0, 1)

    @settings(max_examples=150)
    @given(graphs(min_n=1, max_n=9))
    def test_cut_is_minimum_and_violating(self, g):
        result = is_one_tough(g)
        naive = oracles.tough_bruteforce(g)
        assert result.one_tough == (naive is None)
        if naive is not None:
            assert len(result.cut) == len(naive)
            assert components_after_removal(g, mask_of(result.cut)) > len(result.cut)


class TestCircumference:
    @pytest.mark.parametrize("n", [3, 4, 7, 12])
    def test_cycle(self, n):
        assert circumference(cycle(n))[0] == n

    def test_k23(self):
        assert circumference(k23())[0] == 4 == oracles.circumference_dp(k23())

    def test_petersen(self):
        c, witness = circumference(petersen())
        assert c == 9 == oracles.circumference_dp(petersen())
        assert witness.is_valid_in(petersen())

    def test_forest(self):
        assert circumference(path(5)) == (0, None)

    @settings(max_examples=150)
    @given(graphs(min_n=1, max_n=9))
    def test_witness_and_oracle(self, g):
        c, witness = circumference(g)
        assert c == oracles.circumference_dp(g)
        if c:
            assert len(witness) == c and witness.is_valid_in(g)


class TestLongestCycles:
    def test_c5(self):
        assert len(enumerate_longest_cycles(cycle(5))) == 1

    def test_k4(self):
        found = enumerate_longest_cycles(complete(4))
        assert len(found) == 3
        assert {c.canonical_key() for c in found} == oracles.cycles_bruteforce(complete(4), 4)

    def test_k23(self):
        found = enumerate_longest_cycles(k23())
        assert len(found) == 3
        assert {c.canonical_key() for c in found} == oracles.cycles_bruteforce(k23(), 4)

    @settings(max_examples=100)
    @given(graphs(min_n=3, max_n=8))
    def test_matches_bruteforce(self, g):
        found = enumerate_longest_cycles(g)
        keys = [c.canonical_key() for c in found]
        assert len(keys) == len(set(keys))
        if found:
            assert set(keys) == oracles.cycles_bruteforce(g, len(found[0]))


class TestDominationAndMu:
    def test_hamiltonian_cycle_dominates(self):
        assert is_dominating_cycle(cycle(6), OrientedCycle(tuple(range(6))))

    def test_k23_four_cycle(self):
        c = OrientedCycle((0, 2, 1, 3))
        assert is_dominating_cycle(k23(), c)
        assert mu_cycle(k23(), c) == 2

    def test_bridged_triangles(self):
        assert not is_dominating_cycle(triangles_bridged(), OrientedCycle((0, 1, 2)))

    def test_petersen(self):
        for c in enumerate_longest_cycles(petersen()):
            assert mu_cycle(petersen(), c) == 3
        assert mu_graph(petersen()) == 3

    def test_k23_graph(self):
        assert mu_graph(k23()) == 2

    def test_hamiltonian_undefined(self):
        assert mu_cycle(cycle(6), OrientedCycle(tuple(range(6)))) is None
        assert mu_graph(cycle(6)) is None


class TestBundle:
    def test_c6(self):
        b = compute_invariants(cycle(6))
        assert (b.n, b.alpha, b.sigma3, b.nc2, b.circumference) == (6, 3, 6, 3, 6)
        assert b.is_one_tough and b.is_hamiltonian and b.mu_graph is None

    @pytest.mark.parametrize("n", range(3, 8))
    def test_oracle_equivalence(self, n):
        for text in corpus(n):
            g = parse_graph6(text)
            b = compute_invariants(g, with_mu=False)
            assert b.alpha == oracles.alpha_bruteforce(g), text
            assert b.sigma3 == oracles.sigma3_bruteforce(g), text
            assert b.nc2 == oracles.nc2_bruteforce(g), text
            assert b.is_one_tough == (oracles.tough_bruteforce(g) is None), text
            assert b.circumference == oracles.circumference_dp(g), text

    @given(graphs(min_n=3, max_n=10))
    def test_bundle_contract(self, g):
        b = compute_invariants(g)
        assert 1 <= b.alpha <= b.n
        assert b.is_hamiltonian == (b.circumference == b.n)
        if b.circumference:
            assert 3 <= b.circumference <= b.n
        if b.nc2 is not None:
            assert b.nc2 <= b.n - 1
        assert b.sigma3 <= 3 * (b.n - 1)

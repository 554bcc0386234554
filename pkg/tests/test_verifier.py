import time

import pytest
from hypothesis import given, settings

from tests.graphs import complete, corpus, cycle, k23, path, petersen
from tests.test_graph import graphs
from toughcycles import verifier
from toughcycles.graph import Graph, write_graph6
from toughcycles.verifier import (
    ORACLE_IDS,
    FastPathMismatch,
    analyze,
    bound_rhs,
    check_bound,
    check_hypothesis,
    run_lemma_oracles,
    scan_corpus,
    scan_one,
    summarize,
)


class TestHypothesis:
    def test_c6_passes(self):
        h = check_hypothesis(cycle(6))
        assert h.one_tough and h.sigma3_ok and h.n_ok and h.passes

    def test_petersen_fails_on_sigma3(self):
        h = check_hypothesis(petersen())
        assert h.one_tough and not h.sigma3_ok and not h.passes

    def test_p4_fails_on_toughness(self):
        h = check_hypothesis(path(4))
        assert not h.one_tough and h.sigma3_ok and not h.passes

    def test_small_n(self):
        assert not check_hypothesis(complete(2)).passes


class TestBound:
    def test_c6_offset4(self):
        v = check_bound(cycle(6), 4)
        assert (v.status, v.c, v.nc2, v.rhs) == ("holds", 6, 3, 6)

    def test_k5_offset4(self):
        v = check_bound(complete(5), 4)
        assert v.status == "holds" and v.c == 5 == v.rhs

    @pytest.mark.parametrize("offset", [0, 2, 4])
    def test_petersen(self, offset):
        assert check_bound(petersen(), offset).status == "hypothesis-not-met"

    def test_nc2_undefined_takes_precedence(self):
        g = Graph.from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
        assert check_bound(g, 0).status == "nc2-undefined"

    def test_rhs(self):
        assert bound_rhs(10, 3, 0) == 6
        assert bound_rhs(10, 3, 4) == 10
        assert bound_rhs(10, None, 2) is None
        with pytest.raises(ValueError):
            bound_rhs(10, 3, 1)

    def test_short_circuit_leaves_fields_unset(self):
        a = analyze(star_k13 := Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)]))
        assert a.sigma3 < star_k13.n
        assert a.one_tough is None and a.circumference is None
        full = analyze(star_k13, full=True)
        assert full.one_tough is False and full.circumference == 0

    @settings(max_examples=100, deadline=None)
    @given(graphs(min_n=3, max_n=9))
    def test_status_contract_and_offset_monotonicity(self, g):
        a = analyze(g, full=True)
        statuses = [v.status for v in a.verdicts]
        for v in a.verdicts:
            if v.status == "holds":
                assert a.hypothesis and v.c >= v.rhs
            if v.status == "hypothesis-not-met":
                assert not a.hypothesis
        # a larger offset can only make the bound harder
        if statuses[-1] == "holds":
            assert statuses == ["holds"] * 3
        if a.nc2 is not None:
            rhs = [v.rhs for v in a.verdicts]
            assert rhs == sorted(rhs)


class TestDoubleCheck:
    def test_fast_path_lie_is_caught(self, monkeypatch):
        monkeypatch.setattr(verifier, "circumference", lambda g: (3, None))
        with pytest.raises(FastPathMismatch):
            analyze(cycle(6))

    def test_confirmed_counterexample_is_emitted(self, monkeypatch):
        monkeypatch.setattr(verifier, "circumference", lambda g: (3, None))
        monkeypatch.setattr(verifier, "confirm_counterexample", lambda g, o: True)
        a = analyze(cycle(6), offsets=(4,))
        assert a.verdicts[0].status == "counterexample"

    def test_naive_recheck_rejects_non_tough(self):
        assert not verifier.confirm_counterexample(k23(), 4)
        assert not verifier.confirm_counterexample(cycle(6), 4)


class TestOracleSuite:
    def test_c6(self):
        r = run_lemma_oracles(cycle(6))
        assert r.get("L1").status == "holds" and r.get("L1").instances_checked == 1
        for e in r.entries:
            if e.oracle_id != "L1":
                assert e.status == "vacuous", (e.oracle_id, e.mode)

    def test_k23(self):
        r = run_lemma_oracles(k23())
        for oid in ORACLE_IDS:
            if oid != "HOP":
                assert r.get(oid).status == "skipped"
        hop = r.get("HOP")
        assert hop.status == "holds" and hop.instances_checked >= 1
        assert not r.failures

    def test_entry_order_and_json(self):
        r = run_lemma_oracles(k23())
        ids = [(e.oracle_id, e.mode) for e in r.entries]
        assert ids[:len(ORACLE_IDS)] == [(oid, "strict") for oid in ORACLE_IDS]
        assert all(mode == "relaxed" for _, mode in ids[len(ORACLE_IDS):])
        assert set(r.to_json()[0]) == {"id", "mode", "status", "checked", "witness", "reason"}

    def test_acyclic(self):
        r = run_lemma_oracles(path(5))
        assert {e.status for e in r.entries} <= {"vacuous", "skipped"}
        assert r.get("L3", "relaxed").status == "vacuous"

    def test_budget(self):
        r = run_lemma_oracles(petersen(), budget=1)
        assert r.get("L3", "relaxed").status == "skipped"

    def test_failure_carries_witness(self, monkeypatch):
        from toughcycles import lemmas

        def always(s):
            return lemmas.Outcome(1, [{"planted": True}])

        spec = verifier.SETUP_ORACLES[0]
        monkeypatch.setattr(verifier, "SETUP_ORACLES",
                            (verifier.SetupOracle(spec.oracle_id, always),)
                            + verifier.SETUP_ORACLES[1:])
        r = run_lemma_oracles(k23())
        e = r.get("L3", "relaxed")
        assert e.status == "fails"
        assert e.witness["graph"] == write_graph6(k23())
        assert e.witness["violation"] == {"planted": True}
        assert "setup" in e.witness

    @pytest.mark.parametrize("n", [4, 5, 6, 7])
    def test_no_failures(self, n):
        for text in corpus(n):
            a = analyze(verifier.parse_graph6(text), with_oracles=True)
            assert not a.oracles.failures, (text, [e.to_json() for e in a.oracles.failures])


class TestScan:
    def test_n6_offset4(self):
        items = scan_corpus(corpus(6), offsets=(4,))
        s = summarize(items)
        assert s.total == 112 and s.counterexamples == 0 and s.exit_code == 0
        assert [it.key for it in items] == sorted(it.key for it in items)

    def test_malformed_line_is_a_warning(self):
        items = scan_corpus(["Bw", "B!", "", "C~"])
        s = summarize(items)
        assert s.total == 2 and s.warnings == 1

    def test_parallel_matches_serial(self):
        lines = corpus(6)
        serial = scan_corpus(lines, jobs=1)
        parallel = scan_corpus(lines, jobs=2)
        assert [(i.key, i.analysis) for i in serial] == [(i.key, i.analysis) for i in parallel]

    def test_timeout(self, monkeypatch):
        def slow(*args):
            time.sleep(1)

        monkeypatch.setattr(verifier, "analyze", slow)
        item = scan_one("Bw", 1, (0, 4), False, timeout_ms=20, budget=None)
        assert item.analysis.error == "timeout"
        assert {v.status for v in item.analysis.verdicts} == {"skipped"}
        assert summarize([item]).timeouts == 1

    def test_hamiltonian_counts(self):
        s = summarize(scan_corpus(corpus(5)))
        assert s.hypothesis_passing == s.hamiltonian_under_hypothesis
        assert s.non_hamiltonian_under_hypothesis == 0

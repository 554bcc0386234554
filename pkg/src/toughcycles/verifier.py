"""Hypothesis gate, bound checks, the structural oracle suite and corpus scans."""

from __future__ import annotations

import signal
import threading
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Optional

from toughcycles import lemmas
from toughcycles import oracles as naive
from toughcycles.cycles import OrientedCycle
from toughcycles.graph import Graph, GraphFormatError, members, parse_graph6, write_graph6
from toughcycles.invariants import (
    TooManyCycles,
    circumference,
    components_after_removal,
    cycles_of_length,
    enumerate_longest_cycles,
    independence_number,
    is_dominating_cycle,
    is_one_tough,
    mu_cycle,
    nc2,
    sigma3,
)
from toughcycles.setups import Setup, neighborhood_intervals, setups_on_cycle

OFFSETS = (0, 2, 4)
DEFAULT_BUDGET = 20000
DEFAULT_TIMEOUT_MS = 10_000


# hypothesis and bound -------------------------------------------------------------

@dataclass(frozen=True)
class HypothesisResult:
    one_tough: bool
    sigma3_ok: bool
    n_ok: bool

    @property
    def passes(self) -> bool:
        return self.one_tough and self.sigma3_ok and self.n_ok


def check_hypothesis(g: Graph) -> HypothesisResult:
    alpha = independence_number(g)
    return HypothesisResult(
        one_tough=is_one_tough(g, alpha).one_tough,
        sigma3_ok=sigma3(g, alpha) >= g.n,
        n_ok=g.n >= 3,
    )


@dataclass(frozen=True)
class Verdict:
    graph_id: str
    bound_offset: int
    n: int
    c: Optional[int]
    nc2: Optional[int]
    rhs: Optional[int]
    status: str  # holds | counterexample | hypothesis-not-met | nc2-undefined | skipped


class FastPathMismatch(RuntimeError):
    """The fast invariants claimed a counterexample that the naive oracles reject."""


def bound_rhs(n: int, nc2_value: Optional[int], offset: int) -> Optional[int]:
    if offset not in OFFSETS:
        raise ValueError(f"offset must be one of {OFFSETS}, got {offset}")
    if nc2_value is None:
        return None
    return min(n, 2 * nc2_value + offset)


def confirm_counterexample(g: Graph, offset: int) -> bool:
    """Recompute everything a counterexample rests on with the brute-force oracles."""
    if g.n < 3 or naive.tough_bruteforce(g) is not None:
        return False
    if naive.sigma3_bruteforce(g) < g.n:
        return False
    value = naive.nc2_bruteforce(g)
    if value is None:
        return False
    return naive.circumference_dp(g) < min(g.n, 2 * value + offset)


@dataclass
class Analysis:
    """Everything one report record says about a graph."""

    graph: str
    n: int
    alpha: int
    sigma3: int
    nc2: Optional[int]
    circumference: Optional[int]
    one_tough: Optional[bool]
    hypothesis: bool
    verdicts: list[Verdict] = field(default_factory=list)
    oracles: Optional["OracleReport"] = None
    error: Optional[str] = None


def analyze(g: Graph, offsets: Iterable[int] = OFFSETS, with_oracles: bool = False,
            full: bool = False, budget: Optional[int] = DEFAULT_BUDGET) -> Analysis:
    """Invariants and verdicts for ``g``.

    Filters run cheapest first: sigma3, then 1-toughness, then circumference.
    With ``full`` every invariant is computed even when an earlier filter fails.
    """
    gid = write_graph6(g)
    alpha = independence_number(g)
    s3 = sigma3(g, alpha)
    nc2_value = nc2(g)
    n_ok = g.n >= 3
    tough = None
    if full or (n_ok and s3 >= g.n):
        tough = is_one_tough(g, alpha).one_tough
    passes = bool(n_ok and s3 >= g.n and tough)
    c = circumference(g)[0] if (full or passes or with_oracles) else None
    out = Analysis(gid, g.n, alpha, s3, nc2_value, c, tough, passes)
    for offset in sorted(set(offsets)):
        rhs = bound_rhs(g.n, nc2_value, offset)
        if nc2_value is None:
            status = "nc2-undefined"
        elif not passes:
            status = "hypothesis-not-met"
        elif c >= rhs:
            status = "holds"
        elif confirm_counterexample(g, offset):
            status = "counterexample"
        else:
            raise FastPathMismatch(f"{gid}: fast path reports c={c} < {rhs}, oracles disagree")
        out.verdicts.append(Verdict(gid, offset, g.n, c, nc2_value, rhs, status))
    if with_oracles:
        out.oracles = run_lemma_oracles(g, budget)
    return out


def check_bound(g: Graph, offset: int) -> Verdict:
    return analyze(g, (offset,)).verdicts[0]


# oracle suite ---------------------------------------------------------------------

@dataclass
class OracleEntry:
    oracle_id: str
    mode: str  # strict | relaxed
    status: str = "vacuous"  # holds | fails | vacuous | skipped
    instances_checked: int = 0
    witness: Optional[dict] = None
    reason: Optional[str] = None

    def record(self, outcome: lemmas.Outcome, context: dict) -> None:
        self.instances_checked += outcome.checked
        if outcome.violations and self.witness is None:
            self.witness = {**context, "violation": outcome.violations[0]}

    def finish(self) -> None:
        if self.status == "skipped":
            return
        if self.witness is not None:
            self.status = "fails"
        elif self.instances_checked:
            self.status = "holds"
        else:
            self.status = "vacuous"

    def to_json(self) -> dict:
        return {"id": self.oracle_id, "mode": self.mode, "status": self.status,
                "checked": self.instances_checked, "witness": self.witness,
                "reason": self.reason}


@dataclass
class OracleReport:
    graph: str
    entries: list[OracleEntry]

    def get(self, oracle_id: str, mode: str = "strict") -> OracleEntry:
        return next(e for e in self.entries if e.oracle_id == oracle_id and e.mode == mode)

    @property
    def failures(self) -> list[OracleEntry]:
        return [e for e in self.entries if e.status == "fails"]

    def to_json(self) -> list[dict]:
        return [e.to_json() for e in self.entries]


@dataclass(frozen=True)
class SetupOracle:
    """One per-setup statement and the local gate it keeps in relaxed mode.

    Relaxed gates: "" (longest cycle only), "tough-dominating" (G 1-tough and C
    dominating), "shift-independent" (B+ and B- with V(G-C) independent at this
    setup, and for relocation also at the relocated one), "tough-shift-independent"
    (both), "hopping" (the hopping hypotheses hold at (G, C, u)).
    """

    oracle_id: str
    check: Callable[..., lemmas.Outcome]
    relaxed_gate: str = ""


SETUP_ORACLES = (
    SetupOracle("L3", lemmas.check_disjoint_shifts),
    SetupOracle("L5C", lemmas.check_shift_independence, "tough-dominating"),
    SetupOracle("RMK3", lemmas.check_short_interval_isolation, "shift-independent"),
    SetupOracle("L7", lemmas.check_long_intervals, "tough-shift-independent"),
    SetupOracle("SMALL", lemmas.check_small_pairs),
    SetupOracle("ALPHA", lemmas.check_bad_paths),
    SetupOracle("CL1", lemmas.check_triangle_hop),
    SetupOracle("CL2", lemmas.check_chord_across, "hopping"),
    SetupOracle("CL3", lemmas.check_adjacent_pair, "hopping"),
    SetupOracle("L9", lemmas.check_chord_neighbors),
    SetupOracle("L10", lemmas.check_common_neighbor),
    SetupOracle("L12", lemmas.check_reverse_chord),
    SetupOracle("R1", lemmas.check_three_intervals, "shift-independent"),
    SetupOracle("INVA", lemmas.check_relocation, "tough-shift-independent"),
)
GRAPH_ORACLES = ("L1", "L2", "L4", "HOP")
ORACLE_IDS = ("L1", "L2", "L3", "L5C", "RMK3", "L4", "L7", "SMALL", "ALPHA", "HOP",
              "CL1", "CL2", "CL3", "L9", "L10", "L12", "R1", "INVA")


class _Budget(Exception):
    pass


def hopping_instances(g: Graph, limit: Optional[int]) -> Iterator[tuple[OrientedCycle, int]]:
    """Every (C, u) meeting the hopping hypotheses, one orientation per cycle."""
    by_length = {}
    for k in range(3, g.n + 1):
        by_length[k] = cycles_of_length(g, k, limit)
    for k in range(3, g.n + 1):
        cycles = by_length[k]
        if not cycles or by_length.get(k + 1):
            continue
        omegas = [components_after_removal(g, c.mask) for c in cycles]
        low = min(omegas)
        for c, w in zip(cycles, omegas):
            if w != low:
                continue
            off = g.vertex_mask & ~c.mask
            for u in members(off):
                if not g.adj[u] & off:
                    yield c, u


def run_lemma_oracles(g: Graph, budget: Optional[int] = DEFAULT_BUDGET) -> OracleReport:
    """Evaluate every structural statement on ``g`` in strict and relaxed modes.

    Strict mode needs the full hypothesis. Relaxed mode drops it and keeps only
    the local preconditions each statement's argument relies on (see
    ``SetupOracle``); it is meaningful on non-hamiltonian graphs only.
    ``budget`` caps cycle enumeration and the number of setups examined.
    """
    gid = write_graph6(g)
    entries = {}
    for oid in ORACLE_IDS:
        entries[(oid, "strict")] = OracleEntry(oid, "strict")
    for spec in SETUP_ORACLES:
        entries[(spec.oracle_id, "relaxed")] = OracleEntry(spec.oracle_id, "relaxed")

    def skip_all(mode_filter, reason):
        for (oid, mode), e in entries.items():
            if mode in mode_filter and e.status != "skipped":
                e.status = "skipped"
                e.reason = reason

    alpha = independence_number(g)
    s3 = sigma3(g, alpha)
    tough = is_one_tough(g, alpha).one_tough
    passes = tough and s3 >= g.n and g.n >= 3
    nc2_value = nc2(g)
    c_len, _ = circumference(g)
    hamiltonian = c_len == g.n

    # hopping: its hypotheses are its own, so it runs on every graph
    hop = entries[("HOP", "strict")]
    try:
        for c, u in hopping_instances(g, budget):
            hop.record(lemmas.check_hopping(g, c, u), {"graph": gid})
    except TooManyCycles:
        hop.status, hop.reason = "skipped", "cycle budget exhausted"

    if not passes:
        for (oid, mode), e in entries.items():
            if mode == "strict" and oid != "HOP":
                e.status, e.reason = "skipped", "hypothesis not met"
    if c_len == 0:
        return _finish(gid, entries)

    try:
        longest = enumerate_longest_cycles(g, budget)
    except TooManyCycles:
        skip_all(("strict", "relaxed"), "cycle budget exhausted")
        return _finish(gid, entries)

    if passes:
        l1 = entries[("L1", "strict")]
        for c in longest:
            l1.record(lemmas.check_dominating(g, c), {"graph": gid})
    if hamiltonian:
        return _finish(gid, entries)

    if passes:
        _graph_level_strict(g, gid, longest, s3, entries)

    omegas = [components_after_removal(g, c.mask) for c in longest]
    low = min(omegas)
    seen = 0
    try:
        for c, omega in zip(longest, omegas):
            dominating = is_dominating_cycle(g, c)
            for oriented in (c, c.reversed()):
                for s in setups_on_cycle(g, oriented):
                    seen += 1
                    if budget is not None and seen > budget:
                        raise _Budget
                    off_cycle = bool(s.B_mask & ~oriented.mask)
                    hop_ok = omega == low and not g.adj[s.u] & ~oriented.mask
                    ctx = {"graph": gid, "setup": s.describe()}
                    if passes:
                        _run_setup(s, "strict", entries, ctx, nc2_value, off_cycle)
                    if not off_cycle:
                        gates = {
                            "": True,
                            "tough-dominating": tough and dominating,
                            "hopping": hop_ok,
                        }
                        local = lemmas.shift_independent(s)
                        gates["shift-independent"] = local
                        gates["tough-shift-independent"] = tough and local
                        _run_setup(s, "relaxed", entries, ctx, nc2_value, False, gates)
    except _Budget:
        skip_all(("strict", "relaxed"), f"setup budget {budget} exhausted")
    return _finish(gid, entries)


def _run_setup(s: Setup, mode: str, entries: dict, ctx: dict, nc2_value: Optional[int],
               off_cycle: bool, gates: Optional[dict] = None) -> None:
    if off_cycle:
        # B leaving the cycle is itself a failure of the disjointness statement
        entries[("L3", mode)].record(lemmas.check_disjoint_shifts(s), ctx)
        return
    for spec in SETUP_ORACLES:
        if gates is not None and not gates[spec.relaxed_gate]:
            continue
        if spec.oracle_id == "SMALL":
            outcome = spec.check(s, nc2_value)
        elif spec.oracle_id == "INVA" and gates is not None:
            outcome = spec.check(s, lemmas.shift_independent)
        else:
            outcome = spec.check(s)
        entries[(spec.oracle_id, mode)].record(outcome, ctx)


def _graph_level_strict(g: Graph, gid: str, longest: list[OrientedCycle], s3: int,
                        entries: dict) -> None:
    """The two existential statements: some longest cycle has a heavy off-cycle
    vertex, and some longest cycle / vertex pair has many 2-intervals."""
    mus = [mu_cycle(g, c) for c in longest]
    l2 = entries[("L2", "strict")]
    l2.instances_checked = 1
    if not any(mu is not None and 3 * mu >= g.n for mu in mus):
        l2.witness = {"graph": gid, "max_mu": max(m for m in mus if m is not None)}
    mu_g = max(m for m in mus if m is not None)
    need = s3 - g.n + 4
    l4 = entries[("L4", "strict")]
    l4.instances_checked = 1
    best = None
    for c in longest:
        for u in members(g.vertex_mask & ~c.mask):
            if g.degree(u) != mu_g:
                continue
            s = neighborhood_intervals(g, c, u).count(2)
            best = s if best is None else max(best, s)
    if best is None or best < need:
        l4.witness = {"graph": gid, "best_s": best, "needed": need}


def _finish(gid: str, entries: dict) -> OracleReport:
    for e in entries.values():
        e.finish()
    order = {oid: i for i, oid in enumerate(ORACLE_IDS)}
    ordered = sorted(entries.values(), key=lambda e: (e.mode != "strict", order[e.oracle_id]))
    return OracleReport(gid, ordered)


# corpus scanning --------------------------------------------------------------------

class GraphTimeout(Exception):
    pass


def _with_timeout(timeout_ms: Optional[int], fn, *args):
    """Run ``fn`` under a wall-clock limit (main thread only; otherwise unlimited)."""
    if not timeout_ms or threading.current_thread() is not threading.main_thread():
        return fn(*args)

    def fire(signum, frame):
        raise GraphTimeout

    previous = signal.signal(signal.SIGALRM, fire)
    signal.setitimer(signal.ITIMER_REAL, timeout_ms / 1000)
    try:
        return fn(*args)
    finally:
        signal.setitimer(signal.ITIMER_REAL, 0)
        signal.signal(signal.SIGALRM, previous)


@dataclass
class ScanItem:
    """A graph6 line from the source, analyzed (or rejected)."""

    key: str
    line_no: int
    analysis: Optional[Analysis] = None
    connected: bool = False
    hamiltonian: Optional[bool] = None
    warning: Optional[str] = None
    elapsed_ms: Optional[float] = None


def scan_one(line: str, line_no: int, offsets: tuple[int, ...], with_oracles: bool,
             timeout_ms: Optional[int], budget: Optional[int], full: bool = False) -> ScanItem:
    text = line.strip()
    try:
        g = parse_graph6(text)
    except GraphFormatError as exc:
        return ScanItem(text, line_no, warning=f"line {line_no}: {exc}")
    key = write_graph6(g)
    item = ScanItem(key, line_no, connected=g.is_connected())
    start = time.perf_counter()
    try:
        item.analysis = _with_timeout(timeout_ms, analyze, g, offsets, with_oracles, full, budget)
    except GraphTimeout:
        item.warning = f"line {line_no}: {key} exceeded {timeout_ms} ms"
        item.analysis = _timed_out(g, key, offsets)
        return item
    finally:
        item.elapsed_ms = (time.perf_counter() - start) * 1000
    a = item.analysis
    if a.hypothesis:
        item.hamiltonian = a.circumference == g.n
    return item


def _timed_out(g: Graph, key: str, offsets) -> Analysis:
    alpha = independence_number(g)
    a = Analysis(key, g.n, alpha, sigma3(g, alpha), nc2(g), None, None, False)
    a.verdicts = [Verdict(key, o, g.n, None, a.nc2, bound_rhs(g.n, a.nc2, o), "skipped")
                  for o in sorted(set(offsets))]
    a.error = "timeout"
    return a


def _scan_task(args):
    return scan_one(*args)


def scan_corpus(lines: Iterable[str], offsets: Iterable[int] = OFFSETS,
                with_oracles: bool = False, jobs: int = 1,
                timeout_ms: Optional[int] = DEFAULT_TIMEOUT_MS,
                budget: Optional[int] = DEFAULT_BUDGET, full: bool = False) -> list[ScanItem]:
    """Analyze every graph6 line; results sorted by graph6 string.

    Blank lines are ignored. Malformed lines come back as items carrying a
    warning and no analysis.
    """
    offsets = tuple(sorted(set(offsets)))
    tasks = ((line, i + 1, offsets, with_oracles, timeout_ms, budget, full)
             for i, line in enumerate(lines) if line.strip())
    if jobs <= 1:
        items = [_scan_task(t) for t in tasks]
    else:
        import multiprocessing

        with multiprocessing.get_context("fork").Pool(jobs) as pool:
            items = list(pool.imap_unordered(_scan_task, tasks, chunksize=64))
    items.sort(key=lambda it: (it.key, it.line_no))
    return items


@dataclass
class ScanSummary:
    total: int = 0
    connected: int = 0
    hypothesis_passing: int = 0
    hamiltonian_under_hypothesis: int = 0
    non_hamiltonian_under_hypothesis: int = 0
    counterexamples: int = 0
    oracle_failures: int = 0
    warnings: int = 0
    timeouts: int = 0
    status_totals: dict = field(default_factory=dict)
    oracle_totals: dict = field(default_factory=dict)

    def add(self, item: ScanItem) -> None:
        if item.analysis is None:
            self.warnings += 1
            return
        a = item.analysis
        self.total += 1
        self.connected += item.connected
        if item.warning:
            self.warnings += 1
        if a.error == "timeout":
            self.timeouts += 1
        if a.hypothesis:
            self.hypothesis_passing += 1
            if item.hamiltonian:
                self.hamiltonian_under_hypothesis += 1
            else:
                self.non_hamiltonian_under_hypothesis += 1
        for v in a.verdicts:
            per = self.status_totals.setdefault(str(v.bound_offset), {})
            per[v.status] = per.get(v.status, 0) + 1
            if v.status == "counterexample":
                self.counterexamples += 1
        if a.oracles is not None:
            failed = False
            for e in a.oracles.entries:
                key = f"{e.oracle_id}/{e.mode}"
                slot = self.oracle_totals.setdefault(
                    key, {"holds": 0, "fails": 0, "vacuous": 0, "skipped": 0, "instances": 0})
                slot[e.status] += 1
                slot["instances"] += e.instances_checked
                failed |= e.status == "fails"
            self.oracle_failures += failed

    @property
    def exit_code(self) -> int:
        return 2 if self.counterexamples or self.oracle_failures else 0


def summarize(items: Iterable[ScanItem]) -> ScanSummary:
    summary = ScanSummary()
    for item in items:
        summary.add(item)
    return summary

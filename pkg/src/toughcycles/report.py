"""JSON-lines serialization of scan results with a fixed key order."""

from __future__ import annotations

import json
from typing import Iterable, Optional, TextIO

from toughcycles.verifier import Analysis, ScanItem, ScanSummary

RECORD_KEYS = ("graph", "n", "alpha", "sigma3", "nc2", "circumference", "one_tough",
               "hypothesis", "verdicts", "oracles", "elapsed_ms")


def record(a: Analysis, elapsed_ms: Optional[float] = None) -> dict:
    return {
        "graph": a.graph,
        "n": a.n,
        "alpha": a.alpha,
        "sigma3": a.sigma3,
        "nc2": a.nc2,
        "circumference": a.circumference,
        "one_tough": a.one_tough,
        "hypothesis": a.hypothesis,
        "verdicts": [{"offset": v.bound_offset, "rhs": v.rhs, "status": v.status}
                     for v in a.verdicts],
        "oracles": a.oracles.to_json() if a.oracles is not None else None,
        "elapsed_ms": elapsed_ms,
    }


def _sorted(d: dict) -> dict:
    return {k: (_sorted(v) if isinstance(v, dict) else v) for k, v in sorted(d.items())}


def summary_record(s: ScanSummary, messages: Iterable[str] = ()) -> dict:
    vacuous = {k: v["vacuous"] for k, v in sorted(s.oracle_totals.items()) if v["vacuous"]}
    return {"summary": {
        "total": s.total,
        "connected": s.connected,
        "hypothesis_passing": s.hypothesis_passing,
        "hamiltonian_under_hypothesis": s.hamiltonian_under_hypothesis,
        "non_hamiltonian_under_hypothesis": s.non_hamiltonian_under_hypothesis,
        "counterexamples": s.counterexamples,
        "oracle_failures": s.oracle_failures,
        "warnings": s.warnings,
        "timeouts": s.timeouts,
        "status_totals": _sorted(s.status_totals),
        "oracle_totals": _sorted(s.oracle_totals),
        "vacuity_counts": vacuous,
        "messages": list(messages),
    }}


def dumps(obj: dict) -> str:
    return json.dumps(obj, ensure_ascii=True)


def emit_report(items: list[ScanItem], out: TextIO, timing: bool = False) -> ScanSummary:
    """Write one line per analyzed graph, then the summary; returns the summary."""
    summary = ScanSummary()
    messages = []
    for item in items:
        summary.add(item)
        if item.warning:
            messages.append(item.warning)
        if item.analysis is not None:
            elapsed = round(item.elapsed_ms, 3) if timing and item.elapsed_ms is not None else None
            out.write(dumps(record(item.analysis, elapsed)) + "\n")
    out.write(dumps(summary_record(summary, messages)) + "\n")
    return summary

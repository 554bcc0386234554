import json
import os
import subprocess
import sys

import pytest

from toughcycles.cli import dispatch
from toughcycles.report import RECORD_KEYS

C6 = "6 0 1 1 2 2 3 3 4 4 5 5 0"


def run(capsys, *argv):
    code = dispatch(list(argv))
    out, err = capsys.readouterr()
    return code, [json.loads(line) for line in out.splitlines()], err


def test_invariants_c6(capsys):
    code, lines, _ = run(capsys, "invariants", "--edge-list", C6)
    assert code == 0 and len(lines) == 2
    rec = lines[0]
    assert list(rec) == list(RECORD_KEYS)
    assert (rec["alpha"], rec["sigma3"], rec["nc2"], rec["circumference"], rec["one_tough"]) == (
        3, 6, 3, 6, True)
    assert rec["oracles"] is None and rec["elapsed_ms"] is None
    assert lines[1]["summary"]["total"] == 1


def test_scan_n6(capsys):
    code, lines, _ = run(capsys, "scan", "--gen-n", "6", "--connected", "--offsets", "0,2,4")
    assert code == 0
    assert len(lines) == 113
    summary = lines[-1]["summary"]
    assert summary["total"] == 112 and summary["counterexamples"] == 0
    assert all(list(r) == list(RECORD_KEYS) for r in lines[:-1])


@pytest.mark.parametrize("argv", [
    ["scan", "--bogus"],
    [],
    ["scan"],
    ["scan", "--gen-n", "99"],
    ["scan", "--offsets", "1"],
    ["scan", "--connected", "--edge-list", C6],
    ["scan", "--edge-list", "3 0 0"],
    ["scan", "--in", "/nonexistent/file.g6"],
    ["check", "--edge-list", C6, "--gen-n", "3"],
])
def test_usage_errors(capsys, argv):
    assert dispatch(argv) == 1
    assert "error" in capsys.readouterr().err


def test_unwritable_out(capsys, tmp_path):
    target = tmp_path / "missing-dir" / "out.jsonl"
    assert dispatch(["check", "--edge-list", C6, "--out", str(target)]) == 1


def test_malformed_file_line_is_warning(capsys, tmp_path):
    src = tmp_path / "in.g6"
    src.write_text("Bw\nnot graph6!\nC~\n")
    code, lines, _ = run(capsys, "scan", "--in", str(src))
    assert code == 0
    assert lines[-1]["summary"]["warnings"] == 1
    assert lines[-1]["summary"]["total"] == 2


def test_empty_scan(capsys, tmp_path):
    src = tmp_path / "empty.g6"
    src.write_text("")
    code, lines, _ = run(capsys, "scan", "--in", str(src))
    assert code == 0 and len(lines) == 1
    assert lines[0]["summary"]["total"] == 0


def test_byte_identical_runs(tmp_path):
    outs = []
    for k, jobs in enumerate(("1", "2")):
        path = tmp_path / f"run{k}.jsonl"
        assert dispatch(["scan", "--gen-n", "6", "--connected", "--oracles", "--jobs", jobs,
                         "--out", str(path)]) == 0
        outs.append(path.read_bytes())
    assert outs[0] == outs[1]


def test_oracles_subcommand(capsys):
    code, lines, _ = run(capsys, "oracles", "--edge-list", "5 0 2 0 3 0 4 1 2 1 3 1 4")
    assert code == 0
    entries = {(e["id"], e["mode"]): e for e in lines[0]["oracles"]}
    assert entries[("HOP", "strict")]["status"] == "holds"
    assert entries[("L3", "strict")]["status"] == "skipped"


def test_oracle_failure_exits_2(capsys, monkeypatch):
    from toughcycles import lemmas, verifier

    planted = verifier.SetupOracle("L3", lambda s: lemmas.Outcome(1, [{"planted": True}]))
    monkeypatch.setattr(verifier, "SETUP_ORACLES", (planted,) + verifier.SETUP_ORACLES[1:])
    code, lines, _ = run(capsys, "oracles", "--edge-list", "5 0 2 0 3 0 4 1 2 1 3 1 4")
    assert code == 2
    assert lines[-1]["summary"]["oracle_failures"] == 1


def test_counterexample_exits_2(capsys, monkeypatch):
    from toughcycles import verifier

    monkeypatch.setattr(verifier, "circumference", lambda g: (3, None))
    monkeypatch.setattr(verifier, "confirm_counterexample", lambda g, o: True)
    code, lines, _ = run(capsys, "check", "--edge-list", C6)
    assert code == 2
    assert lines[-1]["summary"]["counterexamples"] == 3


def test_hopping_k23(capsys):
    code, lines, _ = run(capsys, "hopping", "--edge-list", "5 0 2 0 3 0 4 1 2 1 3 1 4",
                         "--cycle", "0,2,1,3", "--u", "4")
    assert code == 0 and len(lines) == 1
    rec = lines[0]
    assert rec["X"] == [0, 1] and rec["Y"] == [2, 3] and rec["iterations"] == 2
    assert rec["hypotheses"] == "hold"
    assert {p["status"] for p in rec["parts"].values()} == {"holds"}


def test_hopping_bad_cycle(capsys):
    assert dispatch(["hopping", "--edge-list", C6, "--cycle", "0,2,4"]) == 1


def test_setups(capsys):
    code, lines, _ = run(capsys, "setups", "--edge-list", "5 0 2 0 3 0 4 1 2 1 3 1 4")
    assert code == 0
    assert lines[-1]["setups"] == len(lines) - 1 > 0
    code, lines, _ = run(capsys, "setups", "--require-s3",
                         "--edge-list", "5 0 2 0 3 0 4 1 2 1 3 1 4")
    assert lines == [{"graph": lines[0]["graph"], "setups": 0}]


def test_timing_flag(capsys):
    _, lines, _ = run(capsys, "check", "--edge-list", C6, "--timing")
    assert isinstance(lines[0]["elapsed_ms"], float)


def test_module_entry_point():
    env = dict(os.environ)
    out = subprocess.run([sys.executable, "-m", "toughcycles", "check", "--edge-list", C6],
                         capture_output=True, text=True, env=env)
    assert out.returncode == 0
    assert json.loads(out.stdout.splitlines()[0])["verdicts"][2]["status"] == "holds"

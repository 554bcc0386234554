"""Command-line front end.

    toughcycles <subcommand> [--in FILE | --edge-list STR | --gen-n N [--connected]]
                [--offsets LIST] [--oracles] [--jobs K] [--timeout-ms T] [--out FILE]

Exit status: 0 clean, 2 counterexample or failed oracle, 1 usage or input error.
"""

from __future__ import annotations

import argparse
import contextlib
import sys
from typing import Iterator, Optional, Sequence

from toughcycles.cycles import CycleError, OrientedCycle
from toughcycles.generate import MAX_GENERATED, enumerate_graphs
from toughcycles.graph import GraphFormatError, members, parse_edge_list, parse_graph6, write_graph6
from toughcycles.hopping import check_hopping_conclusions, hopping_fixpoint, hopping_hypotheses
from toughcycles.invariants import TooManyCycles, enumerate_longest_cycles
from toughcycles.report import dumps, emit_report
from toughcycles.setups import setups_on_cycle
from toughcycles.verifier import DEFAULT_BUDGET, DEFAULT_TIMEOUT_MS, OFFSETS, scan_corpus

EXIT_OK, EXIT_USAGE, EXIT_FOUND = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _offsets(text: str) -> tuple[int, ...]:
    try:
        values = tuple(sorted({int(t) for t in text.split(",") if t.strip()}))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad offset list {text!r}")
    if not values or any(v not in OFFSETS for v in values):
        raise argparse.ArgumentTypeError(f"offsets must be a subset of {OFFSETS}")
    return values


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    source = common.add_mutually_exclusive_group()
    source.add_argument("--in", dest="infile", metavar="FILE", help="graph6 file, one graph per line")
    source.add_argument("--edge-list", metavar="STR", help='"n i j i j ..."')
    source.add_argument("--gen-n", type=int, metavar="N", help="generate every graph on N vertices")
    common.add_argument("--connected", action="store_true", help="with --gen-n: connected graphs only")
    common.add_argument("--offsets", type=_offsets, default=OFFSETS, metavar="LIST",
                        help="bound offsets, subset of 0,2,4 (default all)")
    common.add_argument("--oracles", action="store_true", help="run the structural oracle suite")
    common.add_argument("--jobs", type=_positive, default=1, metavar="K")
    common.add_argument("--timeout-ms", type=_positive, default=DEFAULT_TIMEOUT_MS, metavar="T",
                        help="per-graph wall clock limit")
    common.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET,
                        help="cap on enumerated cycles and setups per graph")
    common.add_argument("--out", metavar="FILE", help="write JSON lines here instead of stdout")
    common.add_argument("--timing", action="store_true",
                        help="fill elapsed_ms (makes output run-dependent)")

    parser = _Parser(prog="toughcycles", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("invariants", parents=[common], help="all invariants per graph")
    sub.add_parser("check", parents=[common], help="bound verdicts per graph")
    sub.add_parser("oracles", parents=[common], help="structural oracle suite per graph")
    sub.add_parser("scan", parents=[common], help="corpus scan with summary")
    hop = sub.add_parser("hopping", parents=[common], help="hopping trace for a cycle and vertex")
    hop.add_argument("--cycle", help="comma separated cycle (default: every longest cycle)")
    hop.add_argument("--u", type=int, help="off-cycle vertex (default: every isolated one)")
    st = sub.add_parser("setups", parents=[common], help="list setups on longest cycles")
    st.add_argument("--require-s3", action="store_true", help="only setups with four good 2-intervals")
    return parser


def _source_lines(args) -> Iterator[str]:
    if args.infile:
        try:
            with open(args.infile, encoding="ascii", errors="replace") as fh:
                yield from fh
        except OSError as exc:
            raise UsageError(f"cannot read {args.infile}: {exc.strerror}")
    elif args.edge_list is not None:
        try:
            yield write_graph6(parse_edge_list(args.edge_list))
        except GraphFormatError as exc:
            raise UsageError(f"edge list: {exc}")
    elif args.gen_n is not None:
        if not 1 <= args.gen_n <= MAX_GENERATED:
            raise UsageError(f"--gen-n must be in 1..{MAX_GENERATED}")
        for g in enumerate_graphs(args.gen_n, connected_only=args.connected):
            yield write_graph6(g)
    else:
        raise UsageError("one of --in, --edge-list, --gen-n is required")


def _graphs(args):
    for i, line in enumerate(_source_lines(args)):
        if line.strip():
            try:
                yield parse_graph6(line.strip())
            except GraphFormatError as exc:
                raise UsageError(f"line {i + 1}: {exc}")


@contextlib.contextmanager
def _output(path: Optional[str]):
    if path is None:
        yield sys.stdout
        return
    try:
        fh = open(path, "w", encoding="ascii", newline="\n")
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc.strerror}")
    with fh:
        yield fh


def _run_scan(args) -> int:
    lines = list(_source_lines(args))
    with_oracles = args.oracles or args.command == "oracles"
    items = scan_corpus(lines, args.offsets, with_oracles=with_oracles, jobs=args.jobs,
                        timeout_ms=args.timeout_ms, budget=args.budget,
                        full=args.command == "invariants")
    with _output(args.out) as out:
        summary = emit_report(items, out, timing=args.timing)
    return EXIT_FOUND if summary.exit_code else EXIT_OK


def _run_hopping(args) -> int:
    status = EXIT_OK
    with _output(args.out) as out:
        for g in _graphs(args):
            if args.cycle:
                try:
                    cycle = OrientedCycle(tuple(int(t) for t in args.cycle.split(",")))
                except (ValueError, CycleError) as exc:
                    raise UsageError(f"--cycle: {exc}")
                if not cycle.is_valid_in(g):
                    raise UsageError("--cycle is not a cycle of the graph")
                cycles = [cycle]
            else:
                cycles = enumerate_longest_cycles(g, args.budget)
            for c in cycles:
                off = g.vertex_mask & ~c.mask
                if args.u is not None:
                    us = [args.u]
                else:
                    us = [u for u in members(off) if not g.adj[u] & off]
                for u in us:
                    try:
                        h = hopping_fixpoint(g, c, u)
                    except ValueError as exc:
                        raise UsageError(str(exc))
                    try:
                        reason = hopping_hypotheses(g, c, u, args.budget)
                    except TooManyCycles:
                        reason = "cycle budget exhausted"
                    parts = check_hopping_conclusions(g, c, u, h, args.budget)
                    if any(p.status == "fails" for p in parts.values()):
                        status = EXIT_FOUND
                    out.write(dumps({
                        "graph": write_graph6(g),
                        "cycle": list(c.vertices),
                        "u": u,
                        "hypotheses": "hold" if reason is None else reason,
                        "trace": [[members(x), members(y)] for x, y in h.trace],
                        "iterations": h.iterations,
                        "X": members(h.X),
                        "Y": members(h.Y),
                        "parts": {k: {"status": p.status, "witness": p.witness}
                                  for k, p in parts.items()},
                    }) + "\n")
    return status


def _run_setups(args) -> int:
    with _output(args.out) as out:
        for g in _graphs(args):
            gid = write_graph6(g)
            try:
                cycles = enumerate_longest_cycles(g, args.budget)
            except TooManyCycles as exc:
                raise UsageError(str(exc))
            if not cycles or len(cycles[0]) == g.n:
                out.write(dumps({"graph": gid, "setups": 0,
                                 "reason": "acyclic" if not cycles else "hamiltonian"}) + "\n")
                continue
            count = 0
            for c in cycles:
                for oriented in (c, c.reversed()):
                    for s in setups_on_cycle(g, oriented):
                        rec = {"graph": gid, "u": s.u, "v": s.v, "cycle": list(oriented.vertices)}
                        if s.B_mask & ~oriented.mask:
                            rec["B_off_cycle"] = members(s.B_mask & ~oriented.mask)
                        else:
                            if args.require_s3 and not s.s3_satisfied:
                                continue
                            rec.update({
                                "B": list(s.B),
                                "Bplus": members(s.Bplus),
                                "Bminus": members(s.Bminus),
                                "intervals": [{"start": iv.start, "end": iv.end,
                                               "length": iv.length, "good": iv.good}
                                              for iv in s.decomposition],
                                "s3": s.s3_satisfied,
                            })
                        count += 1
                        out.write(dumps(rec) + "\n")
            out.write(dumps({"graph": gid, "setups": count}) + "\n")
    return EXIT_OK


def dispatch(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.connected and args.gen_n is None:
            raise UsageError("--connected requires --gen-n")
        if args.command == "hopping":
            return _run_hopping(args)
        if args.command == "setups":
            return _run_setups(args)
        return _run_scan(args)
    except UsageError as exc:
        print(f"toughcycles: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return EXIT_OK if not exc.code else EXIT_USAGE


def main() -> None:
    sys.exit(dispatch())


if __name__ == "__main__":
    main()

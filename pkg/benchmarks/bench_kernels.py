"""Time each kernel on both backends over a corpus of connected graphs.

    python benchmarks/bench_kernels.py --n 7 --repeat 3

Prints one line per kernel: best-of-repeat seconds for each backend and the
speedup. Outputs are compared while timing, so a mismatch aborts the run.
"""

from __future__ import annotations

import argparse
import sys
import time

from toughcycles import kernels
from toughcycles.generate import enumerate_graphs
from toughcycles.invariants import independence_number


def workloads(graphs):
    alphas = [independence_number(g) for g in graphs]
    cycle_len = [max(3, g.n - 1) for g in graphs]
    return {
        "count_components": lambda k: [k.count_components(g.adj, g.n, 0b101) for g in graphs],
        "max_independent_set": lambda k: [k.max_independent_set(g.adj, g.n) for g in graphs],
        "tough_violation": lambda k: [k.tough_violation(g.adj, g.n, a)
                                      for g, a in zip(graphs, alphas)],
        "longest_cycle": lambda k: [tuple(k.longest_cycle(g.adj, g.n)) for g in graphs],
        "cycles_of_length": lambda k: [len(k.cycles_of_length(g.adj, g.n, m, 10_000))
                                       for g, m in zip(graphs, cycle_len)],
        "hamiltonian_paths": lambda k: [len(k.hamiltonian_paths(g.adj, g.vertex_mask, 0,
                                                                g.n - 1, 10_000))
                                        for g in graphs],
        "canonical_labeling": lambda k: [tuple(k.canonical_labeling(g.adj, g.n)[0])
                                         for g in graphs],
    }


def best_of(fn, repeat):
    best, result = None, None
    for _ in range(repeat):
        t = time.perf_counter()
        result = fn()
        dt = time.perf_counter() - t
        best = dt if best is None else min(best, dt)
    return best, result


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=7, help="vertex count of the corpus")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)

    found = kernels.backends()
    if "cython" not in found:
        print("compiled extension not built; only the Python backend is available",
              file=sys.stderr)
    graphs = list(enumerate_graphs(args.n))
    print(f"{len(graphs)} connected graphs on {args.n} vertices, best of {args.repeat}")
    print(f"{'kernel':<22}" + "".join(f"{name:>12}" for name in found) + "     speedup")
    for name, work in workloads(graphs).items():
        times, results = {}, {}
        for backend, module in found.items():
            times[backend], results[backend] = best_of(lambda: work(module), args.repeat)
        if len({repr(r) for r in results.values()}) != 1:
            print(f"{name}: backends disagree", file=sys.stderr)
            return 1
        row = f"{name:<22}" + "".join(f"{times[b]:>11.4f}s" for b in found)
        if "cython" in times and times["cython"] > 0:
            row += f"{times['python'] / times['cython']:>11.1f}x"
        print(row)
    return 0


if __name__ == "__main__":
    sys.exit(main())

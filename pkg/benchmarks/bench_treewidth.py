#!/usr/bin/env python3
"""Benchmark the compiled tree-width kernels against the pure-python path.

Both variants are imported side by side from ``spinedcat._kernels``, so
one process measures both regardless of the SPINEDCAT_JIT setting.
Graphs are seeded, timings are medians over repeated runs.

Usage: python benchmarks/bench_treewidth.py [--repeats N]
"""

from __future__ import annotations

import argparse
import random
import statistics
import time

import numpy as np

from spinedcat import _kernels
from spinedcat._accel import HAVE_NUMBA, JIT_ENABLED
from spinedcat.corpus import _perm_table, graph_code
from spinedcat.graph import random_graph


def _time(fn, repeats):
    samples = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        samples.append(time.perf_counter() - t0)
    return statistics.median(samples)


def _graphs(seed, n, count, p=0.4):
    rng = random.Random(seed)
    return [random_graph(rng, n, p) for _ in range(count)]


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()

    if not JIT_ENABLED:
        print("note: SPINEDCAT_JIT is off or numba is missing;")
        if not HAVE_NUMBA:
            print("      no compiled variant exists, timing the python path only")

    jit_ok = JIT_ENABLED
    rows = []

    def bench(label, default_fn, py_fn):
        default_fn()  # warm the jit before timing
        t_py = _time(py_fn, args.repeats)
        t_def = _time(default_fn, args.repeats) if jit_ok else float("nan")
        rows.append((label, t_def, t_py))

    for n in (8, 10, 12):
        graphs = _graphs(91, n, 10)
        adjs = [np.array(g.adj, np.int64) for g in graphs]
        bench(
            f"subset DP, 10 graphs, n={n}",
            lambda: [_kernels.treewidth_dp(a, n) for a in adjs],
            lambda: [_kernels.treewidth_dp_py(a, n) for a in adjs],
        )

    for n in (7, 8):
        graphs = _graphs(92, n, 5)
        adjs = [np.array(g.adj, np.int64) for g in graphs]
        bench(
            f"ordering oracle, 5 graphs, n={n}",
            lambda: [_kernels.treewidth_oracle(a, n) for a in adjs],
            lambda: [_kernels.treewidth_oracle_py(a, n) for a in adjs],
        )

    n = 6
    codes = np.array(
        [graph_code(g) for g in _graphs(93, n, 200, 0.5)], np.int64
    )
    perms = _perm_table(n)
    out = np.zeros(len(codes), np.int64)
    bench(
        f"canonical codes, 200 graphs, n={n}",
        lambda: _kernels.canonical_codes(codes, n, perms, out),
        lambda: _kernels.canonical_codes_py(codes, n, perms, out),
    )

    width = max(len(r[0]) for r in rows)
    header = f"{'benchmark':<{width}}  {'compiled':>10}  {'python':>10}  {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for label, t_def, t_py in rows:
        if jit_ok:
            print(
                f"{label:<{width}}  {t_def * 1e3:>8.2f}ms  {t_py * 1e3:>8.2f}ms"
                f"  {t_py / t_def:>7.1f}x"
            )
        else:
            print(f"{label:<{width}}  {'n/a':>10}  {t_py * 1e3:>8.2f}ms  {'':>8}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

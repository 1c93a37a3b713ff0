"""Benchmark: compiled composition kernel vs the pure-Python fallback.

Times single-pair composition and the all-pairs composition table on the
full diagram sets at a few sizes.  Run directly:

    python benchmarks/bench_kernels.py [--max-f 5]
"""

import argparse
import time

import numpy as np

from brauerkit import _compose_py
from brauerkit.diagrams import enumerate_diagrams

try:
    from brauerkit import _compose_c

    HAVE_COMPILED = True
except ImportError:
    _compose_c = None
    HAVE_COMPILED = False


def partner_matrix(f):
    basis = enumerate_diagrams(f)
    mat = np.frombuffer(b"".join(d.partner for d in basis), dtype=np.uint8)
    return np.ascontiguousarray(mat.reshape(len(basis), 2 * f))


def bench_pairs(impl, rows, f, budget=2.0):
    """Single-pair compositions per second."""
    n = len(rows)
    done = 0
    start = time.perf_counter()
    i = 0
    while time.perf_counter() - start < budget:
        pa = rows[i % n]
        for j in range(0, n, 7):
            impl.compose_partner(pa, rows[j], f)
        done += (n + 6) // 7
        i += 1
    return done / (time.perf_counter() - start)


def bench_table(impl, mat, f):
    start = time.perf_counter()
    idx, loops = impl.compose_table(mat, f)
    elapsed = time.perf_counter() - start
    return elapsed, int(idx[0, 0]), int(loops.sum())


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--max-f", type=int, default=5)
    args = parser.parse_args()

    impls = [("python", _compose_py)]
    if HAVE_COMPILED:
        impls.append(("compiled", _compose_c))
    else:
        print("compiled kernel unavailable; benchmarking the fallback only")

    print(f"{'f':>3} {'backend':>9} {'pairs/s':>12} {'table (s)':>10} {'n':>6}")
    for f in range(3, args.max_f + 1):
        mat = partner_matrix(f)
        rows = [bytes(mat[i]) for i in range(mat.shape[0])]
        results = {}
        for name, impl in impls:
            rate = bench_pairs(impl, rows, f, budget=1.0)
            t_table, probe, loop_sum = bench_table(impl, mat, f)
            results[name] = (rate, t_table, probe, loop_sum)
            print(
                f"{f:>3} {name:>9} {rate:>12.0f} {t_table:>10.3f} {mat.shape[0]:>6}"
            )
        if len(results) == 2:
            agree = (
                results["python"][2:] == results["compiled"][2:]
            )
            speedup = results["python"][1] / max(results["compiled"][1], 1e-9)
            print(f"    table outputs agree: {agree}; table speedup {speedup:.1f}x")


if __name__ == "__main__":
    main()

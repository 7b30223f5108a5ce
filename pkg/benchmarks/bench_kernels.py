"""Time the numba and numpy kernels against each other.

    python benchmarks/bench_kernels.py [--repeat 5]

The first numba call includes compilation and is reported separately.
"""
import argparse
import time

import numpy as np

from colored_partitions import _kernels
from colored_partitions.parts import gg
from colored_partitions.partitions import part_universe


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def chain_inputs(n, M):
    pool = part_universe(n, M, "E")
    rel = np.array([[gg(x, y) for y in pool] for x in pool], dtype=np.bool_)
    sizes = np.array([x.size for x in pool], dtype=np.int64)
    return rel, sizes


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    cases = [("product", n, M) for n, M in [(3, 30), (4, 24), (5, 18)]]
    cases += [("chains", n, M) for n, M in [(4, 40), (5, 30), (6, 24)]]
    print(f"{'kernel':8} {'n':>2} {'M':>3} {'numpy s':>10} {'numba s':>10} {'first call':>11} {'speedup':>8}")
    for kind, n, M in cases:
        if kind == "product":
            run = lambda b: _kernels.product_coefficients(n, M, b)
        else:
            rel, sizes = chain_inputs(n, M)
            run = lambda b: _kernels.chain_counts(rel, sizes, M, b)
        t_np, a = best_of(lambda: run("numpy"), args.repeat)
        if not _kernels.HAVE_NUMBA:
            print(f"{kind:8} {n:>2} {M:>3} {t_np:10.4f} {'-':>10} {'-':>11} {'-':>8}")
            continue
        t0 = time.perf_counter()
        run("numba")
        first = time.perf_counter() - t0
        t_nb, b = best_of(lambda: run("numba"), args.repeat)
        assert np.array_equal(a, b), (kind, n, M)
        print(f"{kind:8} {n:>2} {M:>3} {t_np:10.4f} {t_nb:10.4f} {first:11.3f} {t_np / t_nb:8.1f}x")


if __name__ == "__main__":
    main()

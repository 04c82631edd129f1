"""Time the numba and numpy kernel backends against each other.

    python benchmarks/bench_kernels.py [--repeat 5] [--seed 0]

Workloads: the full Funk matrix behind a metric spanning tree, and point
classification of a large sample. Prints median wall times and the largest
disagreement between the two backends.
"""

import argparse
import statistics
import time

import numpy as np

from hilbert_kit import _kernels
from hilbert_kit.geom import EPS, ConvexPolygon, convex_hull


def _domain(rng, m):
    t = np.sort(rng.uniform(0, 2 * np.pi, m))
    return convex_hull(np.c_[np.cos(t), np.sin(t)] * rng.uniform(1, 3, 2))


def _interior(rng, omega, n):
    w = rng.dirichlet(np.ones(len(omega)), size=n)
    c = omega.coords.mean(axis=0)
    return c + 0.95 * (w @ omega.coords - c)


def _median_time(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return statistics.median(times)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)
    if not _kernels.HAVE_NUMBA:
        raise SystemExit("numba is not installed; nothing to compare")

    rng = np.random.default_rng(args.seed)
    omega: ConvexPolygon = _domain(rng, 16)
    N, C = omega.normals, omega.offsets
    cases = []
    for n in (100, 500, 1000):
        P = _interior(rng, omega, n)
        cases.append((f"funk_matrix n={n}", lambda b, P=P: _kernels.funk_matrix(N, C, P, P, b)))
    lo, hi = omega.coords.min(axis=0), omega.coords.max(axis=0)
    for n in (10_000, 100_000, 1_000_000):
        X = rng.uniform(lo, hi, size=(n, 2))
        cases.append((f"classify n={n}", lambda b, X=X: _kernels.classify_points(N, C, X, EPS, b)))

    print(f"{'workload':<24}{'numba [ms]':>12}{'numpy [ms]':>12}{'speedup':>9}{'max diff':>11}")
    for name, run in cases:
        run("numba")  # compile outside the timing
        a, b = run("numba"), run("numpy")
        diff = float(np.max(np.abs(a.astype(float) - b.astype(float))))
        t_numba = _median_time(lambda: run("numba"), args.repeat)
        t_numpy = _median_time(lambda: run("numpy"), args.repeat)
        print(f"{name:<24}{1e3 * t_numba:>12.2f}{1e3 * t_numpy:>12.2f}"
              f"{t_numpy / t_numba:>8.1f}x{diff:>11.1e}")


if __name__ == "__main__":
    main()

"""Benchmark the numba kernels against the pure-numpy fallbacks.

Runs each kernel on both backends at a few representative sizes and prints
a timing table with the speedup.  Results are integer-identical across
backends; this script asserts that while it measures.

Usage:
    python benchmarks/bench_kernels.py [--repeat 3] [--trials 200000]
"""

import argparse
import os
import time

from strongorient import kernels
from strongorient.generators import complete, random_regular


def _best_of(repeat, fn):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def _with_backend(backend, fn):
    old = os.environ.get("STRONGORIENT_BACKEND")
    os.environ["STRONGORIENT_BACKEND"] = backend
    try:
        return fn()
    finally:
        if old is None:
            del os.environ["STRONGORIENT_BACKEND"]
        else:
            os.environ["STRONGORIENT_BACKEND"] = old


def build_cases(trials):
    cheeger_g = complete(20)
    census_g = complete(7)  # m = 21, about 2M orientations
    mc_g = random_regular(64, 6, seed=3)
    subsets_g = random_regular(18, 4, seed=5)
    return [
        ("cheeger_scan n=20", lambda: kernels.cheeger_scan(cheeger_g)),
        ("census m=21", lambda: kernels.census_counts(census_g)),
        (
            f"mc_joint trials={trials} n=64",
            lambda: kernels.mc_joint_stats(mc_g, trials, seed=7),
        ),
        (
            "connected_subsets n=18 k=8",
            lambda: kernels.connected_subsets(subsets_g, 8),
        ),
    ]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3, help="best-of repeats")
    ap.add_argument(
        "--trials", type=int, default=200_000, help="Monte Carlo trials"
    )
    args = ap.parse_args()

    backends = ["numpy"]
    if kernels._numba_available():
        backends.insert(0, "numba")
    for b in backends:
        _with_backend(b, kernels.warmup)

    cases = build_cases(args.trials)
    width = max(len(name) for name, _ in cases)
    header = f"{'kernel':<{width}}  " + "".join(
        f"{b + ' (s)':>12}" for b in backends
    )
    if len(backends) == 2:
        header += f"{'speedup':>10}"
    print(header)
    print("-" * len(header))

    for name, fn in cases:
        times = {}
        results = {}
        for b in backends:
            times[b], results[b] = _with_backend(
                b, lambda: _best_of(args.repeat, fn)
            )
        row = f"{name:<{width}}  " + "".join(
            f"{times[b]:>12.4f}" for b in backends
        )
        if len(backends) == 2:
            a, b_ = results["numba"], results["numpy"]
            same = (
                bool((a == b_).all())
                if hasattr(a, "all")
                else a == b_
            )
            assert same, f"backend mismatch on {name}"
            row += f"{times['numpy'] / times['numba']:>9.1f}x"
        print(row)


if __name__ == "__main__":
    main()

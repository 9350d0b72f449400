"""Compare the compiled branch-and-bound kernels against the pure fallback.

Both backends must return byte-identical certificates, so the comparison
is purely about speed. Run from a checkout:

    python3 benchmarks/bench_kernels.py
    python3 benchmarks/bench_kernels.py --sizes 12 16 20 --per-size 40
"""

from __future__ import annotations

import argparse
import random
import statistics
import time

from tricover import gen_random_connected
from tricover import _kernels_py
from tricover._native import BACKEND
from tricover.solver import _edge_masks, greedy_cover, greedy_matching

try:
    from tricover import _speedups
except ImportError:
    _speedups = None


def make_cases(m: int, count: int, rng: random.Random):
    cases = []
    while len(cases) < count:
        # n in the cyclic range: dense enough that branching actually works
        n = rng.randint(max(6, m // 2 + 3), 2 * m)
        h = gen_random_connected(n, m, rng.randint(0, 2**30))
        cases.append((_edge_masks(h), h.n, greedy_cover(h), greedy_matching(h)))
    return cases


def time_backend(module, cases) -> tuple[float, list]:
    results = []
    started = time.perf_counter()
    for masks, n, cover_seed, matching_seed in cases:
        results.append(
            (
                tuple(module.min_cover(masks, n, cover_seed)),
                tuple(module.max_matching(masks, n, matching_seed)),
            )
        )
    return time.perf_counter() - started, results


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", type=int, nargs="+", default=[10, 14, 18])
    parser.add_argument("--per-size", type=int, default=30)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--repeats", type=int, default=3,
                        help="timing repeats; the median is reported")
    args = parser.parse_args()

    if _speedups is None:
        print(f"backend in use: {BACKEND} (compiled kernels not built)")
        print("nothing to compare; build with: pip install -e . --no-build-isolation")
        return 0

    rng = random.Random(args.seed)
    print(f"backend in use: {BACKEND}")
    print(f"{'m':>4} {'cases':>6} {'pure ms':>10} {'compiled ms':>12} {'speedup':>8}")
    for m in args.sizes:
        cases = make_cases(m, args.per_size, rng)
        pure_times, fast_times = [], []
        for _ in range(args.repeats):
            t_pure, r_pure = time_backend(_kernels_py, cases)
            t_fast, r_fast = time_backend(_speedups, cases)
            if r_pure != r_fast:
                raise SystemExit(f"certificate mismatch at m={m}")
            pure_times.append(t_pure)
            fast_times.append(t_fast)
        pure_ms = statistics.median(pure_times) * 1000
        fast_ms = statistics.median(fast_times) * 1000
        print(
            f"{m:>4} {len(cases):>6} {pure_ms:>10.2f} {fast_ms:>12.2f}"
            f" {pure_ms / fast_ms:>7.1f}x"
        )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

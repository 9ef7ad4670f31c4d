"""Time the numba kernels against the pure-numpy fallback.

    python benchmarks/bench_kernels.py [--repeat 3]

Each case runs once untimed on each backend (numba compiles or loads its
cache then) and reports the best of ``--repeat`` timed runs.
"""

import argparse
import os
import time

import numpy as np

from streakgf import _kernels
from streakgf.cluster import ForbiddenSet
from streakgf.oracle import count_avoiding_exhaustive, count_streak_free, simulate_draws

EXAMPLE = ForbiddenSet(4, ((1, 2, 1), (4, 1), (2, 3, 4)))

CASES = {
    "streak scan 4^11 strict k=3": lambda: count_streak_free(4, 3, 11).count,
    "streak scan 4^11 soft k=3": lambda: count_streak_free(4, 3, 11, soft=True).count,
    "avoiding scan 4^10, 3 words": lambda: count_avoiding_exhaustive(EXAMPLE, 10).count,
    "simulate (4,3) 2e5 trials": lambda: simulate_draws(4, 3, trials=200_000, seed=1).mean,
    "simulate soft (3,3) 2e5 trials": lambda: simulate_draws(3, 3, soft=True, trials=200_000, seed=1).mean,
}


def best_of(fn, repeat):
    fn()
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        value = fn()
        times.append(time.perf_counter() - t0)
    return min(times), value


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    if not _kernels.HAVE_NUMBA:
        raise SystemExit("numba is not installed; nothing to compare")

    print(f"{'case':34s} {'numba s':>9s} {'numpy s':>9s} {'speedup':>8s}")
    for name, fn in CASES.items():
        row = {}
        for backend, flag in (("numba", "0"), ("numpy", "1")):
            os.environ[_kernels.ENV_FLAG] = flag
            row[backend] = best_of(fn, args.repeat)
        assert np.isclose(row["numba"][1], row["numpy"][1], rtol=0, atol=0), name
        t_nb, t_np = row["numba"][0], row["numpy"][0]
        print(f"{name:34s} {t_nb:9.3f} {t_np:9.3f} {t_np / t_nb:7.1f}x")
    os.environ.pop(_kernels.ENV_FLAG, None)


if __name__ == "__main__":
    main()

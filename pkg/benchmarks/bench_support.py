"""Compare the compiled and numpy support scans on random configurations.

    python3 benchmarks/bench_support.py [--k 10 12 14] [--repeat 3]

Both backends see the same normalized kernel matrix; the script checks that
they report the same faces before timing them.
"""
import argparse
import time

import numpy as np

from rieszcap import _kernels
from rieszcap.finite_capacity import kernel_matrix


def best_time(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--k", type=int, nargs="+", default=[8, 10, 12, 14])
    parser.add_argument("--n", type=int, default=2)
    parser.add_argument("--p", type=float, default=-1.0)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    backends = sorted(_kernels.BACKENDS)
    print(f"default backend: {_kernels.BACKEND}; available: {', '.join(backends)}")
    print(f"{'k':>3} {'faces':>7} " + " ".join(f"{b + ' [s]':>13}" for b in backends) + "  speedup")
    rng = np.random.default_rng(args.seed)
    for k in args.k:
        Q = kernel_matrix(rng.normal(size=(k, args.n)), args.p).entries
        Q = Q / Q.max()
        scans = {b: _kernels.BACKENDS[b](Q, k) for b in backends}
        ref = scans[backends[0]]
        for b in backends[1:]:
            assert sorted(scans[b][0].tolist()) == sorted(ref[0].tolist()), f"{b} disagrees at k={k}"
        times = {b: best_time(lambda b=b: _kernels.BACKENDS[b](Q, k), args.repeat) for b in backends}
        faces = 2 ** k - k - 1
        speed = f"{times['python'] / times['cython']:8.1f}x" if "cython" in times else "      n/a"
        print(f"{k:>3} {faces:>7} " + " ".join(f"{times[b]:>13.4f}" for b in backends) + speed)


if __name__ == "__main__":
    main()

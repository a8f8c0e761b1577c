"""Time the compiled and pure-Python kernels on random dense graphs.

    python3 benchmarks/bench_kernels.py [--sizes 10 40 120] [--repeat 5]
"""
import argparse
import timeit

import numpy as np

from simug import kernels


def random_case(n, density, rng):
    adj = (rng.random((n, n)) < density).astype(np.uint8)
    np.fill_diagonal(adj, 0)
    src = (rng.random(n) < 0.3).astype(np.uint8)
    snk = (rng.random(n) < 0.3).astype(np.uint8)
    return adj, src, snk


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", type=int, nargs="+", default=[10, 40, 120])
    parser.add_argument("--density", type=float, default=0.15)
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    backends = kernels.available_backends()
    if "cython" not in backends:
        print("compiled kernels not built; only the Python backend is timed")
    rng = np.random.default_rng(args.seed)
    print(f"{'kernel':<14}{'n':>5}" + "".join(f"{b + ' ms':>14}" for b in backends) + f"{'speedup':>10}")
    for n in args.sizes:
        adj, src, snk = random_case(n, args.density, rng)
        for name, call in (("reach_matrix", lambda b: kernels.reach_matrix(adj, backend=b)),
                           ("max_vdp", lambda b: kernels.max_vdp(adj, src, snk, backend=b))):
            results = {b: call(b) for b in backends}
            first = next(iter(results.values()))
            assert all(np.array_equal(r, first) for r in results.values()), "backends disagree"
            ms = {}
            for b in backends:
                number = max(1, int(200 / n))
                best = min(timeit.repeat(lambda: call(b), number=number, repeat=args.repeat))
                ms[b] = 1000 * best / number
            speedup = ms["python"] / ms["cython"] if "cython" in ms else float("nan")
            print(f"{name:<14}{n:>5}" + "".join(f"{ms[b]:>14.3f}" for b in backends) + f"{speedup:>9.1f}x")


if __name__ == "__main__":
    main()

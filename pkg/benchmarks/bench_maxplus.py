"""Compare the compiled and pure-Python max-plus kernels.

    python benchmarks/bench_maxplus.py [--balls N] [--kmax K] [--repeat R]

Runs the same union-of-balls fold on both backends, checks the results are
identical and prints the best wall time of each.
"""

import argparse
import random
import sys
import timeit

from echkit import _backend, _pykernels


def fold(kern, ws, K):
    acc = kern.ball_sequence(ws[0], K)
    for w in ws[1:]:
        acc = kern.maxplus_convolve(acc, kern.ball_sequence(w, K))
    return acc


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--balls", type=int, default=20)
    ap.add_argument("--kmax", type=int, default=400)
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    if _backend.BACKEND != "cython":
        print("compiled kernels not built; run `pip install -e . --no-build-isolation` first", file=sys.stderr)
        return 1
    compiled = _backend.kernels

    rng = random.Random(args.seed)
    ws = [rng.uniform(0.05, 2.0) for _ in range(args.balls)]
    if fold(compiled, ws, args.kmax) != fold(_pykernels, ws, args.kmax):
        print("backends disagree", file=sys.stderr)
        return 2

    times = {}
    for name, kern in (("python", _pykernels), ("cython", compiled)):
        t = timeit.repeat(lambda: fold(kern, ws, args.kmax), number=1, repeat=args.repeat)
        times[name] = min(t)
        print(f"{name:7s} {times[name] * 1e3:10.2f} ms   ({args.balls} balls, K={args.kmax})")
    print(f"speedup {times['python'] / times['cython']:.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())

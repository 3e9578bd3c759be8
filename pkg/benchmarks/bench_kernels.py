"""Compare the compiled and pure-Python kernels on random inputs.

    python3 benchmarks/bench_kernels.py [--n 2000] [--repeat 5]
"""
import argparse
import random
import timeit

from dblcat import _pykernels

try:
    from dblcat import _ckernels
except ImportError:
    _ckernels = None


def workloads(n, seed=0):
    rng = random.Random(seed)
    m = max(2, n // 4)
    f = list(rng.randrange(m) for _ in range(n))
    g = list(rng.randrange(n) for _ in range(n))
    h = list(rng.randrange(m) for _ in range(n))
    left = list(rng.randrange(n) for _ in range(n // 2))
    right = list(rng.randrange(n) for _ in range(n // 2))
    return {
        "compose_idx": lambda k: k.compose_idx(g, f),
        "matching_pairs": lambda k: k.matching_pairs(f, h, m),
        "quotient_classes": lambda k: k.quotient_classes(n, left, right),
        "fibers_idx": lambda k: k.fibers_idx(f, m),
    }


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=2000)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    print("%-18s %12s %12s %8s" % ("kernel", "python (ms)", "cython (ms)", "speedup"))
    for name, call in workloads(args.n).items():
        py = min(timeit.repeat(lambda: call(_pykernels), number=10, repeat=args.repeat)) * 100
        if _ckernels is None:
            print("%-18s %12.3f %12s %8s" % (name, py, "n/a", "n/a"))
            continue
        assert call(_ckernels) == call(_pykernels), name
        cy = min(timeit.repeat(lambda: call(_ckernels), number=10, repeat=args.repeat)) * 100
        print("%-18s %12.3f %12.3f %7.1fx" % (name, py, cy, py / cy))


if __name__ == "__main__":
    main()

"""Time the compiled Jacobi kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py --sizes 4 8 12 24 --repeat 20
"""
import argparse
import timeit

import numpy as np

from ritz_majorize.linalg import _fallback

try:
    from ritz_majorize.linalg import _kernels
except ImportError:
    _kernels = None

SWEEPS = 30


def _time(fn, arg, repeat):
    return min(timeit.repeat(lambda: fn(arg, SWEEPS), number=1, repeat=repeat))


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--sizes", type=int, nargs="+", default=[4, 8, 12, 24])
    p.add_argument("--repeat", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    args = p.parse_args(argv)
    if _kernels is None:
        raise SystemExit("compiled kernels are not built; run `pip install -e . --no-build-isolation` first")

    rng = np.random.default_rng(args.seed)
    print(f"{'kernel':<6} {'n':>4} {'python [ms]':>12} {'cython [ms]':>12} {'speedup':>8}")
    for n in args.sizes:
        g = rng.standard_normal((n, n))
        sym = np.ascontiguousarray(g + g.T)
        rect = np.ascontiguousarray(rng.standard_normal((n + n // 2, n)))
        for name, mat in (("eigh", sym), ("svd", rect)):
            py = _time(getattr(_fallback, f"jacobi_{name}"), mat, args.repeat)
            cy = _time(getattr(_kernels, f"jacobi_{name}"), mat, args.repeat)
            print(f"{name:<6} {n:>4} {py * 1e3:>12.3f} {cy * 1e3:>12.3f} {py / cy:>7.1f}x")


if __name__ == "__main__":
    main()

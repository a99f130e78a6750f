"""Time the compiled Sinkhorn kernel against the NumPy fallback.

    python3 benchmarks/bench_sinkhorn.py [--sizes 100,300,700] [--repeat 3]
"""
import argparse
import time

import numpy as np

from mdi import _pykernels

try:
    from mdi import _ckernels
except ImportError:
    _ckernels = None


def problem(n, m, seed=0):
    rng = np.random.default_rng(seed)
    x, y = rng.normal(size=(n, 16)), rng.normal(size=(m, 16)) + 0.5
    C = ((x[:, None, :] - y[None, :, :]) ** 2).sum(-1)
    return np.ascontiguousarray(C), np.full(n, 1.0 / n), np.full(m, 1.0 / m)


def run(kernel, C, a, b, eps, iters):
    f, g = np.zeros(len(a)), np.zeros(len(b))
    t0 = time.perf_counter()
    it, err = kernel.sinkhorn_log(C, np.ascontiguousarray(C.T), np.log(a), np.log(b),
                                  eps, iters, 0.0, iters, f, g)
    return time.perf_counter() - t0, f, g


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", default="100,300,700")
    ap.add_argument("--iters", type=int, default=200)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    print(f"{'n':>6} {'numpy_s':>10} {'cython_s':>10} {'speedup':>8} {'max|df|':>10}")
    for n in map(int, args.sizes.split(",")):
        C, a, b = problem(n, n)
        eps = 0.1 * C.max()
        tp = min(run(_pykernels, C, a, b, eps, args.iters)[0] for _ in range(args.repeat))
        _, fp, _ = run(_pykernels, C, a, b, eps, args.iters)
        if _ckernels is None:
            print(f"{n:>6} {tp:>10.4f} {'n/a':>10} {'n/a':>8} {'n/a':>10}")
            continue
        tc = min(run(_ckernels, C, a, b, eps, args.iters)[0] for _ in range(args.repeat))
        _, fc, _ = run(_ckernels, C, a, b, eps, args.iters)
        print(f"{n:>6} {tp:>10.4f} {tc:>10.4f} {tp / tc:>8.2f} {np.abs(fp - fc).max():>10.2e}")


if __name__ == "__main__":
    main()

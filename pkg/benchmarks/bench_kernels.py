"""Time the numba kernels against the pure-numpy fallbacks.

    python benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import math
import sys
import time

from solowfrac import _kernels


def best_of(fn, repeat):
    best = math.inf
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def abm_case(n, alpha=0.5):
    h = 1.0 / n
    b, a = _kernels.abm_weights(alpha, n)
    c_pred = h ** alpha / math.gamma(alpha + 1)
    c_corr = h ** alpha / math.gamma(alpha + 2)
    return (1.0, 1.0, 0.5, alpha, 0.5, c_pred, c_corr, b, a, n)


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)

    if not _kernels.HAVE_NUMBA:
        print("numba unavailable (or disabled via SOLOWFRAC_DISABLE_NUMBA); nothing to compare")
        return 0

    # compile (or load from cache) before timing
    _kernels.abm_numba(*abm_case(4))
    _kernels.rk4_numba(1.0, 1.0, 0.5, 0.5, 1e-3, 4)

    print(f"{'kernel':<10}{'n':>8}{'numba [s]':>12}{'numpy [s]':>12}{'speedup':>10}")
    for n in (1000, 2000, 4000, 8000):
        case = abm_case(n)
        t_nb = best_of(lambda: _kernels.abm_numba(*case), args.repeat)
        t_np = best_of(lambda: _kernels.abm_numpy(*case), args.repeat)
        print(f"{'abm':<10}{n:>8}{t_nb:>12.4f}{t_np:>12.4f}{t_np / t_nb:>10.1f}")
    for n in (10_000, 100_000):
        args_rk = (1.0, 1.0, 0.5, 0.5, 1.0 / n, n)
        t_nb = best_of(lambda: _kernels.rk4_numba(*args_rk), args.repeat)
        t_np = best_of(lambda: _kernels.rk4_numpy(*args_rk), args.repeat)
        print(f"{'rk4':<10}{n:>8}{t_nb:>12.4f}{t_np:>12.4f}{t_np / t_nb:>10.1f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())

"""Compare the compiled and pure-Python triple-sum kernels.

    python3 benchmarks/bench_kernels.py [--sigma 2 4 8] [--repeat 5]
"""

import argparse
import timeit

import numpy as np

from desitter import _kernels_py
from desitter.kernels import factor_coefficients

try:
    from desitter import _kernels
except ImportError:
    _kernels = None


def cases(impl, sigma, angles):
    coef, pexp = factor_coefficients(sigma)
    th, ph, ta = angles[0]
    return {
        "z_element": lambda: impl.z_element(coef, pexp, sigma, 0, 2 * sigma, th, ph, ta),
        "z_matrix": lambda: impl.z_matrix(coef, pexp, sigma, th, ph, ta),
        f"z_matrices[{len(angles)}]": lambda: impl.z_matrices(coef, pexp, sigma, angles),
    }


def best_time(fn, repeat):
    timer = timeit.Timer(fn)
    number, _ = timer.autorange()
    return min(timer.repeat(repeat, number)) / number


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sigma", type=int, nargs="+", default=[2, 4, 8])
    parser.add_argument("--points", type=int, default=200)
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args(argv)

    rng = np.random.default_rng(0)
    angles = np.column_stack([
        rng.uniform(-np.pi, np.pi, args.points),
        rng.uniform(-np.pi, np.pi, args.points),
        rng.uniform(-2, 2, args.points),
    ])
    if _kernels is None:
        print("compiled extension not built; timing the pure-Python kernels only")
    print(f"{'sigma':>5}  {'kernel':<16} {'python [s]':>12} {'cython [s]':>12} {'speedup':>8}")
    for sigma in args.sigma:
        py = cases(_kernels_py, sigma, angles)
        cy = cases(_kernels, sigma, angles) if _kernels else {}
        for name, fn in py.items():
            t_py = best_time(fn, args.repeat)
            if name in cy:
                a, b = np.asarray(fn()), np.asarray(cy[name]())
                assert np.allclose(a, b, rtol=1e-12, atol=1e-13), f"backends disagree on {name}"
                t_cy = best_time(cy[name], args.repeat)
                print(f"{sigma:>5}  {name:<16} {t_py:>12.3e} {t_cy:>12.3e} {t_py / t_cy:>7.1f}x")
            else:
                print(f"{sigma:>5}  {name:<16} {t_py:>12.3e} {'-':>12} {'-':>8}")


if __name__ == "__main__":
    main()

"""Compare the compiled polynomial kernels against the pure-Python fallback.

Run with:  python3 benchmarks/bench_kernels.py
"""

import random
import time
from fractions import Fraction

from dortho import _kernels_py

try:
    from dortho import _kernels
except ImportError:
    _kernels = None


def make_inputs(rng, count, length):
    out = []
    for _ in range(count):
        a = [Fraction(rng.randint(-50, 50), rng.randint(1, 12)) for _ in range(length)]
        b = [Fraction(rng.randint(-50, 50), rng.randint(1, 12)) for _ in range(length)]
        out.append((a, b))
    return out


def bench(mod, inputs, repeats=5):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        for a, b in inputs:
            mod.poly_mul(a, b)
            mod.poly_add(a, b)
            mod.poly_deriv(a, 2)
            mod.poly_eval(a, Fraction(3, 7))
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    rng = random.Random(7)
    print(f"{'size':>6} {'python':>10} {'cython':>10} {'speedup':>8}")
    for length in (8, 16, 32, 64):
        inputs = make_inputs(rng, 200, length)
        t_py = bench(_kernels_py, inputs)
        if _kernels is None:
            print(f"{length:>6} {t_py:>9.4f}s {'n/a':>10} {'n/a':>8}")
            continue
        t_cy = bench(_kernels, inputs)
        print(f"{length:>6} {t_py:>9.4f}s {t_cy:>9.4f}s {t_py / t_cy:>7.2f}x")


if __name__ == "__main__":
    main()

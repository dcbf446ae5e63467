"""Compare the numba and pure-numpy quadrature kernels.

    python benchmarks/bench_oracle.py [--repeat 5]

The first numba call includes JIT compilation (or a cache load); it is timed
separately as "warmup".
"""
import argparse
import time
from fractions import Fraction

import numpy as np

from hypodiv.geometry import HypocycloidShape
from hypodiv.kernels import get_backend
from hypodiv.oracle import invert_arclength_numeric, quad_arclength, verify_division

SHAPES = [HypocycloidShape.from_ratio(c) for c in ("3", "4", "5", "3/2", "5/2", "7/2", "7/3", "8/3")]


def closed_form_grid(backend):
    for shape in SHAPES:
        for phi in np.linspace(0, shape.period, 100):
            quad_arclength(shape, 0.0, float(phi), 1e-12, backend=backend)


def division_sweep(backend):
    for shape in SHAPES:
        for n in range(2, 13):
            verify_division(shape, n, 1e-8, backend=backend)


def inversions(backend):
    for shape in SHAPES:
        total = shape.total_arclength()
        for d in range(1, 20):
            invert_arclength_numeric(shape, float(total * Fraction(d, 20)), 1e-11, backend=backend)


WORKLOADS = {
    "quadrature grid (8 shapes x 100)": closed_form_grid,
    "verify_division (8 shapes x n=2..12)": division_sweep,
    "bisection inversions (8 shapes x 19)": inversions,
}


def best_time(fn, backend, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(backend)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    backends = {"numpy": get_backend("numpy")}
    try:
        nb = get_backend("numba")
        t0 = time.perf_counter()
        quad_arclength(SHAPES[0], 0.0, 1.0, 1e-10, backend=nb)
        invert_arclength_numeric(SHAPES[0], 1.0, 1e-8, backend=nb)
        print(f"numba warmup: {time.perf_counter() - t0:.3f} s")
        backends["numba"] = nb
    except ImportError:
        print("numba not installed; timing numpy only")

    print(f"{'workload':40s} " + " ".join(f"{name:>10s}" for name in backends) + "   speedup")
    for label, fn in WORKLOADS.items():
        times = {name: best_time(fn, be, args.repeat) for name, be in backends.items()}
        row = f"{label:40s} " + " ".join(f"{t * 1e3:8.1f}ms" for t in times.values())
        if "numba" in times:
            row += f"   {times['numpy'] / times['numba']:6.1f}x"
        print(row)


if __name__ == "__main__":
    main()

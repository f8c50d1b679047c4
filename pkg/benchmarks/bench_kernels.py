"""Timing comparison of the compiled and pure-numpy assembly kernels.

Run:  python benchmarks/bench_kernels.py [--sizes small|large]
"""
from __future__ import annotations

import argparse
import time

import numpy as np

from legode import _kernels_py

try:
    from legode import _kernels

    BACKENDS = {"cython": _kernels, "python": _kernels_py}
except ImportError:
    BACKENDS = {"python": _kernels_py}


def _time(fn, *args, repeat: int = 3) -> float:
    best = np.inf
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--sizes", choices=["small", "large"], default="small")
    args = parser.parse_args()

    if args.sizes == "small":
        block_cases = [(8, 200), (40, 400), (100, 800)]
        assemble_cases = [(25, 100), (60, 400), (148, 1500)]
    else:
        block_cases = [(100, 2000), (300, 2000)]
        assemble_cases = [(148, 1500), (400, 1500)]

    rng = np.random.default_rng(0)
    print(f"available backends: {', '.join(BACKENDS)}")
    print("\nbasis_block(d, M)")
    for d, M in block_cases:
        row = [f"d={d:4d} M={M:5d}"]
        for name, mod in BACKENDS.items():
            row.append(f"{name}: {_time(mod.basis_block, d, M):8.4f}s")
        print("  " + "   ".join(row))

    print("\nassemble_band(alpha, M)  (N+1 terms)")
    for N, M in assemble_cases:
        alpha = (rng.normal(size=N + 1) * 1j).astype(complex)
        row = [f"N={N:4d} M={M:5d}"]
        for name, mod in BACKENDS.items():
            row.append(f"{name}: {_time(mod.assemble_band, alpha, M, repeat=2):8.4f}s")
        print("  " + "   ".join(row))

    if len(BACKENDS) == 2:
        a = BACKENDS["cython"].assemble_band(np.array([1.0 + 0.5j, -0.25j]), 64)
        b = BACKENDS["python"].assemble_band(np.array([1.0 + 0.5j, -0.25j]), 64)
        print(f"\nbackend agreement: {np.abs(a - b).max():.3e}")


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""Benchmark the compiled multiplication kernel against the pure-Python
fallback on the workloads that dominate real runs: iterated products for
constant-term sequences and modular binary powering for prime sweeps.

Usage: python benchmarks/bench_kernel.py [--repeat N]
"""

import argparse
import time

from ctseq import _kernel
from ctseq.laurent import LaurentPoly, ct_sequence


def apery_kernel():
    x, y, z = (LaurentPoly.variable(i, 3) for i in range(3))
    inv = LaurentPoly(3, {(-1, -1, -1): 1})
    return (x + y) * (z + 1) * (x + y + z) * (y + z + 1) * inv


WORKLOADS = {
    "apery ct_sequence N=12 (exact)":
        lambda: ct_sequence(apery_kernel(), LaurentPoly.one(3), 12),
    "apery P^20 mod 25 (modular powering)":
        lambda: apery_kernel().reduce_mod(25) ** 20,
    "linear (x+3)^4000 mod 2209 (witness sweep)":
        lambda: LaurentPoly(1, {(1,): 1, (0,): 3}, 2209) ** 4000,
    "catalan kernel^600 mod 49":
        lambda: LaurentPoly(1, {(-1,): 1, (0,): 2, (1,): 1}, 49) ** 600,
}


def run(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    if _kernel.kernel_name() != "compiled":
        print("compiled kernel unavailable; timing the pure kernel only")

    width = max(len(n) for n in WORKLOADS)
    print(f"{'workload':<{width}}  {'pure':>9}  {'compiled':>9}  speedup")
    for name, fn in WORKLOADS.items():
        compiled_backend = _kernel._ctcore
        _kernel._ctcore = None
        pure = run(fn, args.repeat)
        _kernel._ctcore = compiled_backend
        if compiled_backend is None:
            print(f"{name:<{width}}  {pure:>8.3f}s  {'-':>9}")
            continue
        fast = run(fn, args.repeat)
        print(f"{name:<{width}}  {pure:>8.3f}s  {fast:>8.3f}s  "
              f"{pure / fast:>6.1f}x")


if __name__ == "__main__":
    main()

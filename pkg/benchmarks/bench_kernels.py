#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Micro-benchmarks call both kernel modules directly in one process;
the end-to-end rows re-run a representative identity in a subprocess
with QHECKE_PURE=1 to force the fallback.

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import os
import subprocess
import sys
import time
from fractions import Fraction

from qhecke import _kernels
from qhecke.rings import ZPoly

try:
    from qhecke import _speedups
except ImportError:
    _speedups = None


def timeit(fn, repeat):
    best = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best


def micro_rows(repeat):
    n = 400
    ints = list(range(1, n + 1))
    alt = [(-1) ** k * (k + 3) for k in range(n)]
    fracs = [Fraction(k + 1, 2 * k + 3) for k in range(120)]
    polys = [ZPoly({j - 3: j + k + 1 for j in range(6)}) for k in range(60)]
    inv_input = [1] + [(-1) ** k for k in range(1, 300)]

    workloads = [
        ("conv int n=400", lambda mod: mod.conv_trunc(ints, alt, n)),
        ("conv Fraction n=120", lambda mod: mod.conv_trunc(fracs, fracs, 120)),
        ("conv ZPoly n=60", lambda mod: mod.conv_trunc(polys, polys, 60)),
        ("invert unit n=300", lambda mod: mod.inv_unit(inv_input, 300, 1)),
        ("geometric pass n=4000",
         lambda mod: mod.div_linear(list(range(4000)), 1, 7)),
    ]
    rows = []
    for label, work in workloads:
        pure = timeit(lambda: work(_kernels), repeat)
        if _speedups is not None:
            fast = timeit(lambda: work(_speedups), repeat)
            rows.append((label, pure, fast))
        else:
            rows.append((label, pure, None))
    return rows


def end_to_end(repeat):
    code = ("import time; t0=time.perf_counter(); "
            "from qhecke.verify import verify; "
            "rs = verify(['bivar-f4z-hecke', 'hecke-hf8', 'dz-quotient-24lmt']); "
            "assert all(r.status == 'pass' for r in rs); "
            "print(time.perf_counter() - t0)")
    out = []
    for pure in (False, True):
        env = dict(os.environ)
        env["QHECKE_PURE"] = "1" if pure else "0"
        best = None
        for _ in range(repeat):
            t = float(subprocess.check_output([sys.executable, "-c", code],
                                              env=env).strip())
            best = t if best is None else min(best, t)
        out.append(best)
    return out


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--skip-e2e", action="store_true")
    args = parser.parse_args()

    print(f"compiled kernels available: {_speedups is not None}")
    print(f"{'workload':<24}{'python':>12}{'cython':>12}{'speedup':>9}")
    for label, pure, fast in micro_rows(args.repeat):
        if fast is None:
            print(f"{label:<24}{pure * 1e3:>10.2f}ms{'-':>12}{'-':>9}")
        else:
            print(f"{label:<24}{pure * 1e3:>10.2f}ms{fast * 1e3:>10.2f}ms"
                  f"{pure / fast:>8.1f}x")

    if not args.skip_e2e and _speedups is not None:
        fast, pure = end_to_end(args.repeat)
        print(f"{'verify 3 heavy cases':<24}{pure:>10.2f}s {fast:>10.2f}s "
              f"{pure / fast:>7.1f}x")


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""Benchmark the compiled kernel core against the pure-numpy fallback.

Times the two hot kernels (factorwise transform, cyclic convolution) on
representative group sizes, plus one end-to-end mini campaign per backend.

Usage:
    python benchmarks/bench_kernels.py [--repeat 2000] [--trials 300]
"""

import argparse
import os
import subprocess
import sys
import time

import numpy as np

from normcontrol import Group, available_backends
from normcontrol._backend import load_backend
from normcontrol.group import _structure

GROUPS = [Group((8,)), Group((64,)), Group((256,)), Group((3, 4)), Group((2, 2, 5))]


def _time_kernel(fn, repeat: int) -> float:
    fn()  # warm up
    start = time.perf_counter()
    for _ in range(repeat):
        fn()
    return (time.perf_counter() - start) / repeat


def bench_kernels(repeat: int) -> list[tuple]:
    rows = []
    backends = {name: load_backend(name) for name in available_backends()}
    rng = np.random.default_rng(0)
    for g in GROUPS:
        st = _structure(g.orders)
        vals = rng.standard_normal(g.size) + 1j * rng.standard_normal(g.size)
        other = rng.standard_normal(g.size) + 1j * rng.standard_normal(g.size)
        tw, off = st.twiddles(-1)
        diff = st.diff_table
        for op in ("dft", "conv"):
            times = {}
            for name, mod in backends.items():
                if op == "dft":
                    times[name] = _time_kernel(
                        lambda m=mod: m.dft_factorwise(vals, st.orders_arr, tw, off, -1),
                        repeat)
                else:
                    times[name] = _time_kernel(
                        lambda m=mod: m.cyclic_convolve(vals, other, diff), repeat)
            rows.append((str(g), op, times))
    return rows


def bench_campaign(trials: int) -> dict:
    """Time a small certification campaign in a fresh process per backend."""
    code = (
        "import time; t0=time.perf_counter();"
        "from normcontrol import *;"
        "spec=SampleSpec(Group((8,)), AlgebraKind.ap(3.0), 0.2, seed=1,"
        " strategy=Strategy.BOUNDARY_BIASED);"
        f"r=certify_campaign(spec, Theorem.THM7, trials={trials});"
        "assert r.violations==0;"
        "print(time.perf_counter()-t0)"
    )
    out = {}
    for name in available_backends():
        env = dict(os.environ, NORMCONTROL_BACKEND=name)
        proc = subprocess.run([sys.executable, "-c", code], env=env,
                              capture_output=True, text=True, check=True)
        out[name] = float(proc.stdout.strip().splitlines()[-1])
    return out


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=2000,
                        help="kernel invocations per measurement")
    parser.add_argument("--trials", type=int, default=300,
                        help="campaign trials for the end-to-end comparison")
    args = parser.parse_args()

    names = available_backends()
    print(f"backends available: {', '.join(names)}")
    print(f"\nper-call kernel times ({args.repeat} reps), microseconds:")
    header = f"{'group':>8} {'kernel':>6} " + " ".join(f"{n:>10}" for n in names)
    if len(names) > 1:
        header += f" {'speedup':>8}"
    print(header)
    for group, op, times in bench_kernels(args.repeat):
        row = f"{group:>8} {op:>6} " + " ".join(
            f"{times[n] * 1e6:>10.2f}" for n in names)
        if len(names) > 1:
            row += f" {times['python'] / times['cython']:>7.1f}x"
        print(row)

    print(f"\nend-to-end campaign ({args.trials} trials, symmetrization "
          f"pipeline on Z8), seconds:")
    for name, seconds in bench_campaign(args.trials).items():
        print(f"  {name:>8}: {seconds:.3f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())

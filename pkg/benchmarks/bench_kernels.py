#!/usr/bin/env python3
"""Compare the compiled kernels against the pure-Python fallback.

Times the three hot entry points (failure_table, scan_max_unbordered,
trial_stats) on uniform random strings of growing length, plus one
end-to-end Monte Carlo batch per backend.

Run:
    python benchmarks/bench_kernels.py [--trials 200] [--sigma 2]
"""

import argparse
import time

import numpy as np

from unbordered import _kernels_py

try:
    from unbordered import _kernels
except ImportError:
    _kernels = None


def time_call(fn, args_list, repeats=3):
    best = float("inf")
    for _ in range(repeats):
        started = time.perf_counter()
        for args in args_list:
            fn(args)
        best = min(best, time.perf_counter() - started)
    return best / len(args_list)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--trials", type=int, default=200,
                        help="strings per measurement")
    parser.add_argument("--sigma", type=int, default=2)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    if _kernels is None:
        print("compiled extension not available; showing fallback timings only")
    backends = [("python", _kernels_py)] + ([("cython", _kernels)] if _kernels else [])

    rng = np.random.default_rng(args.seed)
    print(f"sigma={args.sigma}, {args.trials} random strings per point, "
          f"best of 3 runs, per-string time\n")
    header = f"{'kernel':<22}{'n':>8}" + "".join(f"{name:>14}" for name, _ in backends)
    if _kernels:
        header += f"{'speedup':>10}"
    print(header)
    print("-" * len(header))

    for kernel_name in ("failure_table", "scan_max_unbordered", "trial_stats"):
        for n in (64, 512, 4096):
            strings = [rng.integers(0, args.sigma, n) for _ in range(args.trials)]
            row = f"{kernel_name:<22}{n:>8}"
            times = []
            for _, module in backends:
                per_call = time_call(getattr(module, kernel_name), strings)
                times.append(per_call)
                row += f"{per_call * 1e6:>12.1f}us"
            if len(times) == 2:
                row += f"{times[0] / times[1]:>9.1f}x"
            print(row)
        print()

    # end-to-end: one small experiment per backend, each in a fresh process
    # so the import-time backend selection stays untouched
    import os
    import subprocess
    import sys

    script = (
        "import time\n"
        "from unbordered import BACKEND, RngSpec, run_experiment\n"
        f"started = time.perf_counter()\n"
        f"report = run_experiment({args.sigma}, 1000, 500, RngSpec(1))\n"
        "elapsed = time.perf_counter() - started\n"
        "print(f'  {BACKEND:<8} {elapsed:.2f} s   "
        "(mean delta {report.mean_delta:.3f})')\n"
    )
    print("end-to-end run_experiment(sigma, n=1000, trials=500):", flush=True)
    for name, _ in backends:
        env = dict(os.environ, UNBORDERED_BACKEND=name)
        subprocess.run([sys.executable, "-c", script], env=env, check=True)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

"""Numba vs numpy kernels, plus an end-to-end Laurent workload under each path.

Run:  python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import os
import subprocess
import sys
import time

import numpy as np

from localroots import _kernels
from localroots.finite_field import first_irreducible, get_field


def best_of(fn, repeat):
    fn()  # warm up (JIT compile on the numba path)
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def bench_kernels(repeat):
    print(f"{'kernel':<16}{'field':<8}{'len':>6}{'numpy ms':>12}{'numba ms':>12}{'speedup':>9}")
    rng = np.random.default_rng(0)
    for p, s in ((2, 1), (3, 2), (7, 1)):
        F = get_field(p, first_irreducible(p, s))
        T = F.tables
        for n in (32, 128, 512):
            a = rng.integers(0, F.q, n)
            b = rng.integers(0, F.q, n)
            a[0] = max(a[0], 1)
            rows = [
                ("convolve", lambda: _kernels.convolve_numpy(a, b, n, T), lambda: _kernels.convolve_numba(a, b, n, T)),
                ("series_inverse", lambda: _kernels.series_inverse_numpy(a, n, T), lambda: _kernels.series_inverse_numba(a, n, T)),
            ]
            for name, slow, fast in rows:
                t_np = best_of(slow, repeat) * 1e3
                t_nb = best_of(fast, repeat) * 1e3 if _kernels.numba is not None else float("nan")
                print(f"{name:<16}{'F_' + str(F.q):<8}{n:>6}{t_np:>12.3f}{t_nb:>12.3f}{t_np / t_nb:>8.1f}x")


WORKLOAD = """
import time
from localroots.laurent import LaurentScalar
from localroots.matrices import LocalMatrix, laurent_field, power_map
from localroots.power_lab import has_kth_root, roots_all_orders
fld = laurent_field(3, 1, 256)
t = LaurentScalar.uniformizer(fld.profile)
M = LocalMatrix.of(fld, [[1 + t + t**2, t], [0, (1 + t).inverse()]])
start = time.perf_counter()
P = power_map(M, 3**5 + 7)
has_kth_root(M, 4)
roots_all_orders(M)
print(time.perf_counter() - start)
"""


def bench_workload():
    print()
    print("end-to-end Laurent workload (precision 256, F_3((t)))")
    for flag in ("0", "1"):
        env = dict(os.environ, LOCALROOTS_DISABLE_NUMBA=flag)
        # run twice so the second run sees numba's on-disk cache
        for _ in range(2):
            out = subprocess.run([sys.executable, "-c", WORKLOAD], env=env, capture_output=True, text=True, check=True)
        label = "numpy" if flag == "1" else "numba"
        print(f"  {label:<6} {float(out.stdout) * 1e3:9.1f} ms")


if __name__ == "__main__":
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    if _kernels.numba is None:
        print("numba not installed; only the numpy path is timed")
    bench_kernels(args.repeat)
    bench_workload()

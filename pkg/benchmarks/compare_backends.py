"""Time the compiled and pure-Python kernels on the same patterns.

    python benchmarks/compare_backends.py [--nu 2000,10000,50000] [--repeats 5]

Prints one row per (nu, mode) with median build+run time for each backend.
"""

import argparse
import gc
import statistics
import time

from sscverify import _backend
from sscverify.generate import GenSpec, gen
from sscverify.sparse_core import CcsPattern


def time_backend(name, x, n, mode, repeats):
    k = _backend.load_kernel(name)
    times = []
    for i in range(repeats + 1):
        gc.disable()
        t0 = time.perf_counter_ns()
        z, i_z, to_row, to_col, c, _ = k.transpose_link(n, x.n_cols, x.indices, x.indptr)
        k.run_mode(n, x.n_cols, x.indices.copy(), x.indptr, z, i_z, to_row, to_col, c, mode)
        elapsed = time.perf_counter_ns() - t0
        gc.enable()
        if i:
            times.append(elapsed)
    return statistics.median(times)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=1000)
    ap.add_argument("--r", type=int, default=250)
    ap.add_argument("--nu", default="2000,10000,50000")
    ap.add_argument("--repeats", type=int, default=5)
    args = ap.parse_args()

    backends = _backend.available_backends()
    print(f"{'nu':>8} {'L':>2} " + " ".join(f"{b + ' ms':>12}" for b in backends) + "   speedup")
    for nu in (int(v) for v in args.nu.split(",")):
        x: CcsPattern = gen(GenSpec(args.n, args.r, nu, seed=0, require="ssc_lambda0")).pattern
        for mode in (0, 1):
            ms = {b: time_backend(b, x, args.n, mode, args.repeats) / 1e6 for b in backends}
            cells = " ".join(f"{ms[b]:12.3f}" for b in backends)
            speed = f"{ms['python'] / ms['cython']:9.1f}x" if len(ms) == 2 else ""
            print(f"{nu:>8} {mode:>2} {cells} {speed}")


if __name__ == "__main__":
    main()

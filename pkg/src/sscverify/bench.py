"""Runtime scaling harness.

For every grid cell a pattern that passes the eigenvalue-zero test is
generated, then both modes are timed end to end (linking plus the removal
loop).  Generation stays outside the timed region, one warm-up run is
discarded, and the reported time is the median over ``repeats`` runs with
the garbage collector paused.
"""

from __future__ import annotations

import csv
import gc
import statistics
import sys
import time
from dataclasses import asdict, dataclass
from typing import Iterable, Sequence

import numpy as np

from .generate import GenSpec, gen
from .sparse_core import build_linked
from .verifier import run

CSV_FIELDS = ("n", "r", "nu", "seed", "L", "time_ns", "ops", "removals", "verdict")


@dataclass(frozen=True)
class BenchRecord:
    n: int
    r: int
    nu: int
    seed: int
    L: int
    time_ns: int
    ops: int
    removals: int
    verdict: str  # "ssc-part" when the mode leaves no rows, else "witness"

    def row(self) -> dict:
        return asdict(self)


def time_mode(x, n, mode, repeats=5, backend=None):
    """Median wall time (ns) of build + run over ``repeats`` timed runs."""
    times = []
    out = None
    ops = 0
    for i in range(repeats + 1):
        gc_was = gc.isenabled()
        gc.disable()
        try:
            t0 = time.perf_counter_ns()
            p = build_linked(x, n)
            out = run(p, mode, backend=backend)
            t1 = time.perf_counter_ns()
        finally:
            if gc_was:
                gc.enable()
        ops = out.ops + p.build_ops
        if i:
            times.append(t1 - t0)
    return int(statistics.median(times)), ops, out


def bench_cells(cells: Iterable[tuple[int, int, int]], seeds: Sequence[int], repeats=5, backend=None):
    """Yield :class:`BenchRecord` rows for every ``(n, r, nu)`` cell and seed."""
    for n, r, nu in cells:
        for seed in seeds:
            g = gen(GenSpec(n, r, nu, seed=seed, require="ssc_lambda0"))
            for mode in (0, 1):
                t, ops, out = time_mode(g.pattern, n, mode, repeats, backend)
                yield BenchRecord(
                    n, r, nu, seed, mode, t, ops, out.removals,
                    "ssc-part" if out.is_empty_witness else "witness",
                )


def grid_nu(n: int, r: int, nus: Sequence[int]):
    return [(n, r, nu) for nu in nus]


def grid_n(ns: Sequence[int], r: int, nu: int):
    return [(n, r, nu) for n in ns]


def write_csv(records: Iterable[BenchRecord], fh=None) -> None:
    fh = sys.stdout if fh is None else fh
    w = csv.DictWriter(fh, fieldnames=CSV_FIELDS, lineterminator="\n")
    w.writeheader()
    for rec in sorted(records, key=lambda r: (r.n, r.r, r.nu, r.seed, r.L)):
        w.writerow(rec.row())


def read_csv(fh) -> list[BenchRecord]:
    out = []
    for row in csv.DictReader(fh):
        out.append(
            BenchRecord(
                **{k: (row[k] if k == "verdict" else int(row[k])) for k in CSV_FIELDS}
            )
        )
    return out


def linear_fit(x, y) -> tuple[float, float, float]:
    """Least squares ``y = slope * x + intercept``; returns (slope, intercept, r2)."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    slope, intercept = np.polyfit(x, y, 1)
    resid = y - (slope * x + intercept)
    ss_tot = float(((y - y.mean()) ** 2).sum())
    r2 = 1.0 - float((resid**2).sum()) / ss_tot if ss_tot > 0 else 1.0
    return float(slope), float(intercept), r2


def median_by(records: Iterable[BenchRecord], key: str, mode: int = 0):
    """Median ``time_ns`` per value of ``key`` for one mode, sorted by key."""
    groups: dict[int, list[int]] = {}
    for rec in records:
        if rec.L == mode:
            groups.setdefault(getattr(rec, key), []).append(rec.time_ns)
    xs = sorted(groups)
    return xs, [statistics.median(groups[x]) for x in xs]

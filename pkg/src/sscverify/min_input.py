"""Exhaustive search for an input pattern ``B`` with the fewest columns.

Finding the minimum is NP-hard, so this is meant for small ``n``.  A
column pattern is encoded as the integer whose bit ``i-1`` is set when row
``i`` is nonzero.  For ``r = 1, 2, ...`` all multisets of ``r`` nonempty
columns (optionally with at most ``max_stars_per_column`` nonzeros each) are
enumerated as non-decreasing mask tuples in lexicographic order, and the
first one making ``(A, B)`` strongly structurally controllable is returned.
Column order never changes the verdict, which is why multisets suffice.

With ``parallelism > 1`` candidates are split into chunks evaluated by a
process pool one wave at a time; the earliest success in enumeration order
wins, so the answer does not depend on the worker count.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement, islice
from math import comb

import numpy as np

from ._backend import kernel
from .errors import BudgetExceeded, NoSolutionWithin
from .sparse_core import INDEX_DTYPE, CcsPattern

DEFAULT_BUDGET = 10_000_000
CHUNK = 2048


@dataclass(frozen=True)
class MinBQuery:
    a: CcsPattern
    max_r: int = 3
    max_stars_per_column: int | None = None
    parallelism: int = 1
    budget: int = DEFAULT_BUDGET

    def __post_init__(self):
        if self.max_r < 1:
            raise ValueError("max_r must be >= 1")
        if self.a.n_rows != self.a.n_cols:
            raise ValueError("A must be square")
        if self.max_stars_per_column is not None and self.max_stars_per_column < 1:
            raise ValueError("max_stars_per_column must be >= 1")


@dataclass
class MinBResult:
    r_min: int
    b: CcsPattern
    candidates_tested: int
    elapsed: float  # seconds


def column_masks(n: int, max_stars: int | None = None) -> list[int]:
    """Nonempty column patterns of length ``n``, increasing."""
    k = n if max_stars is None else min(max_stars, n)
    masks = [sum(1 << i for i in rows) for size in range(1, k + 1) for rows in combinations(range(n), size)]
    return sorted(masks)


def masks_to_pattern(n: int, masks) -> CcsPattern:
    cols = [[i for i in range(n) if m >> i & 1] for m in masks]
    indptr = np.zeros(len(cols) + 1, dtype=np.int64)
    indptr[1:] = np.cumsum([len(c) for c in cols])
    indices = np.asarray([i for c in cols for i in c], dtype=np.int64)
    return CcsPattern(n, len(cols), indices, indptr)


class _Tester:
    """Holds ``A`` and evaluates candidate mask tuples through the kernel."""

    def __init__(self, a: CcsPattern):
        self.n = a.n_rows
        self.a_indices = a.indices
        self.a_indptr = a.indptr
        self.col_rows: dict[int, list[int]] = {}

    def _rows(self, mask):
        rows = self.col_rows.get(mask)
        if rows is None:
            rows = [i for i in range(self.n) if mask >> i & 1]
            self.col_rows[mask] = rows
        return rows

    def __call__(self, masks) -> bool:
        n = self.n
        b_rows = [self._rows(m) for m in masks]
        extra = np.fromiter((i for rows in b_rows for i in rows), dtype=INDEX_DTYPE)
        indices = np.concatenate([self.a_indices, extra])
        tail = self.a_indptr[-1] + np.cumsum([len(rows) for rows in b_rows], dtype=INDEX_DTYPE)
        indptr = np.concatenate([self.a_indptr, tail])
        m = n + len(masks)
        for mode in (0, 1):
            z, i_z, to_row, to_col, c, _ = kernel.transpose_link(n, m, indices, indptr)
            active, _, _ = kernel.run_mode(
                n, m, indices.copy(), indptr, z, i_z, to_row, to_col, c, mode
            )
            if active.any():
                return False
        return True


_worker_tester: _Tester | None = None


def _init_worker(a: CcsPattern) -> None:
    global _worker_tester
    _worker_tester = _Tester(a)


def _first_hit(chunk) -> int:
    for idx, masks in enumerate(chunk):
        if _worker_tester(masks):
            return idx
    return -1


def _search_sequential(tester, candidates):
    tested = 0
    for masks in candidates:
        tested += 1
        if tester(masks):
            return masks, tested
    return None, tested


def _search_parallel(pool, workers, candidates):
    tested = 0
    it = iter(candidates)
    while True:
        wave = []
        for _ in range(workers):
            chunk = list(islice(it, CHUNK))
            if chunk:
                wave.append(chunk)
        if not wave:
            return None, tested
        hits = list(pool.map(_first_hit, wave))
        tested += sum(len(ch) for ch in wave)
        for chunk, hit in zip(wave, hits):
            if hit >= 0:
                return chunk[hit], tested


def min_columns(q: MinBQuery) -> MinBResult:
    """Smallest ``r`` (within ``q.max_r``) admitting an SSC input pattern.

    Raises :class:`BudgetExceeded` when the next column count would push
    the number of tested candidates past ``q.budget`` and
    :class:`NoSolutionWithin` when no ``r <= q.max_r`` works.
    """
    start = time.perf_counter()
    n = q.a.n_rows
    masks = column_masks(n, q.max_stars_per_column)
    tested = 0
    pool = None
    tester = _Tester(q.a)
    try:
        if q.parallelism > 1:
            pool = ProcessPoolExecutor(
                max_workers=q.parallelism, initializer=_init_worker, initargs=(q.a,)
            )
        for r in range(1, q.max_r + 1):
            needed = comb(len(masks) + r - 1, r)
            if tested + needed > q.budget:
                raise BudgetExceeded(r - 1, tested + needed, q.budget)
            candidates = combinations_with_replacement(masks, r)
            if pool is None:
                hit, count = _search_sequential(tester, candidates)
            else:
                hit, count = _search_parallel(pool, q.parallelism, candidates)
            tested += count
            if hit is not None:
                return MinBResult(r, masks_to_pattern(n, hit), tested, time.perf_counter() - start)
    finally:
        if pool is not None:
            pool.shutdown()
    raise NoSolutionWithin(q.max_r, tested)

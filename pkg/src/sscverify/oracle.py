"""Slow reference checks, independent of the linked data structures.

* :func:`check_g0` / :func:`check_g1` enumerate every nonempty row subset.
* :func:`naive_removal` is the set-based removal method with all sets
  recomputed from scratch each iteration.
* :func:`hautus_spotcheck` samples numeric realisations of the pattern and
  tests the rank of ``(lam*I - A, B)``.  It is one-sided: a controllable
  pattern always passes, but passing certifies nothing.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .errors import ExhaustionBoundExceeded

EXHAUSTION_BOUND = 20


@dataclass
class DensePattern:
    """``grid[i-1, j-1]`` is True iff entry ``(i, j)`` is nonzero."""

    n: int
    r: int
    grid: np.ndarray

    def __post_init__(self):
        self.grid = np.asarray(self.grid, dtype=bool)
        if self.grid.shape != (self.n, self.n + self.r):
            raise ValueError(f"grid shape {self.grid.shape} != ({self.n}, {self.n + self.r})")

    @property
    def m(self) -> int:
        return self.n + self.r

    @classmethod
    def from_ccs(cls, x, n: int) -> DensePattern:
        return cls(n, x.n_cols - n, x.to_dense())

    @classmethod
    def from_blocks(cls, a, b=None) -> DensePattern:
        a = np.asarray(a, dtype=bool)
        n = a.shape[0]
        b = np.zeros((n, 0), dtype=bool) if b is None else np.asarray(b, dtype=bool).reshape(n, -1)
        return cls(n, b.shape[1], np.hstack([a, b]))


@dataclass
class NumericInstance:
    a: np.ndarray
    b: np.ndarray


def nzr(d: DensePattern, j: int) -> set[int]:
    """Rows with a nonzero in 1-based column ``j``."""
    return {i for i in range(1, d.n + 1) if d.grid[i - 1, j - 1]}


def nzc(d: DensePattern, rows) -> set[int]:
    """Columns with a nonzero in at least one of ``rows``."""
    return {j for j in range(1, d.m + 1) if any(d.grid[i - 1, j - 1] for i in rows)}


def _column_masks(d: DensePattern) -> list[int]:
    weights = 1 << np.arange(d.n, dtype=object)
    return [int(sum(weights[d.grid[:, j]])) for j in range(d.m)]


def _singleton(x: int) -> bool:
    return x != 0 and x & (x - 1) == 0


def _guard(d: DensePattern, bound: int) -> None:
    if d.n > bound:
        raise ExhaustionBoundExceeded(f"n={d.n} exceeds the exhaustion bound {bound}")


def check_g0(d: DensePattern, bound: int = EXHAUSTION_BOUND) -> bool:
    """Every nonempty row set meets some column in exactly one row."""
    _guard(d, bound)
    cols = _column_masks(d)
    for subset in range(1, 1 << d.n):
        if not any(_singleton(subset & c) for c in cols):
            return False
    return True


def check_g1(d: DensePattern, bound: int = EXHAUSTION_BOUND) -> bool:
    """Every nonempty row set ``V`` covered by its own nonzero columns meets
    some column outside ``V`` in exactly one row."""
    _guard(d, bound)
    cols = _column_masks(d)
    n = d.n
    for subset in range(1, 1 << n):
        rows = [i for i in range(n) if subset >> i & 1]
        # V subset of NZC(V): each state index in V has a nonzero column within V
        if not all(cols[i] & subset for i in rows):
            continue
        ok = False
        for j, c in enumerate(cols):
            if j < n and subset >> j & 1:
                continue
            if _singleton(subset & c):
                ok = True
                break
        if not ok:
            return False
    return True


def naive_removal(d: DensePattern, mode: int) -> list[int]:
    """Set-based removal method; returns the remaining rows, sorted.

    Ties are broken by the smallest index.
    """
    n, m = d.n, d.m
    cols = {j: nzr(d, j) for j in range(1, m + 1)}
    v_set = set(range(1, n + 1))
    for _ in range(n):
        if not v_set:
            break
        if mode == 0:
            t = [j for j in range(1, m + 1) if len(v_set & cols[j]) == 1]
        else:
            t = [j for j in range(1, m + 1) if j not in v_set and len(v_set & cols[j]) == 1]
        covered = nzc(d, v_set)
        if mode == 0 or v_set <= covered:
            if not t:
                break
            (w,) = v_set & cols[t[0]]
        else:
            w = min(v_set - covered)
        v_set.discard(w)
    return sorted(v_set)


def sample_instances(d: DensePattern, trials: int, rng: np.random.Generator):
    """Random realisations with magnitudes uniform in [0.1, 2] and random signs."""
    mag = rng.uniform(0.1, 2.0, size=(trials, d.n, d.m))
    sign = rng.choice(np.array([-1.0, 1.0]), size=(trials, d.n, d.m))
    vals = mag * sign * d.grid
    return vals[:, :, : d.n], vals[:, :, d.n :]


def hautus_spotcheck(d: DensePattern, trials: int = 100, seed: int = 0) -> bool:
    """True iff every sampled ``(A, B)`` has ``(lam*I - A, B)`` of full row
    rank at ``lam = 0`` and at every real eigenvalue of ``A``."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    n = d.n
    if n == 0:
        return True
    rng = np.random.default_rng(seed)
    a, b = sample_instances(d, trials, rng)
    eig = np.linalg.eigvals(a)
    scale = np.maximum(1.0, np.abs(eig))
    real = np.abs(eig.imag) <= 1e-9 * scale
    lam = np.where(real, eig.real, 0.0)
    lam = np.concatenate([np.zeros((trials, 1)), lam], axis=1)  # (trials, n+1)
    eye = np.eye(n)
    left = lam[:, :, None, None] * eye - a[:, None, :, :]
    right = np.broadcast_to(b[:, None, :, :], (trials, n + 1, n, d.r))
    mats = np.concatenate([left, right], axis=3)
    sv = np.linalg.svd(mats, compute_uv=False)
    norm = np.linalg.norm(mats, ord="fro", axis=(2, 3))
    tol = 1e-8 * np.maximum(norm, np.finfo(float).tiny)
    rank = (sv > tol[:, :, None]).sum(axis=2)
    return bool(np.all(rank == n))

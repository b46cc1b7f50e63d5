"""Random structural pairs ``(A, B)`` with a required controllability property.

Randomness comes from numpy's PCG64 generator seeded through
``numpy.random.default_rng(seed)``, so a seed reproduces the same pattern
on every platform.

Two samplers:

``reject``
    ``nu`` distinct positions uniformly from the ``n x (n + r)`` grid,
    retried until the requirement holds.  At benchmark densities a uniform
    draw essentially never passes the eigenvalue-zero test.
``planted``
    Draws a random row order ``w_1..w_n`` and ``n`` distinct pivot columns
    ``v_1..v_n``, puts a nonzero at each ``(w_k, v_k)`` and keeps column
    ``v_k`` clear of rows ranked after ``w_k``.  The remaining ``nu - n``
    positions are uniform over the allowed cells.  Removing ``w_1, w_2, ...``
    in order always finds a column with a single active row, so the result
    passes the eigenvalue-zero test by construction.

``auto`` uses ``reject`` when nothing is required and ``planted`` otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import GenerationFailed
from .sparse_core import CcsPattern, build_ccs_arrays
from .verifier import verify_mode

REQUIREMENTS = ("none", "ssc_lambda0", "ssc_full")
METHODS = ("auto", "reject", "planted")


@dataclass(frozen=True)
class GenSpec:
    n: int
    r: int
    nu: int
    seed: int = 0
    require: str = "none"
    max_attempts: int = 100
    method: str = "auto"

    def __post_init__(self):
        if self.n < 0 or self.r < 0 or self.nu < 0:
            raise ValueError("n, r, nu must be non-negative")
        if self.nu > self.n * (self.n + self.r):
            raise ValueError(f"nu={self.nu} exceeds the grid size {self.n * (self.n + self.r)}")
        if self.max_attempts < 1:
            raise ValueError("max_attempts must be >= 1")
        if self.require not in REQUIREMENTS:
            raise ValueError(f"require must be one of {REQUIREMENTS}")
        if self.method not in METHODS:
            raise ValueError(f"method must be one of {METHODS}")


@dataclass
class Generated:
    pattern: CcsPattern
    n: int
    r: int
    seed: int
    attempts: int
    method: str

    @property
    def nu(self) -> int:
        return self.pattern.nu


def _uniform(n, m, nu, rng):
    pos = np.sort(rng.choice(n * m, size=nu, replace=False))
    return build_ccs_arrays(n, m, pos % n, pos // n)


def _planted(n, m, nu, rng):
    if nu < n or n > m:
        return None
    allowed_total = n * m - n * (n - 1) // 2
    if nu > allowed_total:
        return None
    row_rank = np.empty(n, dtype=np.int64)
    row_rank[rng.permutation(n)] = np.arange(n)
    pivots = rng.choice(m, size=n, replace=False)
    col_rank = np.full(m, n, dtype=np.int64)  # n: not a pivot column, any row allowed
    col_rank[pivots] = np.arange(n)
    order = np.argsort(row_rank)
    diag = pivots * n + order  # cell ids, column-major
    chosen = diag
    need = nu - n
    while need > 0:
        cand = rng.integers(0, n * m, size=max(2 * need, 64))
        ok = row_rank[cand % n] < col_rank[cand // n]
        cand = cand[ok]
        # first occurrence order keeps the draw sequence reproducible
        _, first = np.unique(cand, return_index=True)
        cand = cand[np.sort(first)]
        cand = cand[~np.isin(cand, chosen)]
        chosen = np.concatenate([chosen, cand[:need]])
        need = nu - chosen.size
    pos = np.sort(chosen)
    return build_ccs_arrays(n, m, pos % n, pos // n)


def _meets(x, n, require):
    if require == "none":
        return True
    if not verify_mode(x, n, 0).is_empty_witness:
        return False
    return require == "ssc_lambda0" or verify_mode(x, n, 1).is_empty_witness


def gen(spec: GenSpec) -> Generated:
    """Draw patterns until one meets ``spec.require``.

    Raises :class:`GenerationFailed` after ``spec.max_attempts`` draws.
    """
    rng = np.random.default_rng(spec.seed)
    n, m = spec.n, spec.n + spec.r
    method = spec.method
    if method == "auto":
        method = "reject" if spec.require == "none" else "planted"
    attempts = 0
    while attempts < spec.max_attempts:
        attempts += 1
        x = _uniform(n, m, spec.nu, rng) if method == "reject" else _planted(n, m, spec.nu, rng)
        if x is None:
            break
        if _meets(x, n, spec.require):
            return Generated(x, spec.n, spec.r, spec.seed, attempts, method)
    raise GenerationFailed(attempts, spec.require)

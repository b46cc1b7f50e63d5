"""Linear-time test of strong structural controllability.

Each mode repeatedly removes a row ``w`` from the active row set ``V``:

* mode 0 (eigenvalue zero): ``w`` is the only active row of some column;
* mode 1 (nonzero eigenvalues): ``w`` is an active row whose own column
  has no active rows, or else the only active row of a column outside
  ``V``.

The pair is strongly structurally controllable iff both modes end with
``V`` empty.  Per-column active sets live in the leading slots of each
column segment, so removing ``w`` costs O(1) per nonzero of row ``w`` and a
whole run is O(n + r + nu).
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass, field
from enum import IntEnum
from typing import Callable

import numpy as np

from . import _backend
from .errors import SscError
from .index_sets import MembershipFlags, SparseIndexSet
from .sparse_core import CcsPattern, LinkedPattern, build_linked, validate_links


class Mode(IntEnum):
    LAMBDA_ZERO = 0
    LAMBDA_NONZERO = 1


class LinkInvariantError(SscError, AssertionError):
    def __init__(self, violations):
        super().__init__("; ".join(v.message for v in violations[:5]))
        self.violations = violations


@dataclass
class VerifyOutcome:
    mode: int
    witness: list[int]
    ops: int
    removals: int

    @property
    def is_empty_witness(self) -> bool:
        return not self.witness


@dataclass
class IterationState:
    """Snapshot handed to ``on_iteration`` after each removal."""

    v: int | None  # column picked from T, None when w came from T0
    w: int
    t: SparseIndexSet
    t0: SparseIndexSet
    active: MembershipFlags
    pattern: LinkedPattern


@dataclass(frozen=True)
class SscReport:
    ssc: bool
    ssc_lambda0: bool
    ssc_nonzero: bool
    witness0: list[int] = field(default_factory=list)
    witness1: list[int] = field(default_factory=list)
    ops0: int = 0
    ops1: int = 0

    def to_dict(self) -> dict:
        return {
            "ssc": self.ssc,
            "ssc_lambda0": self.ssc_lambda0,
            "ssc_nonzero": self.ssc_nonzero,
            "witness0": list(self.witness0),
            "witness1": list(self.witness1),
            "ops0": self.ops0,
            "ops1": self.ops1,
        }


def _debug_validate() -> bool:
    return os.environ.get("SSC_DEBUG_VALIDATE", "") not in ("", "0")


def remove_active(p: LinkedPattern, w: int, j: int, l: int) -> None:
    """Drop row ``w`` from the active prefix of column ``j``; all 1-based.

    ``l`` is the row-store slot of entry ``(w, j)``.  Swaps ``w`` with the
    last active slot of the column (in both the row indices and the
    column-to-row links), repairs the two row-to-column links that pointed
    at the swapped slots, and decrements the active count.
    """
    s, s_link, z_link, c = p.indices, p.to_row, p.to_col, p.active_count
    j0, l0 = j - 1, l - 1
    assert p.rindptr[w - 1] <= l0 < p.rindptr[w] and p.rindices[l0] == j0, (
        f"slot {l} is not entry ({w}, {j})"
    )
    jt = z_link[l0]
    cj = int(c[j0])
    last = p.indptr[j0] + cj - 1
    assert p.indptr[j0] <= jt <= last, f"row {w} is not active in column {j}"
    k = s_link[last]
    if cj > 1:
        s[jt], s[last] = s[last], s[jt]
        s_link[jt], s_link[last] = s_link[last], s_link[jt]
        z_link[l0] = last
        z_link[k] = jt
    if cj > 0:
        c[j0] = cj - 1


def _run_traced(
    p: LinkedPattern,
    mode: int,
    rng: random.Random | None,
    validate: bool,
    on_iteration: Callable[[IterationState], None] | None,
) -> VerifyOutcome:
    """Readable run built on the index-set classes; supports hooks.

    Produces exactly the kernel's result when ``rng`` is None.
    """
    n, m = p.n, p.m
    c = p.active_count
    s, i_s, z, i_z = p.indices, p.indptr, p.rindices, p.rindptr
    t = SparseIndexSet(m)
    t0 = SparseIndexSet(n)
    active = MembershipFlags(m, range(1, n + 1))
    ops = 0

    if mode == 0:
        for v in range(m, 0, -1):
            if c[v - 1] == 1:
                t.insert(v)
    else:
        for v in range(m, n, -1):
            if c[v - 1] == 1:
                t.insert(v)
        for v in range(n, 0, -1):
            if c[v - 1] == 0:
                t0.insert(v)
    ops += m

    def pick(sset):
        return sset.pick() if rng is None else sset.choice(rng)

    removals = 0
    while len(active):
        ops += 1
        v = None
        if mode == 0 or t0.is_empty():
            if t.is_empty():
                break
            v = pick(t)
            w = int(s[i_s[v - 1]]) + 1
        else:
            w = pick(t0)
        row_cols = [int(j) + 1 for j in z[i_z[w - 1] : i_z[w]]]
        for idx, l in enumerate(range(i_z[w - 1] + 1, i_z[w] + 1)):
            ops += 1
            j = row_cols[idx]
            remove_active(p, w, j, l)
            if validate:
                rest = [e for e in active.members() if e != w]
                bad = validate_links(p, rest, pending=(w, row_cols[idx + 1 :]))
                if bad:
                    raise LinkInvariantError(bad)
            if c[j - 1] == 0:
                t.remove(j)
                if mode == 1 and j in active:
                    t0.insert(j)
            elif c[j - 1] == 1:
                if mode == 0 or j not in active:
                    t.insert(j)
        if mode == 1:
            if c[w - 1] == 1:
                t.insert(w)
            elif c[w - 1] == 0:
                t0.remove(w)
        active.discard(w)
        removals += 1
        if on_iteration is not None:
            on_iteration(IterationState(v, w, t, t0, active, p))
    ops += n
    witness = [e for e in active.members() if e <= n]
    return VerifyOutcome(int(mode), witness, ops, removals)


def run(
    p: LinkedPattern,
    mode: int,
    *,
    rng: random.Random | None = None,
    validate: bool | None = None,
    on_iteration: Callable[[IterationState], None] | None = None,
    backend: str | None = None,
) -> VerifyOutcome:
    """Run one mode on a freshly built ``p``; ``p`` is permuted in place.

    The default path is the compiled (or pure-Python) kernel.  Passing
    ``rng`` (random picks instead of LIFO), ``validate`` (check every link
    invariant after each single removal) or ``on_iteration`` switches to the
    traced implementation.  ``SSC_DEBUG_VALIDATE=1`` turns validation on.
    """
    mode = int(mode)
    if mode not in (0, 1):
        raise ValueError(f"mode must be 0 or 1, got {mode}")
    if validate is None:
        validate = _debug_validate()
    if rng is not None or validate or on_iteration is not None:
        return _run_traced(p, mode, rng, validate, on_iteration)
    k = _backend.kernel if backend is None else _backend.load_kernel(backend)
    active, removals, ops = k.run_mode(
        p.n,
        p.m,
        p.indices,
        p.indptr,
        p.rindices,
        p.rindptr,
        p.to_row,
        p.to_col,
        p.active_count,
        mode,
    )
    witness = (np.flatnonzero(active) + 1).tolist()
    return VerifyOutcome(mode, witness, int(ops), int(removals))


def verify_mode(x: CcsPattern, n: int, mode: int, **kwargs) -> VerifyOutcome:
    """Build the linked state from ``x`` and run one mode.

    ``ops`` of the result include the build (transpose and linking).
    """
    p = build_linked(x, n)
    out = run(p, mode, **kwargs)
    out.ops += p.build_ops
    return out


def is_ssc(x: CcsPattern, n: int, **kwargs) -> SscReport:
    """Both modes from scratch; SSC iff both witnesses are empty."""
    r0 = verify_mode(x, n, 0, **kwargs)
    r1 = verify_mode(x, n, 1, **kwargs)
    return SscReport(
        ssc=r0.is_empty_witness and r1.is_empty_witness,
        ssc_lambda0=r0.is_empty_witness,
        ssc_nonzero=r1.is_empty_witness,
        witness0=r0.witness,
        witness1=r1.witness,
        ops0=r0.ops,
        ops1=r1.ops,
    )

"""Compressed pattern storage for structural matrices ``X = (A, B)``.

Three layers:

* :class:`PatternTriplets` -- coordinate list of the nonzero positions,
* :class:`CcsPattern` -- compressed column storage of the pattern,
* :class:`LinkedPattern` -- the column store, the row store (the column
  store of the transpose) and two arrays linking each entry's slot in one
  to its slot in the other, plus per-column active counts.

Public indices (rows, columns, positions handed in and out) are 1-based.
The numpy arrays held by the dataclasses are 0-based in both slot and
value; :meth:`CcsPattern.one_based` and :meth:`LinkedPattern.one_based`
give the 1-based view.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from ._backend import kernel

INDEX_DTYPE = np.int32
MAX_ENTRIES = np.iinfo(INDEX_DTYPE).max
from .errors import DuplicateEntry, IndexOutOfRange


@dataclass(frozen=True)
class PatternTriplets:
    """Positions ``(i, j)`` of the nonzero entries, 1-based.

    ``i`` ranges over ``[1, n]`` and ``j`` over ``[1, n + r]``; columns
    ``n+1 .. n+r`` are the input columns.
    """

    n: int
    r: int
    entries: Sequence[tuple[int, int]] = ()

    @property
    def m(self) -> int:
        return self.n + self.r

    @property
    def nu(self) -> int:
        return len(self.entries)


@dataclass
class CcsPattern:
    """Compressed column storage of a 0/1 pattern.

    ``indices[indptr[j]:indptr[j+1]]`` are the (0-based) rows of the
    nonzero entries of column ``j``.  Row order inside a column is not
    normalised; it is whatever order the entries arrived in.
    """

    n_rows: int
    n_cols: int
    indices: np.ndarray
    indptr: np.ndarray

    def __post_init__(self):
        self.indices = np.ascontiguousarray(self.indices, dtype=INDEX_DTYPE)
        self.indptr = np.ascontiguousarray(self.indptr, dtype=INDEX_DTYPE)

    @property
    def nu(self) -> int:
        return int(self.indices.shape[0])

    @classmethod
    def from_one_based(cls, n_rows, n_cols, s, i_s):
        return cls(
            n_rows,
            n_cols,
            np.asarray(s, dtype=np.int64) - 1,
            np.asarray(i_s, dtype=np.int64) - 1,
        )

    @classmethod
    def from_dense(cls, grid) -> CcsPattern:
        """Column-major scan of a boolean matrix; rows increase in each column."""
        grid = np.asarray(grid, dtype=bool)
        n_rows, n_cols = grid.shape
        cols, rows = np.nonzero(grid.T)
        return build_ccs_arrays(n_rows, n_cols, rows, cols)

    def one_based(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """``(s, i_s)`` as 1-based tuples."""
        return tuple((self.indices + 1).tolist()), tuple((self.indptr + 1).tolist())

    def column(self, j: int) -> list[int]:
        """1-based rows of the nonzero entries of 1-based column ``j``."""
        lo, hi = self.indptr[j - 1], self.indptr[j]
        return (self.indices[lo:hi] + 1).tolist()

    def triplets(self) -> list[tuple[int, int]]:
        """Entries as 1-based ``(i, j)`` in storage order."""
        cols = np.repeat(np.arange(self.n_cols), np.diff(self.indptr))
        return list(zip((self.indices + 1).tolist(), (cols + 1).tolist()))

    def positions(self) -> set[tuple[int, int]]:
        return set(self.triplets())

    def to_dense(self) -> np.ndarray:
        grid = np.zeros((self.n_rows, self.n_cols), dtype=bool)
        cols = np.repeat(np.arange(self.n_cols), np.diff(self.indptr))
        grid[self.indices, cols] = True
        return grid

    def split(self, n: int) -> tuple[CcsPattern, CcsPattern]:
        """Split the columns into the state block ``A`` and the input block ``B``."""
        cut = int(self.indptr[n])
        a = CcsPattern(self.n_rows, n, self.indices[:cut].copy(), self.indptr[: n + 1].copy())
        b = CcsPattern(
            self.n_rows,
            self.n_cols - n,
            self.indices[cut:].copy(),
            self.indptr[n:] - cut,
        )
        return a, b

    def hstack(self, other: CcsPattern) -> CcsPattern:
        if other.n_rows != self.n_rows:
            raise ValueError("row counts differ")
        return CcsPattern(
            self.n_rows,
            self.n_cols + other.n_cols,
            np.concatenate([self.indices, other.indices]),
            np.concatenate([self.indptr, other.indptr[1:] + self.nu]),
        )


@dataclass
class LinkedPattern:
    """Working state of the verifier.

    ``indices``/``indptr`` store the pattern by columns, ``rindices``/
    ``rindptr`` by rows.  ``to_row[k]`` is the slot in the row store of the
    entry held in column-store slot ``k``; ``to_col`` is the reverse map.
    ``active_count[v]`` is how many of the leading slots of column ``v``
    hold rows that are still active.

    Arrays are 0-based and mutated in place by :func:`verifier.remove_active`.
    """

    n: int
    r: int
    indices: np.ndarray
    indptr: np.ndarray
    rindices: np.ndarray
    rindptr: np.ndarray
    to_row: np.ndarray
    to_col: np.ndarray
    active_count: np.ndarray
    build_ops: int = field(default=0, compare=False)

    @property
    def m(self) -> int:
        return self.n + self.r

    @property
    def nu(self) -> int:
        return int(self.indices.shape[0])

    def copy(self) -> LinkedPattern:
        return LinkedPattern(
            self.n,
            self.r,
            self.indices.copy(),
            self.indptr.copy(),
            self.rindices.copy(),
            self.rindptr.copy(),
            self.to_row.copy(),
            self.to_col.copy(),
            self.active_count.copy(),
            self.build_ops,
        )

    def one_based(self) -> dict[str, tuple[int, ...]]:
        """All arrays as 1-based tuples (``active_count`` is a count, left as is)."""

        def shift(a):
            return tuple((a + 1).tolist())

        return {
            "s": shift(self.indices),
            "i_s": shift(self.indptr),
            "z": shift(self.rindices),
            "i_z": shift(self.rindptr),
            "s_link": shift(self.to_row),
            "z_link": shift(self.to_col),
            "c": tuple(self.active_count.tolist()),
        }


def build_ccs_arrays(n_rows, n_cols, rows, cols) -> CcsPattern:
    """Build a :class:`CcsPattern` from 0-based coordinate arrays."""
    rows = np.asarray(rows, dtype=np.int64)
    cols = np.asarray(cols, dtype=np.int64)
    if rows.shape != cols.shape:
        raise ValueError("rows and cols must have the same length")
    if max(rows.size, n_rows, n_cols) >= MAX_ENTRIES:
        raise ValueError(f"pattern too large for 32-bit indices (limit {MAX_ENTRIES - 1})")
    if rows.size:
        bad = (rows < 0) | (rows >= n_rows) | (cols < 0) | (cols >= n_cols)
        if bad.any():
            k = int(np.flatnonzero(bad)[0])
            raise IndexOutOfRange(
                f"entry ({rows[k] + 1}, {cols[k] + 1}) outside {n_rows}x{n_cols}"
            )
    s, i_s = kernel.bucket_columns(rows, cols, n_cols)
    dup = kernel.first_duplicate(n_rows, n_cols, s, i_s)
    if dup >= 0:
        j = int(np.searchsorted(i_s, dup, side="right")) - 1
        raise DuplicateEntry(int(s[dup]) + 1, j + 1)
    return CcsPattern(n_rows, n_cols, s, i_s)


def build_ccs(t: PatternTriplets) -> CcsPattern:
    """Column-compress a triplet list.

    Entries of one column keep their relative input order, so feeding the
    triplets column by column reproduces any desired within-column order.
    """
    if t.n < 0 or t.r < 0:
        raise ValueError("dimensions must be non-negative")
    if t.entries:
        arr = np.asarray(t.entries, dtype=np.int64).reshape(-1, 2)
        rows, cols = arr[:, 0] - 1, arr[:, 1] - 1
    else:
        rows = cols = np.empty(0, dtype=np.int64)
    return build_ccs_arrays(t.n, t.m, rows, cols)


def transpose(x: CcsPattern) -> CcsPattern:
    """Gustavson transpose; within each output column the indices increase."""
    z, i_z, *_ = kernel.transpose_link(x.n_rows, x.n_cols, x.indices, x.indptr)
    return CcsPattern(x.n_cols, x.n_rows, z, i_z)


def build_linked(x: CcsPattern, n: int) -> LinkedPattern:
    """Build the full linked state with every row active."""
    if x.n_rows != n or x.n_cols < n:
        raise ValueError(f"expected an {n} x (n + r) pattern, got {x.n_rows} x {x.n_cols}")
    z, i_z, to_row, to_col, c, ops = kernel.transpose_link(n, x.n_cols, x.indices, x.indptr)
    return LinkedPattern(
        n,
        x.n_cols - n,
        x.indices.copy(),
        x.indptr.copy(),
        z,
        i_z,
        to_row,
        to_col,
        c,
        build_ops=int(ops),
    )


class Violation(NamedTuple):
    rule: str
    position: int  # 1-based slot or column, depending on rule
    message: str


def _active_mask(active, n) -> np.ndarray:
    mask = np.zeros(n, dtype=bool)
    flags = getattr(active, "flags", None)
    if flags is not None:
        mask[:] = np.frombuffer(bytes(flags[:n]), dtype=np.uint8).astype(bool)
        return mask
    rows = np.fromiter(active, dtype=np.int64) - 1
    mask[rows] = True
    return mask


def _offsets_ok(ptr, length, total, name, out):
    if ptr.shape[0] != length + 1:
        out.append(Violation("offsets", 0, f"{name} has length {ptr.shape[0]}, want {length + 1}"))
        return False
    if ptr[0] != 0 or ptr[-1] != total or np.any(np.diff(ptr) < 0):
        out.append(Violation("offsets", 0, f"{name} is not a valid offset array"))
        return False
    return True


def validate_links(
    p: LinkedPattern,
    active: Iterable[int] | object,
    pending: tuple[int, Iterable[int]] | None = None,
) -> list[Violation]:
    """Check every structural invariant of ``p`` for the given active rows.

    ``active`` is a :class:`~sscverify.index_sets.MembershipFlags` or an
    iterable of 1-based row indices.  ``pending=(w, cols)`` marks a row
    ``w`` that is being removed: it still counts as active in the 1-based
    columns ``cols`` and as inactive elsewhere.  Returns an empty list when
    the state is consistent.  Debug/test helper; O(n + r + nu) per call.

    Rules reported:

    ``offsets``        column/row offset arrays malformed
    ``row-link-slot``  ``to_row[k]`` is not a slot of row ``indices[k]``
    ``row-link-col``   ``rindices[to_row[k]]`` is not the column of slot ``k``
    ``col-link-slot``  ``to_col[l]`` is not a slot of column ``rindices[l]``
    ``col-link-row``   ``indices[to_col[l]]`` is not the row of slot ``l``
    ``involution``     ``to_col`` and ``to_row`` are not mutually inverse
    ``active-prefix``  leading ``active_count[v]`` slots of column ``v`` are
                       not exactly its active rows
    ``column-repeat``  a row appears twice in one column
    """
    out: list[Violation] = []
    n, m, nu = p.n, p.m, p.nu
    if not (
        _offsets_ok(p.indptr, m, nu, "column offsets", out)
        & _offsets_ok(p.rindptr, n, nu, "row offsets", out)
    ):
        return out
    for name, arr in (("to_row", p.to_row), ("to_col", p.to_col), ("rindices", p.rindices)):
        if arr.shape[0] != nu:
            out.append(Violation("offsets", 0, f"{name} has length {arr.shape[0]}, want {nu}"))
    if out:
        return out
    if nu and ((p.indices < 0).any() or (p.indices >= n).any()):
        out.append(Violation("offsets", 0, "row index out of range"))
    if nu and ((p.rindices < 0).any() or (p.rindices >= m).any()):
        out.append(Violation("offsets", 0, "column index out of range"))
    for name, arr in (("to_row", p.to_row), ("to_col", p.to_col)):
        if nu and ((arr < 0).any() or (arr >= nu).any()):
            out.append(Violation("offsets", 0, f"{name} points outside [1, nu]"))
    if out:
        return out

    col_of = np.repeat(np.arange(m), np.diff(p.indptr))
    row_of = np.repeat(np.arange(n), np.diff(p.rindptr))
    slots = np.arange(nu)

    def report(rule, bad, fmt):
        for k in np.flatnonzero(bad).tolist():
            out.append(Violation(rule, k + 1, fmt(k)))

    # slot k of the column store
    tr = p.to_row
    report(
        "row-link-slot",
        (tr < p.rindptr[p.indices]) | (tr >= p.rindptr[p.indices + 1]),
        lambda k: f"to_row({k + 1})={tr[k] + 1} is not a slot of row {p.indices[k] + 1}",
    )
    report(
        "row-link-col",
        p.rindices[tr] != col_of,
        lambda k: f"rindices(to_row({k + 1}))={p.rindices[tr[k]] + 1}, want {col_of[k] + 1}",
    )
    tc = p.to_col
    report(
        "col-link-slot",
        (tc < p.indptr[p.rindices]) | (tc >= p.indptr[p.rindices + 1]),
        lambda l: f"to_col({l + 1})={tc[l] + 1} is not a slot of column {p.rindices[l] + 1}",
    )
    report(
        "col-link-row",
        p.indices[tc] != row_of,
        lambda l: f"indices(to_col({l + 1}))={p.indices[tc[l]] + 1}, want {row_of[l] + 1}",
    )
    report(
        "involution",
        (tc[tr] != slots) | (tr[tc] != slots),
        lambda k: f"to_col/to_row not inverse at slot {k + 1}",
    )

    # repeated rows within a column
    if nu:
        key = col_of * max(n, 1) + p.indices
        uniq, counts = np.unique(key, return_counts=True)
        for kk in uniq[counts > 1].tolist():
            out.append(
                Violation("column-repeat", kk // max(n, 1) + 1, f"row {kk % max(n, 1) + 1} repeated")
            )

    mask = _active_mask(active, n)
    c = p.active_count
    length = np.diff(p.indptr)
    bad_c = (c < 0) | (c > length)
    for v in np.flatnonzero(bad_c).tolist():
        out.append(Violation("active-prefix", v + 1, f"count {c[v]} outside [0, {length[v]}]"))
    if nu:
        in_prefix = (slots - p.indptr[col_of]) < c[col_of]
        expect = mask[p.indices]
        if pending is not None:
            w, cols = pending
            still = np.zeros(m, dtype=bool)
            still[np.fromiter(cols, dtype=np.int64) - 1] = True
            expect = expect | ((p.indices == w - 1) & still[col_of])
        wrong = in_prefix != expect
        for v in np.unique(col_of[wrong]).tolist():
            out.append(
                Violation(
                    "active-prefix",
                    v + 1,
                    f"leading {c[v]} slots of column {v + 1} are not its active rows",
                )
            )
    return out

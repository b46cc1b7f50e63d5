"""Matrix Market ``coordinate pattern general`` reader and writer.

Entries are kept in file order, so a written pattern reads back with the
same within-column order.
"""

from __future__ import annotations

import io
import os
from typing import TextIO

import numpy as np

from .errors import PatternFormatError
from .sparse_core import CcsPattern, build_ccs_arrays

HEADER = "%%MatrixMarket matrix coordinate pattern general"


def _open(src, mode="r"):
    if isinstance(src, (str, os.PathLike)):
        return open(src, mode), True
    return src, False


def read_coords(src) -> tuple[int, int, np.ndarray, np.ndarray]:
    """Read ``(n_rows, n_cols, rows, cols)``; rows/cols are 0-based, file order."""
    fh, owned = _open(src)
    try:
        return _read(fh)
    finally:
        if owned:
            fh.close()


def _read(fh: TextIO):
    name = getattr(fh, "name", "<stream>")
    header = fh.readline()
    tokens = header.split()
    if len(tokens) != 5 or tokens[0] != "%%MatrixMarket":
        raise PatternFormatError(f"{name}: missing %%MatrixMarket header")
    obj, fmt, field, symmetry = (t.lower() for t in tokens[1:])
    if obj != "matrix" or fmt != "coordinate":
        raise PatternFormatError(f"{name}: expected 'matrix coordinate', got '{obj} {fmt}'")
    if field != "pattern":
        raise PatternFormatError(f"{name}: field must be 'pattern', got '{field}'")
    if symmetry != "general":
        raise PatternFormatError(f"{name}: only 'general' symmetry is supported, got '{symmetry}'")

    size = None
    rows: list[int] = []
    cols: list[int] = []
    for lineno, line in enumerate(fh, start=2):
        line = line.strip()
        if not line or line.startswith("%"):
            continue
        parts = line.split()
        try:
            vals = [int(p) for p in parts]
        except ValueError:
            raise PatternFormatError(f"{name}:{lineno}: non-integer token in {line!r}") from None
        if size is None:
            if len(vals) != 3 or min(vals) < 0:
                raise PatternFormatError(f"{name}:{lineno}: bad size line {line!r}")
            size = vals
            continue
        if len(vals) != 2:
            raise PatternFormatError(f"{name}:{lineno}: pattern entries take two indices, got {line!r}")
        i, j = vals
        if not (1 <= i <= size[0] and 1 <= j <= size[1]):
            raise PatternFormatError(f"{name}:{lineno}: entry ({i}, {j}) outside {size[0]}x{size[1]}")
        rows.append(i - 1)
        cols.append(j - 1)
    if size is None:
        raise PatternFormatError(f"{name}: missing size line")
    if len(rows) != size[2]:
        raise PatternFormatError(f"{name}: header says {size[2]} entries, found {len(rows)}")
    return size[0], size[1], np.asarray(rows, dtype=np.int64), np.asarray(cols, dtype=np.int64)


def parse_pattern(a_src, b_src=None, state_dim: int | None = None) -> tuple[CcsPattern, int, int]:
    """Load ``(A, B)`` and return ``(pattern, n, r)``.

    Forms accepted:

    * ``a_src`` and ``b_src``: ``A`` is ``n x n``, ``B`` is ``n x r``;
    * ``a_src`` with ``state_dim=n``: one combined ``n x (n + r)`` file;
    * ``a_src`` alone and square: ``A`` with no input columns.
    """
    na, ma, ra, ca = read_coords(a_src)
    if b_src is not None:
        if state_dim is not None and state_dim != na:
            raise PatternFormatError(f"--state-dim {state_dim} disagrees with A ({na} rows)")
        if na != ma:
            raise PatternFormatError(f"A must be square, got {na}x{ma}")
        nb, mb, rb, cb = read_coords(b_src)
        if nb != na:
            raise PatternFormatError(f"B has {nb} rows, A has {na}")
        n, r = na, mb
        rows = np.concatenate([ra, rb])
        cols = np.concatenate([ca, cb + n])
    elif state_dim is not None:
        if na != state_dim or ma < state_dim:
            raise PatternFormatError(
                f"combined file is {na}x{ma}, incompatible with --state-dim {state_dim}"
            )
        n, r = state_dim, ma - state_dim
        rows, cols = ra, ca
    else:
        if na != ma:
            raise PatternFormatError(
                f"{na}x{ma} is not square; pass --state-dim for a combined (A, B) file"
            )
        n, r = na, 0
        rows, cols = ra, ca
    return build_ccs_arrays(n, n + r, rows, cols), n, r


def write_pattern(dst, x: CcsPattern, comments: tuple[str, ...] = ()) -> None:
    """Write ``x`` with entries in storage order."""
    fh, owned = _open(dst, "w")
    try:
        fh.write(HEADER + "\n")
        for c in comments:
            fh.write(f"% {c}\n")
        fh.write(f"{x.n_rows} {x.n_cols} {x.nu}\n")
        buf = io.StringIO()
        for i, j in x.triplets():
            buf.write(f"{i} {j}\n")
        fh.write(buf.getvalue())
    finally:
        if owned:
            fh.close()


def format_pattern(x: CcsPattern, comments: tuple[str, ...] = ()) -> str:
    buf = io.StringIO()
    write_pattern(buf, x, comments)
    return buf.getvalue()

import itertools
from pathlib import Path

import numpy as np
import pytest

from sscverify.sparse_core import PatternTriplets, build_ccs, build_ccs_arrays

DATA = Path(__file__).parent / "data"

EXAMPLE_A = [(1, 4), (2, 2), (3, 1), (4, 6), (5, 1), (6, 4)]
EXAMPLE_B = [(2, 1), (3, 1), (6, 2)]


def example_dense():
    grid = np.zeros((6, 8), dtype=bool)
    for i, j in EXAMPLE_A:
        grid[i - 1, j - 1] = True
    for i, j in EXAMPLE_B:
        grid[i - 1, 6 + j - 1] = True
    return grid


def example_triplets():
    """Column-major listing; yields s = (3,5,2,1,6,4,2,3,6)."""
    grid = example_dense()
    entries = [(i + 1, j + 1) for j in range(8) for i in range(6) if grid[i, j]]
    return PatternTriplets(6, 2, entries)


@pytest.fixture
def example_ccs():
    return build_ccs(example_triplets())


def random_pattern(rng, n, r, density=None, shuffle=True):
    """Random pattern with random within-column order."""
    m = n + r
    if density is None:
        density = rng.uniform(0.0, 1.0)
    grid = rng.random((n, m)) < density
    rows, cols = np.nonzero(grid)
    if shuffle and rows.size:
        perm = rng.permutation(rows.size)
        rows, cols = rows[perm], cols[perm]
    return build_ccs_arrays(n, m, rows, cols)


def all_grids(n, m):
    """Every n x m boolean matrix."""
    for bits in itertools.product((False, True), repeat=n * m):
        yield np.array(bits, dtype=bool).reshape(n, m)


def brute_links(x):
    """Link arrays straight from their definitions, by search.

    Row store: scan the dense grid row by row with columns increasing.
    to_row[k]: the row-store slot holding the same (row, column) entry as
    column-store slot k; to_col is the reverse lookup.
    """
    grid = x.to_dense()
    n, m = grid.shape
    z, i_z = [], [0]
    for i in range(n):
        for j in range(m):
            if grid[i, j]:
                z.append(j)
        i_z.append(len(z))
    col_of = np.repeat(np.arange(m), np.diff(x.indptr))
    row_entries = [(i, z[l]) for i in range(n) for l in range(i_z[i], i_z[i + 1])]
    col_entries = list(zip(x.indices.tolist(), col_of.tolist()))
    to_row = [row_entries.index(e) for e in col_entries]
    to_col = [col_entries.index(e) for e in row_entries]
    return z, i_z, to_row, to_col

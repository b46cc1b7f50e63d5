from itertools import combinations

import numpy as np
import pytest

from sscverify.errors import ExhaustionBoundExceeded
from sscverify.oracle import (
    DensePattern,
    check_g0,
    check_g1,
    hautus_spotcheck,
    naive_removal,
    nzc,
    nzr,
)

from .conftest import all_grids, example_dense


@pytest.fixture
def example():
    return DensePattern(6, 2, example_dense())


def test_nzr_example(example):
    assert nzr(example, 1) == {3, 5}
    assert nzr(example, 7) == {2, 3}


def test_nzc(example):
    assert nzc(example, set()) == set()
    assert nzc(example, {2}) == {2, 7}


def test_conditions_example(example):
    assert check_g0(example)
    assert check_g1(example)


def test_all_zero_single_state():
    d = DensePattern(1, 0, [[False]])
    assert not check_g0(d)
    assert naive_removal(d, 0) == [1]
    assert not hautus_spotcheck(d, trials=10)


def test_self_loop_single_state():
    d = DensePattern(1, 0, [[True]])
    assert check_g0(d)
    assert not check_g1(d)
    assert naive_removal(d, 0) == []
    assert naive_removal(d, 1) == [1]


def test_single_input():
    d = DensePattern.from_blocks([[False]], [[True]])
    assert check_g0(d) and check_g1(d)
    assert hautus_spotcheck(d, trials=50)


def test_naive_example(example):
    assert naive_removal(example, 0) == []
    assert naive_removal(example, 1) == []


def test_naive_no_entries():
    d = DensePattern(2, 1, np.zeros((2, 3), dtype=bool))
    assert naive_removal(d, 0) == [1, 2]
    # lam*I - 0 is nonsingular for every lam != 0
    assert naive_removal(d, 1) == []
    assert check_g1(d)


def test_hautus_example(example):
    assert hautus_spotcheck(example, trials=100, seed=1)


def test_hautus_needs_trials(example):
    with pytest.raises(ValueError):
        hautus_spotcheck(example, trials=0)


def test_exhaustion_bound():
    d = DensePattern(5, 0, np.eye(5, dtype=bool))
    with pytest.raises(ExhaustionBoundExceeded):
        check_g0(d, bound=4)
    with pytest.raises(ExhaustionBoundExceeded):
        check_g1(d, bound=4)


def _literal_g(d, mode):
    """Conditions spelled out with Python sets."""
    rows = range(1, d.n + 1)
    for size in range(1, d.n + 1):
        for v in map(set, combinations(rows, size)):
            if mode == 1 and not v <= nzc(d, v):
                continue
            cols = range(1, d.m + 1) if mode == 0 else [j for j in range(1, d.m + 1) if j not in v]
            if not any(len(v & nzr(d, j)) == 1 for j in cols):
                return False
    return True


@pytest.mark.parametrize("n,r", [(1, 0), (1, 1), (2, 0), (2, 1), (3, 0)])
def test_bitmask_conditions_match_literal_sets(n, r):
    for grid in all_grids(n, n + r):
        d = DensePattern(n, r, grid)
        assert check_g0(d) == _literal_g(d, 0)
        assert check_g1(d) == _literal_g(d, 1)


@pytest.mark.parametrize("n,r", [(2, 1), (3, 0)])
def test_naive_matches_conditions_exhaustive(n, r):
    for grid in all_grids(n, n + r):
        d = DensePattern(n, r, grid)
        assert (naive_removal(d, 0) == []) == check_g0(d)
        assert (naive_removal(d, 1) == []) == check_g1(d)


def test_hautus_one_sided_on_ssc_patterns():
    rng = np.random.default_rng(5)
    hits = 0
    for _ in range(300):
        n, r = int(rng.integers(1, 5)), int(rng.integers(0, 3))
        d = DensePattern(n, r, rng.random((n, n + r)) < 0.5)
        if check_g0(d) and check_g1(d):
            hits += 1
            assert hautus_spotcheck(d, trials=30, seed=int(rng.integers(1 << 30)))
    assert hits > 10

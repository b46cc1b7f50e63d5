import numpy as np
import pytest

from sscverify.errors import BudgetExceeded, NoSolutionWithin
from sscverify.min_input import MinBQuery, column_masks, masks_to_pattern, min_columns
from sscverify.oracle import DensePattern, check_g0, check_g1
from sscverify.sparse_core import CcsPattern
from sscverify.verifier import is_ssc

from .conftest import example_dense


@pytest.fixture
def example_a():
    return CcsPattern.from_dense(example_dense()[:, :6])


def test_column_masks():
    assert column_masks(3) == [1, 2, 3, 4, 5, 6, 7]
    assert column_masks(3, 1) == [1, 2, 4]
    assert len(column_masks(6)) == 63


def test_masks_to_pattern():
    b = masks_to_pattern(3, [5, 2])
    assert b.to_dense().tolist() == [[True, False], [False, True], [True, False]]


def test_example_needs_two_columns(example_a):
    res = min_columns(MinBQuery(example_a, max_r=3))
    assert res.r_min == 2
    assert is_ssc(example_a.hstack(res.b), 6).ssc
    assert res.elapsed < 1.0
    # the input pattern printed with the example is one valid answer
    given_b = CcsPattern.from_dense(example_dense()[:, 6:])
    assert is_ssc(example_a.hstack(given_b), 6).ssc


def test_example_dedicated_inputs_need_three(example_a):
    res = min_columns(MinBQuery(example_a, max_r=3, max_stars_per_column=1))
    assert res.r_min == 3
    assert res.b.to_dense().sum(axis=0).tolist() == [1, 1, 1]
    assert is_ssc(example_a.hstack(res.b), 6).ssc


def test_example_single_column_impossible(example_a):
    with pytest.raises(NoSolutionWithin) as err:
        min_columns(MinBQuery(example_a, max_r=1))
    assert err.value.candidates_tested == 63
    # independent confirmation with the subset-enumeration oracle
    a = example_dense()[:, :6]
    for mask in range(1, 64):
        col = np.array([[mask >> i & 1] for i in range(6)], dtype=bool)
        d = DensePattern.from_blocks(a, col)
        assert not (check_g0(d) and check_g1(d))


def test_single_state():
    res = min_columns(MinBQuery(CcsPattern.from_dense([[False]])))
    assert res.r_min == 1
    assert res.b.to_dense().tolist() == [[True]]


def test_parallel_matches_sequential(example_a):
    seq = min_columns(MinBQuery(example_a))
    par = min_columns(MinBQuery(example_a, parallelism=2))
    assert par.r_min == seq.r_min
    assert np.array_equal(par.b.to_dense(), seq.b.to_dense())


def test_budget(example_a):
    with pytest.raises(BudgetExceeded) as err:
        min_columns(MinBQuery(example_a, max_r=3, budget=100))
    assert err.value.searched_r == 1


def test_query_validation(example_a):
    with pytest.raises(ValueError):
        MinBQuery(example_a, max_r=0)
    with pytest.raises(ValueError):
        MinBQuery(CcsPattern.from_dense(np.ones((2, 3), dtype=bool)))


def test_restriction_never_helps():
    rng = np.random.default_rng(4)
    for _ in range(40):
        n = int(rng.integers(1, 5))
        a = CcsPattern.from_dense(rng.random((n, n)) < 0.4)
        free = min_columns(MinBQuery(a, max_r=n))
        dedicated = min_columns(MinBQuery(a, max_r=n, max_stars_per_column=1))
        assert dedicated.r_min >= free.r_min
        for res in (free, dedicated):
            assert is_ssc(a.hstack(res.b), n).ssc


def test_minimum_is_exact_by_oracle():
    rng = np.random.default_rng(21)
    for _ in range(15):
        n = int(rng.integers(1, 4))
        grid = rng.random((n, n)) < 0.5
        res = min_columns(MinBQuery(CcsPattern.from_dense(grid), max_r=n))
        if res.r_min == 1:
            continue
        # no single column works, checked by subset enumeration
        for mask in range(1, 1 << n):
            col = np.array([[mask >> i & 1] for i in range(n)], dtype=bool)
            d = DensePattern.from_blocks(grid, col)
            assert not (check_g0(d) and check_g1(d))

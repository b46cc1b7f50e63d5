import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sscverify.errors import DuplicateEntry, IndexOutOfRange
from sscverify.index_sets import MembershipFlags
from sscverify.sparse_core import (
    CcsPattern,
    PatternTriplets,
    build_ccs,
    build_linked,
    transpose,
    validate_links,
)

from .conftest import brute_links, example_dense, example_triplets, random_pattern


def test_build_ccs_example(example_ccs):
    s, i_s = example_ccs.one_based()
    assert s[:3] == (3, 5, 2)
    assert i_s[0] == 1 and i_s[1] == 3
    assert s[2] == 2
    assert s == (3, 5, 2, 1, 6, 4, 2, 3, 6)


def test_build_ccs_offsets_match_column_counts(example_ccs):
    counts = example_dense().sum(axis=0)
    expected = (1 + np.concatenate([[0], np.cumsum(counts)])).tolist()
    assert expected == [1, 3, 4, 4, 6, 6, 7, 9, 10]
    assert example_ccs.one_based()[1] == tuple(expected)


def test_build_ccs_empty():
    x = build_ccs(PatternTriplets(1, 0, []))
    assert x.one_based() == ((), (1, 1))
    assert x.nu == 0


def test_build_ccs_keeps_input_order_within_columns():
    x = build_ccs(PatternTriplets(3, 0, [(3, 1), (1, 2), (1, 1), (2, 1)]))
    assert x.column(1) == [3, 1, 2]
    assert x.column(2) == [1]


def test_build_ccs_duplicate():
    with pytest.raises(DuplicateEntry) as err:
        build_ccs(PatternTriplets(2, 1, [(1, 1), (2, 3), (1, 1)]))
    assert (err.value.i, err.value.j) == (1, 1)


@pytest.mark.parametrize("entry", [(0, 1), (3, 1), (1, 0), (1, 4)])
def test_build_ccs_out_of_range(entry):
    with pytest.raises(IndexOutOfRange):
        build_ccs(PatternTriplets(2, 1, [entry]))


def test_round_trip_to_triplets():
    t = example_triplets()
    assert build_ccs(t).triplets() == list(t.entries)


def test_transpose_example(example_ccs):
    xt = transpose(example_ccs)
    z, i_z, _, _ = brute_links(example_ccs)
    assert (xt.indices + 1).tolist() == [v + 1 for v in z] == [4, 2, 7, 1, 7, 6, 1, 4, 8]
    assert (xt.indptr + 1).tolist() == [v + 1 for v in i_z] == [1, 2, 4, 6, 7, 8, 10]


def test_transpose_singleton():
    x = CcsPattern.from_dense([[True]])
    assert transpose(x).one_based() == x.one_based()


def test_transpose_preserves_nu_and_is_involution():
    rng = np.random.default_rng(7)
    for _ in range(200):
        x = random_pattern(rng, int(rng.integers(1, 9)), int(rng.integers(0, 4)))
        xt = transpose(x)
        assert xt.nu == x.nu
        assert (xt.n_rows, xt.n_cols) == (x.n_cols, x.n_rows)
        assert transpose(xt).positions() == x.positions()
        # rows of each transposed column come out increasing
        for j in range(xt.n_cols):
            seg = xt.indices[xt.indptr[j] : xt.indptr[j + 1]]
            assert np.all(np.diff(seg) > 0)


def test_build_linked_example(example_ccs):
    p = build_linked(example_ccs, 6)
    ob = p.one_based()
    assert ob["s_link"] == (4, 7, 2, 1, 8, 6, 3, 5, 9)
    assert ob["z_link"] == (4, 3, 7, 1, 8, 6, 2, 5, 9)
    assert ob["c"] == (2, 1, 0, 2, 0, 1, 2, 1)
    _, _, to_row, to_col = brute_links(example_ccs)
    assert [v + 1 for v in to_row] == list(ob["s_link"])
    assert [v + 1 for v in to_col] == list(ob["z_link"])


def test_build_linked_empty():
    p = build_linked(build_ccs(PatternTriplets(1, 0, [])), 1)
    assert p.one_based()["s_link"] == ()
    assert p.one_based()["z_link"] == ()
    assert p.one_based()["c"] == (0,)
    assert validate_links(p, [1]) == []


def test_build_linked_matches_definitions_random():
    rng = np.random.default_rng(11)
    for _ in range(150):
        n, r = int(rng.integers(1, 7)), int(rng.integers(0, 3))
        x = random_pattern(rng, n, r)
        p = build_linked(x, n)
        z, i_z, to_row, to_col = brute_links(x)
        assert p.rindices.tolist() == z
        assert p.rindptr.tolist() == i_z
        assert p.to_row.tolist() == to_row
        assert p.to_col.tolist() == to_col
        assert p.active_count.tolist() == np.diff(x.indptr).tolist()
        assert validate_links(p, range(1, n + 1)) == []


def test_build_linked_op_count_is_linear():
    rng = np.random.default_rng(3)
    for _ in range(50):
        n, r = int(rng.integers(1, 40)), int(rng.integers(0, 10))
        x = random_pattern(rng, n, r, density=rng.uniform(0, 0.5))
        p = build_linked(x, n)
        assert p.build_ops == 3 * x.nu + n + 2 * (n + r)


def test_validate_links_flags_corrupt_link(example_ccs):
    p = build_linked(example_ccs, 6)
    p.to_row[4] = p.to_row[5]
    bad = validate_links(p, range(1, 7))
    assert any(v.rule == "involution" and v.position == 5 for v in bad)


def test_validate_links_flags_bad_count(example_ccs):
    p = build_linked(example_ccs, 6)
    bad = validate_links(p, [1, 3, 4, 5, 6])
    assert {v.position for v in bad if v.rule == "active-prefix"} == {2, 7}


def test_validate_links_accepts_membership_flags(example_ccs):
    p = build_linked(example_ccs, 6)
    assert validate_links(p, MembershipFlags(8, range(1, 7))) == []


@settings(max_examples=200, deadline=None)
@given(
    n=st.integers(1, 6),
    r=st.integers(0, 3),
    data=st.data(),
)
def test_round_trip_property(n, r, data):
    cells = data.draw(
        st.lists(
            st.tuples(st.integers(1, n), st.integers(1, n + r)), unique=True, max_size=n * (n + r)
        )
    )
    x = build_ccs(PatternTriplets(n, r, cells))
    assert x.positions() == set(cells)
    by_col = sorted(cells, key=lambda e: e[1])  # stable: keeps input order per column
    assert x.triplets() == by_col

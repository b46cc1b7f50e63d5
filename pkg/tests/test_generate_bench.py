import io

import numpy as np
import pytest

from sscverify.bench import (
    CSV_FIELDS,
    BenchRecord,
    bench_cells,
    linear_fit,
    median_by,
    read_csv,
    write_csv,
)
from sscverify.errors import GenerationFailed
from sscverify.generate import GenSpec, gen
from sscverify.sparse_core import build_linked
from sscverify.verifier import run, verify_mode


def test_seed_reproducible():
    a = gen(GenSpec(40, 8, 300, seed=5))
    b = gen(GenSpec(40, 8, 300, seed=5))
    c = gen(GenSpec(40, 8, 300, seed=6))
    assert a.pattern.one_based() == b.pattern.one_based()
    assert a.pattern.positions() != c.pattern.positions()
    assert a.nu == 300


def test_no_requirement_takes_first_draw():
    g = gen(GenSpec(20, 3, 50, seed=1))
    assert g.attempts == 1 and g.method == "reject"


def test_impossible_requirement_fails():
    with pytest.raises(GenerationFailed):
        gen(GenSpec(2, 0, 0, require="ssc_lambda0"))
    with pytest.raises(GenerationFailed) as err:
        gen(GenSpec(2, 0, 0, require="ssc_lambda0", method="reject", max_attempts=4))
    assert err.value.attempts == 4


@pytest.mark.parametrize(
    "kw", [dict(nu=-1), dict(nu=100), dict(max_attempts=0), dict(require="x"), dict(method="x")]
)
def test_spec_validation(kw):
    base = dict(n=3, r=1, nu=4)
    base.update(kw)
    with pytest.raises(ValueError):
        GenSpec(**base)


def test_planted_passes_lambda_zero():
    rng = np.random.default_rng(0)
    for _ in range(100):
        n, r = int(rng.integers(1, 30)), int(rng.integers(0, 6))
        cap = n * (n + r) - n * (n - 1) // 2
        nu = int(rng.integers(n, cap + 1))
        g = gen(GenSpec(n, r, nu, seed=int(rng.integers(1 << 30)), require="ssc_lambda0"))
        assert g.attempts == 1 and g.method == "planted"
        assert g.nu == nu
        assert verify_mode(g.pattern, n, 0).is_empty_witness


def test_benchmark_scale_pattern():
    g = gen(GenSpec(1000, 250, 50_000, seed=0, require="ssc_lambda0"))
    assert run(build_linked(g.pattern, 1000), 0).witness == []


def test_full_requirement_rechecks_nonzero_mode():
    g = gen(GenSpec(8, 2, 30, seed=3, require="ssc_full", max_attempts=200))
    assert verify_mode(g.pattern, 8, 0).is_empty_witness
    assert verify_mode(g.pattern, 8, 1).is_empty_witness


def test_bench_cells_and_csv():
    recs = list(bench_cells([(60, 10, 300)], seeds=[0, 1], repeats=1))
    assert len(recs) == 4
    assert all(r.verdict == "ssc-part" for r in recs if r.L == 0)
    buf = io.StringIO()
    write_csv(recs, buf)
    assert buf.getvalue().splitlines()[0] == ",".join(CSV_FIELDS)
    buf.seek(0)
    assert read_csv(buf) == sorted(recs, key=lambda r: (r.n, r.r, r.nu, r.seed, r.L))


def test_linear_fit():
    slope, intercept, r2 = linear_fit([1, 2, 3, 4], [3, 5, 7, 9])
    assert slope == pytest.approx(2) and intercept == pytest.approx(1) and r2 == pytest.approx(1)
    assert linear_fit([1, 2], [4, 4])[2] == 1.0


def test_median_by():
    recs = [BenchRecord(1, 0, nu, 0, 0, t, 0, 0, "witness") for nu, t in [(5, 1), (5, 3), (9, 7)]]
    assert median_by(recs, "nu") == ([5, 9], [2, 7])

"""Verification-suite checks at module scale (full desk ranges live in the acceptance suite)."""

import json
import math
from fractions import Fraction

import pytest

from overpoly.divisors import pbar_exact
from overpoly.verification import (
    BoundTriple,
    DEFAULT_GRID_XS,
    RootRecord,
    TH1_EXCEPTIONS,
    VerifyReport,
    certify_root_record,
    check_colored,
    check_descent,
    check_ie7,
    check_ie8,
    check_ie11,
    check_le3,
    check_logconcave,
    check_th1,
    check_th3_grid,
    check_th4_grid,
    find_descent_x,
    roots_csv,
    roots_table,
    round_half_away,
    run_claim,
    sandwich,
)

F = Fraction


def test_th1_small():
    report = check_th1(30)
    assert report.holds
    assert set(report.exceptions) == TH1_EXCEPTIONS
    assert pbar_exact(1) ** 2 == pbar_exact(2) == 4
    assert pbar_exact(2) * pbar_exact(1) == pbar_exact(3) == 8


def test_th1_boundary_range():
    report = check_th1(3)
    assert report.holds
    assert set(report.exceptions) == {(1, 1), (2, 1)}


def test_th3_grid_small():
    assert check_th3_grid(12).holds
    with pytest.raises(ValueError):
        check_th3_grid(5, xs=[F(1, 2)])


def test_th4_grid_small():
    report = check_th4_grid(12)
    assert report.holds
    assert set(report.exceptions) == {
        (1, 1, F(1)),
        (2, 1, F(1)),
        (1, 2, F(1)),
    }


def test_th4_grid_without_x_equal_one():
    report = check_th4_grid(10, xs=[F(3, 2), F(2)])
    assert report.holds
    assert report.exceptions == ()


def test_colored_small():
    report = check_colored(12, (2, 3))
    assert report.holds
    assert report.exceptions == ()
    with pytest.raises(ValueError):
        check_colored(10, (1,))


def test_le3():
    report = check_le3(200)
    assert report.holds
    assert report.stats["argmin"] == 1
    assert pbar_exact(1) > 1 + math.log(2)
    assert pbar_exact(2) > 1 + math.log(4)


def test_logconcave():
    report = check_logconcave(100)
    assert report.holds
    assert report.stats["equalities"] == (2,)  # 16 = 2 * 8, reported as-is
    assert pbar_exact(3) ** 2 == 64 >= pbar_exact(2) * pbar_exact(4) == 56


def test_descent_certificates():
    x3 = find_descent_x(3)
    assert 0 < x3 < 1
    # by hand against (2x^4 + 8x^3 + 10x^2 - 2x)/3
    delta = lambda x: F(2 * x**4 + 8 * x**3 + 10 * x**2 - 2 * x, 3)
    assert delta(x3) < 0
    assert delta(F(1, 10)) < 0  # the hand-checkable point
    report = check_descent((3, 7))
    assert report.holds
    assert report.stats["points"]["3"] == x3


def test_descent_domain_errors():
    for n in (2, 4, 1, 0):
        with pytest.raises(ValueError):
            find_descent_x(n)


def test_sandwich_examples():
    t1 = sandwich(1)
    assert t1.lower == 0.0 and t1.lower < t1.exact == 2 < t1.upper
    assert t1.upper == pytest.approx(math.exp(math.pi) / 4, rel=1e-12)
    t4 = sandwich(4)
    assert t4.exact == 14
    assert t4.lower == pytest.approx(math.exp(2 * math.pi) / 64, rel=1e-12)
    assert t4.upper == pytest.approx(math.exp(2 * math.pi) * 1.25 / 32, rel=1e-12)
    assert t4.lower < 14 < t4.upper and t4.remainder_ok
    t100 = sandwich(100)
    assert t100.lower < t100.exact < t100.upper and t100.remainder_ok
    with pytest.raises(ValueError):
        sandwich(0)


def test_main_term_closed_form_matches_finite_differences():
    # d/dn [sinh(pi sqrt(n))/sqrt(n)] re-derived by symmetric differences
    def direct(n):
        return math.sinh(math.pi * math.sqrt(n)) / math.sqrt(n)

    for n in (2, 5, 10, 50):
        h = 1e-6 * n
        fd = (direct(n + h) - direct(n - h)) / (2 * h)
        mu = math.pi * math.sqrt(n)
        closed = (mu * math.cosh(mu) - math.sinh(mu)) / (2 * n**1.5)
        assert fd == pytest.approx(closed, rel=1e-7)
        # sandwich's main term is that derivative over 2 pi
        assert sandwich(n).main_term == pytest.approx(closed / (2 * math.pi), rel=1e-12)


def test_ie7_scan_small():
    report = check_ie7(60)
    assert report.holds
    assert not report.inconclusive


def test_ie8_examples_and_small_range():
    assert pbar_exact(3) == 8 > (1 + math.log(4)) * pbar_exact(1)
    report = check_ie8(20)
    assert report.holds
    assert report.stats["argmin"] == (2, 2, 1)
    assert report.stats["min_rel_slack"] > 0.1


def test_ie11():
    report = check_ie11(2, 200)
    assert report.holds
    first = report.stats["first_passing"]
    assert 2 < first <= 94
    lhs = math.exp(math.pi * math.sqrt(94) / 3)
    rhs = (1 + math.log(188)) * 95 * 2 / (1 - 1 / math.sqrt(94))
    assert lhs > rhs
    lhs2 = math.exp(math.pi * math.sqrt(2) / 3)
    rhs2 = (1 + math.log(4)) * 3 * 2 / (1 - 1 / math.sqrt(2))
    assert lhs2 < rhs2  # fails at a=2, as expected


def test_round_half_away():
    assert round_half_away(F(1)) == "1.00"
    assert round_half_away(F(845, 1000)) == "0.85"
    assert round_half_away(F(844, 1000)) == "0.84"
    assert round_half_away(F(-845, 1000)) == "-0.85"
    assert round_half_away(F(2999, 1000)) == "3.00"


def test_roots_table_known_cells():
    records = {(r.a, r.b): r for r in roots_table(3, 3)}
    assert records[(1, 1)].rounded == "1.00"
    assert records[(1, 2)].rounded == "1.00"
    assert records[(2, 2)].rounded == "0.84"
    assert records[(3, 3)].rounded == "0.57"
    for record in records.values():
        assert record.bracket_hi - record.bracket_lo <= F(1, 10**4)
        assert certify_root_record(record)


def test_roots_table_symmetry():
    records = {(r.a, r.b): r for r in roots_table(4, 4)}
    for a in range(1, 5):
        for b in range(1, 5):
            assert records[(a, b)].rounded == records[(b, a)].rounded


def test_roots_table_certificates_hold():
    for record in roots_table(6, 6):
        assert certify_root_record(record), (record.a, record.b)


def test_gap_positive_beyond_rounded_root():
    from overpoly.polynomials import product_gap_poly

    records = roots_table(6, 6)
    for record in records:
        gap = product_gap_poly(record.a, record.b)
        threshold = F(record.rounded) + F(1, 100)
        for x in DEFAULT_GRID_XS:
            if x > threshold:
                assert gap(x) > 0, (record.a, record.b, x)


def test_roots_table_parallel_matches_sequential():
    sequential = roots_table(3, 3, workers=1)
    parallel = roots_table(3, 3, workers=2)
    assert parallel == sequential


def test_workers_env_var(monkeypatch):
    monkeypatch.setenv("OVERPOLY_WORKERS", "2")
    assert roots_table(2, 2) == roots_table(2, 2, workers=1)


def test_roots_csv_format():
    records = roots_table(2, 2)
    text = roots_csv(records)
    lines = text.splitlines()
    assert lines[0] == "a,b,root"
    assert lines[1] == "1,1,1.00"
    assert len(lines) == 5
    assert text.endswith("\n")


def test_reports_round_trip_json():
    for report in (
        check_th1(10),
        check_th4_grid(6),
        check_descent((3,)),
        check_ie8(6),
    ):
        rebuilt = VerifyReport.from_dict(json.loads(json.dumps(report.to_dict())))
        assert rebuilt == report
    record = roots_table(1, 1)[0]
    assert RootRecord.from_dict(json.loads(json.dumps(record.to_dict()))) == record
    triple = sandwich(5)
    assert BoundTriple.from_dict(json.loads(json.dumps(triple.to_dict()))) == triple


def test_run_claim_dispatch():
    assert run_claim("th1", n_max=20).holds
    assert run_claim("logconcave", n_max=50).holds
    with pytest.raises(ValueError):
        run_claim("no-such-claim")


def test_default_grid():
    assert DEFAULT_GRID_XS == (F(1), F(3, 2), F(2), F(5, 2), F(3))

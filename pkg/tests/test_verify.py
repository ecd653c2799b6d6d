import json
import math

import numpy as np
import pytest

from schwarznorm import DomainError, q_series, strongly_convex
from schwarznorm.verify import (
    VerificationReport,
    check_eq_last,
    check_nonneg_coeffs,
    h_eval,
    lemma_names,
    run_all,
    run_selected,
    suita_check,
    sum_a,
    sum_a_sweep,
    sum_b,
    sum_b_direct,
)


# ---------------------------------------------------------------------------
# sums

def test_sum_a_small_values():
    assert sum_a(0) == 1.0
    assert abs(sum_a(1) - 1.0) < 1e-15
    assert abs(sum_a(2) - 14.0 / 15.0) < 1e-15


def test_sum_a_sweep_matches_brute_force():
    sweep = sum_a_sweep(60)
    for n in range(61):
        assert abs(sweep[n] - sum_a(n)) < 1e-14


def test_sum_a_bounded_by_one():
    sweep = sum_a_sweep(1000)
    assert np.all(sweep <= 1.0 + 1e-12)
    assert abs(sweep[0] - 1.0) < 1e-15 and abs(sweep[1] - 1.0) < 1e-15
    assert sweep[2:].max() < 1.0  # strict beyond the two equality cases


def test_sum_b_values_and_cross_check():
    assert sum_b(0) == 1.0
    assert abs(sum_b(1) - 2.0 / 3.0) < 1e-15
    for n in range(0, 1001, 7):
        assert abs(sum_b(n) - sum_b_direct(n)) < 1e-12


def test_sum_b_bounded():
    for n in range(1, 10_001, 97):
        assert sum_b(n) <= 2.0 / 3.0 + 1e-12


def test_sum_domain():
    with pytest.raises(DomainError):
        sum_a(-1)
    with pytest.raises(DomainError):
        sum_b(-2)


# ---------------------------------------------------------------------------
# h and the G lower bound

def test_h_at_zero_and_positive():
    for alpha in (0.25, 0.5, 0.75):
        assert abs(h_eval(alpha, 0.0)) < 1e-15
    assert h_eval(0.5, 0.5) > 0.0


def test_h_monotone_grid():
    for alpha in (0.25, 0.5, 0.75):
        values = [h_eval(alpha, s) for s in np.arange(0.0, 1.0, 1e-2)]
        assert np.all(np.diff(values) > 0.0)


def test_h_domain():
    with pytest.raises(DomainError):
        h_eval(1.0, 0.5)
    with pytest.raises(DomainError):
        h_eval(0.5, 1.0)


def test_eq_last_frozen_point():
    lhs, rhs = check_eq_last(0.5)
    assert abs(lhs - 1.2464504802804612) < 1e-9
    assert abs(rhs - 0.9206968584358256) < 1e-12
    assert lhs >= rhs


def test_eq_last_grid():
    for s in np.arange(1e-3, 1.0, 1e-3):
        lhs, rhs = check_eq_last(float(s))
        assert rhs < 1.0 < lhs
        assert lhs >= rhs


def test_eq_last_domain():
    with pytest.raises(DomainError):
        check_eq_last(0.0)


# ---------------------------------------------------------------------------
# report machinery

def test_nonneg_checker_negative_control():
    coeffs = q_series(strongly_convex(0.5), 50).coeffs.copy()
    coeffs[17] = -0.1  # deliberately corrupted
    report = check_nonneg_coeffs("corrupted_q", coeffs, "fixture")
    assert not report.passed
    assert report.worst_location == 17
    assert report.worst_value == pytest.approx(-0.1)


def test_nonneg_checker_passes_clean_series():
    report = check_nonneg_coeffs("clean_q", q_series(strongly_convex(0.5), 200).coeffs, "0..200")
    assert report.passed


def test_report_serialization_roundtrip():
    report = VerificationReport("demo", True, -1e-15, (0.25, 3), "demo range")
    blob = json.dumps(report.to_dict())
    parsed = json.loads(blob)
    assert parsed["name"] == "demo"
    assert parsed["passed"] is True
    assert parsed["worst_location"] == [0.25, 3.0]


# ---------------------------------------------------------------------------
# suita cross-check

def test_suita_single_order():
    report = suita_check(0.75, grid=32)
    assert report.passed
    assert abs(report.worst_value) <= 1e-3


def test_suita_domain():
    with pytest.raises(DomainError):
        suita_check(0.4)
    with pytest.raises(DomainError):
        suita_check(1.0)


# ---------------------------------------------------------------------------
# run_all / run_selected

def test_run_selected_groups():
    assert set(lemma_names()) == {
        "sum", "nonneg", "loewner", "h", "glower", "fbound", "cross", "suita",
    }
    reports = run_selected("sum", max_n=50)
    assert [r.name for r in reports] == [
        "triple_sum_bound", "pair_sum_bound", "pair_sum_cross_check", "inner_inequality",
    ]
    assert all(r.passed for r in reports)
    with pytest.raises(DomainError):
        run_selected("bogus")


def test_run_selected_suita_reports_three_orders():
    reports = run_selected("suita", grid=24)
    assert len(reports) == 3
    assert all(r.passed for r in reports)


def test_run_all_small_passes():
    reports = run_all(max_n=40, grid=24)
    names = [r.name for r in reports]
    assert names == sorted(names, key=names.index)  # deterministic order
    failing = [r.name for r in reports if not r.passed]
    assert failing == []


def test_run_all_max_n_zero():
    reports = run_all(max_n=0, grid=24)
    by_name = {r.name: r for r in reports}
    assert by_name["triple_sum_bound"].passed
    assert by_name["pair_sum_bound"].passed

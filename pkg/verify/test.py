"""
Verification Harness Tests
Every check passes on its documented range and reports the counts it used
"""

import json
import os
import sys
from fractions import Fraction

import pytest

# Add parent directory to path to import modules
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from coloring import Coloring, DomainError, GroundSet, LinearEquation, UnsupportedEquationError
from constructions import mod3_cyclic, mod3_interval
from counting import count_by_class
from verify import (
    SUITES,
    CheckReport,
    check_cyclic_total,
    check_dual_method,
    check_exhaustive_maxima,
    check_figure1_estimate,
    check_interval_mono_count,
    check_lemma_interval_total,
    check_main_theorem,
    check_no_dichromatic,
    check_nonrainbow_floor,
    check_random_baseline,
    check_schur_composition,
    check_schur_theorem,
    half_range_rainbow,
    render_fraction,
    run_suite,
)

AP = LinearEquation(1, 1, 2)
SCHUR = LinearEquation(1, 1, 1)


def _row(report: CheckReport, **match):
    return next(r for r in report.rows if all(r.get(k) == v for k, v in match.items()))


def test_half_range_recount_is_exact():
    for n in range(4, 301):
        if n % 3:
            assert half_range_rainbow(n) == count_by_class(AP, mod3_cyclic(n)).rainbow


def test_lemma_interval_total():
    report = check_lemma_interval_total(2, [10])
    assert report.passed
    assert _row(report, n=10)["total"] == 50
    assert check_lemma_interval_total(3, [3]).rows[0]["error"] == 0
    with pytest.raises(UnsupportedEquationError):
        check_lemma_interval_total(1, [5])


@pytest.mark.slow
@pytest.mark.parametrize("c", [2, 3, 4, 5])
def test_lemma_interval_total_up_to_500(c):
    report = check_lemma_interval_total(c, range(1, 501))
    assert report.passed, report.failures
    assert len(report.rows) == 500


def test_cyclic_total():
    assert _row(check_cyclic_total(AP, [5]), n=5)["total"] == 25
    assert _row(check_cyclic_total(LinearEquation(2, 3, 5), [10]), n=10)["total"] == 100
    assert _row(check_cyclic_total(SCHUR, [1]), n=1)["total"] == 1
    for eq in (AP, SCHUR, LinearEquation(2, 3, 5)):
        assert check_cyclic_total(eq, range(1, 201)).passed


@pytest.mark.slow
def test_no_dichromatic():
    report = check_no_dichromatic(range(1, 2001))
    assert report.passed
    row = _row(report, n=9)
    assert (row["total"], row["rainbow"], row["mono"], row["dichromatic"]) == (41, 26, 15, 0)
    assert row["oracle_agrees"]


def test_main_theorem():
    report = check_main_theorem(range(3, 121))
    assert report.passed, report.failures
    assert _row(report, n=99, clause="cyclic-3t")["rainbow"] == 6534
    assert _row(report, n=9, clause="interval")["rb"] == Fraction(26, 41)
    assert report.observed_constant is not None


@pytest.mark.slow
def test_main_theorem_up_to_300():
    report = check_main_theorem(range(3, 301))
    assert report.passed, report.failures
    assert {r["n"] for r in report.rows} == set(range(3, 301))


def test_nonrainbow_floor_examples():
    ground = GroundSet.cyclic(6)
    balanced = Coloring(ground, (1, 2, 3, 1, 2, 3))
    lopsided = Coloring(ground, (1, 1, 1, 1, 2, 3))
    report = check_nonrainbow_floor([balanced, lopsided])
    assert report.passed
    assert [r["floor"] for r in report.rows] == [12, 18]


def test_nonrainbow_floor_random_sample():
    report = check_nonrainbow_floor(n_range=range(5, 41), samples=1000, seed=1)
    assert report.passed
    assert len(report.rows) == 1000
    assert check_nonrainbow_floor(n_range=range(0), samples=10).rows == []


def test_nonrainbow_floor_rejects_interval():
    with pytest.raises(DomainError):
        check_nonrainbow_floor([mod3_interval(6)])


def test_figure1_estimate():
    report = check_figure1_estimate(range(1, 101))
    assert report.passed
    assert all(r["n"] % 3 for r in report.rows)
    row = _row(report, n=10)
    assert row["rainbow"] == row["recount"]


def test_schur_theorem():
    report = check_schur_theorem(range(1, 61))
    assert report.passed, report.failures
    assert _row(report, n=25)["mono"] == 25
    assert _row(report, n=25)["by_color"] == [25, 0, 0]


def test_schur_composition():
    assert check_schur_composition(range(5, 101)).passed


def test_interval_mono_count():
    report = check_interval_mono_count(range(1, 151))
    assert report.passed
    assert _row(report, n=9)["mono"] == 15


@pytest.mark.parametrize("eq, kind", [(AP, "interval"), (AP, "cyclic"), (SCHUR, "cyclic")])
def test_random_baseline(eq, kind):
    report = check_random_baseline(eq, kind, range(1, 61))
    assert report.passed, report.failures


def test_random_baseline_rejects_unknown_kind():
    with pytest.raises(DomainError):
        check_random_baseline(AP, "torus", [5])


def test_dual_method():
    report = check_dual_method(range(1, 101))
    assert report.passed
    assert "half_range" in _row(report, n=10)
    assert "half_range" not in _row(report, n=9)


def test_exhaustive_maxima():
    report = check_exhaustive_maxima(range(3, 10))
    assert report.passed
    assert _row(report, n=3)["max_rainbow"] == 6
    assert _row(report, n=8)["unquotiented_agrees"]


def test_failing_report_is_recorded():
    report = CheckReport("demo", "always fails")
    report.add({"n": 1, "value": Fraction(1, 3)}, ok=False)
    assert not report.passed
    record = report.to_dict()
    assert record["failures"] == [{"n": 1, "value": {"fraction": "1/3", "decimal": "0.333333333333"}}]
    assert record["baselines"]["rainbow_random"] == render_fraction(Fraction(2, 9))


def test_run_suite_all():
    reports = run_suite("all", 40)
    assert reports
    assert all(r.passed for r in reports), [r.name for r in reports if not r.passed]
    for report in reports:
        json.dumps(report.to_dict())


def test_run_suite_names():
    assert [r.name for r in run_suite("main-theorem", 20)] == ["main-theorem"]
    assert len(run_suite("lemma-interval", 10)) == 4
    assert "figure1" in SUITES
    with pytest.raises(DomainError):
        run_suite("no-such-suite", 10)
    with pytest.raises(DomainError):
        run_suite("all", 0)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__]))

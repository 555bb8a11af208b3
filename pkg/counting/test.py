"""
Counting Tests
Oracle enumeration, congruence counts, the convolution path and closed forms
"""

import itertools
import os
import sys
import time
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

# Add parent directory to path to import modules
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from config import config
from coloring import (
    Coloring,
    DomainError,
    GroundSet,
    GuardError,
    LinearEquation,
    SolutionClass,
    UnsupportedEquationError,
    classify,
)
from constructions import mod3_cyclic, mod3_interval, mod5_schur_cyclic, seeded_random_coloring
from counting import (
    balanced_square_sum,
    classify_solutions,
    congruence_roots,
    congruence_solution_count,
    count_by_class,
    count_classes,
    count_fast,
    count_total,
    density_profile,
    enumerate_solutions,
    expected_uniform_counts,
    incident_solutions,
    progression_class_counts,
    progression_rainbow_count,
    solution_shape_counts,
    total_count_formula,
    time_counting,
)

AP = LinearEquation(1, 1, 2)
SCHUR = LinearEquation(1, 1, 1)


def _ground(kind: str, n: int) -> GroundSet:
    return GroundSet.cyclic(n) if kind == "cyclic" else GroundSet.interval(n)


def test_enumerate_solutions_examples():
    assert len(list(enumerate_solutions(AP, GroundSet.interval(10)))) == 50
    assert len(list(enumerate_solutions(AP, GroundSet.cyclic(5)))) == 25
    assert list(enumerate_solutions(LinearEquation(1, 1, 3), GroundSet.interval(3))) == [
        (1, 2, 1), (2, 1, 1), (3, 3, 2),
    ]


@pytest.mark.parametrize("eq", [AP, SCHUR, LinearEquation(2, 3, 5), LinearEquation(1, 2, 4)])
@pytest.mark.parametrize("kind", ["interval", "cyclic"])
def test_enumeration_matches_brute_force(eq, kind):
    ground = _ground(kind, 9)
    expected = [
        (x, y, z)
        for x, y in itertools.product(ground.elements(), repeat=2)
        for z in ground.elements()
        if eq.is_solution(ground, x, y, z)
    ]
    assert list(enumerate_solutions(eq, ground)) == expected
    assert count_total(eq, ground) == len(expected)


@pytest.mark.parametrize("c, s, n, expected", [(2, 4, 6, 2), (2, 3, 6, 0), (1, 7, 9, 1)])
def test_congruence_solution_count_examples(c, s, n, expected):
    assert congruence_solution_count(c, s, n) == expected


def test_congruence_roots():
    assert congruence_roots(2, 4, 6) == [2, 5]
    assert congruence_roots(2, 3, 6) == []


def test_congruence_rejects_zero_modulus():
    with pytest.raises(DomainError):
        congruence_solution_count(2, 4, 0)


@given(st.integers(1, 12), st.integers(-30, 30), st.integers(1, 30))
def test_congruence_count_matches_brute_force(c, s, n):
    roots = [z for z in range(n) if (c * z - s) % n == 0]
    assert congruence_solution_count(c, s, n) == len(roots)
    assert congruence_roots(c, s, n) == roots


@pytest.mark.parametrize("eq", [AP, SCHUR, LinearEquation(2, 3, 5)])
def test_cyclic_total_is_n_squared(eq):
    for n in range(1, 60):
        assert count_total(eq, GroundSet.cyclic(n)) == n * n


def test_count_by_class_examples():
    interval = count_by_class(AP, mod3_interval(9)).summary
    assert (interval.total, interval.mono, interval.rainbow, interval.dichromatic) == (41, 15, 26, 0)

    cyclic = count_by_class(AP, mod3_cyclic(9)).summary
    assert (cyclic.rainbow, cyclic.total) == (54, 81)
    assert cyclic.rb == Fraction(2, 3)

    schur = count_by_class(SCHUR, mod5_schur_cyclic(25))
    assert (schur.mono, schur.total) == (25, 625)
    assert schur.mono_by_color() == (25, 0, 0)


@pytest.mark.parametrize("kind", ["interval", "cyclic"])
@pytest.mark.parametrize("eq", [AP, SCHUR, LinearEquation(1, 2, 3)])
def test_count_by_class_agrees_with_classify(kind, eq):
    for seed in range(5):
        coloring = seeded_random_coloring(_ground(kind, 11), seed)
        tally = {cls: 0 for cls in SolutionClass}
        for triple in classify_solutions(eq, coloring):
            assert triple.cls is classify(triple.x, triple.y, triple.z, coloring)
            tally[triple.cls] += 1
        summary = count_by_class(eq, coloring).summary
        assert summary.rainbow == tally[SolutionClass.RAINBOW]
        assert summary.mono == tally[SolutionClass.MONOCHROMATIC]
        assert summary.dichromatic == tally[SolutionClass.DICHROMATIC]


def test_relabeling_permutes_matrix():
    coloring = seeded_random_coloring(GroundSet.cyclic(17), 3)
    counts = count_by_class(AP, coloring)
    for mapping in itertools.permutations((1, 2, 3)):
        relabeled = count_by_class(AP, coloring.relabeled(mapping))
        assert relabeled == counts.permuted(mapping)
        assert relabeled.summary == counts.summary


def test_oracle_guard(monkeypatch):
    monkeypatch.setattr(config, "ORACLE_MAX_N", 10)
    with pytest.raises(GuardError):
        count_total(AP, GroundSet.cyclic(11))
    assert count_total(AP, GroundSet.cyclic(11), allow_large=True) == 121


@pytest.mark.slow
@pytest.mark.parametrize("kind", ["interval", "cyclic"])
@pytest.mark.parametrize("eq", [AP, SCHUR])
def test_fast_path_matches_oracle(kind, eq):
    # n = 2 admits no surjective 3-coloring
    for n in range(3, 65):
        for seed in range(100):
            coloring = seeded_random_coloring(_ground(kind, n), 100 * n + seed)
            assert count_fast(eq, coloring, method="direct") == count_by_class(eq, coloring)


@pytest.mark.parametrize("kind", ["interval", "cyclic"])
def test_fft_path_matches_oracle(kind):
    for seed in range(5):
        coloring = seeded_random_coloring(_ground(kind, 300), seed)
        for eq in (AP, SCHUR, LinearEquation(1, 1, 3)):
            assert count_fast(eq, coloring, method="fft") == count_by_class(eq, coloring)


@pytest.mark.parametrize("kind", ["interval", "cyclic"])
def test_fast_path_spot_check_at_512(kind):
    coloring = seeded_random_coloring(_ground(kind, 512), 512)
    for eq in (AP, SCHUR):
        assert count_fast(eq, coloring) == count_by_class(eq, coloring)


def test_time_counting_reports_both_paths():
    oracle_seconds, fast_seconds = time_counting(AP, mod3_cyclic(60))
    assert oracle_seconds >= 0 and fast_seconds >= 0


@pytest.mark.slow
def test_convolution_path_speed():
    big = seeded_random_coloring(GroundSet.cyclic(8192), 8192)
    start = time.perf_counter()
    count_fast(AP, big)
    assert time.perf_counter() - start < 5.0

    oracle_seconds, fast_seconds = time_counting(AP, seeded_random_coloring(GroundSet.cyclic(4096), 4096))
    assert oracle_seconds >= 10 * fast_seconds


def test_fast_path_dominant_color():
    ground = GroundSet.cyclic(12)
    coloring = Coloring(ground, (1,) * 10 + (2, 3))
    fast = count_fast(SCHUR, coloring)
    assert fast == count_by_class(SCHUR, coloring)
    brute = sum(
        1 for x, y, z in enumerate_solutions(SCHUR, ground)
        if classify(x, y, z, coloring) is SolutionClass.RAINBOW
    )
    assert fast.rainbow == brute


def test_fast_path_rejects_general_coefficients():
    with pytest.raises(UnsupportedEquationError):
        count_fast(LinearEquation(2, 3, 5), mod3_cyclic(9))
    with pytest.raises(DomainError):
        count_fast(AP, mod3_cyclic(9), method="approximate")


def test_count_classes_dispatch():
    coloring = mod3_cyclic(10)
    general = LinearEquation(2, 3, 5)
    assert count_classes(general, coloring) == count_by_class(general, coloring)
    assert count_classes(AP, coloring) == count_by_class(AP, coloring)


def test_total_count_formula():
    interval = total_count_formula(AP, GroundSet.interval(10))
    assert interval.leading == 50
    assert not interval.exact
    assert interval.error_budget == config.ERROR_BUDGET_K * 10

    assert total_count_formula(SCHUR, GroundSet.cyclic(7)).leading == 49
    cyclic = total_count_formula(LinearEquation(2, 3, 5), GroundSet.cyclic(10))
    assert cyclic.exact and cyclic.leading == 100


@pytest.mark.parametrize("eq", [SCHUR, LinearEquation(2, 3, 5)])
def test_total_count_formula_hypotheses(eq):
    with pytest.raises(UnsupportedEquationError):
        total_count_formula(eq, GroundSet.interval(10))


def test_density_profile_examples():
    assert density_profile(mod3_cyclic(9)).counts == (3, 3, 3)
    assert density_profile(mod5_schur_cyclic(25)).counts == (5, 10, 10)
    assert density_profile(mod3_interval(10)).counts == (4, 3, 3)


def test_balanced_square_sum():
    assert balanced_square_sum(6) == 12
    assert balanced_square_sum(7) == 17
    assert balanced_square_sum(8) == 22


@pytest.mark.parametrize("kind", ["interval", "cyclic"])
def test_incident_solutions(kind):
    ground = _ground(kind, 13)
    everything = [
        (ground.index(x), ground.index(y), ground.index(z))
        for x, y, z in enumerate_solutions(AP, ground)
    ]
    for e in ground.elements():
        i = ground.index(e)
        expected = sorted(t for t in everything if i in t)
        assert [tuple(row) for row in incident_solutions(AP, ground, e).tolist()] == expected


def test_progression_sweep_matches_oracle():
    for n in range(3, 40):
        coloring = seeded_random_coloring(GroundSet.cyclic(n), n)
        assert progression_class_counts(coloring) == count_by_class(AP, coloring)
        assert progression_rainbow_count(coloring) == count_by_class(AP, coloring).rainbow


def test_progression_sweep_needs_cyclic():
    with pytest.raises(UnsupportedEquationError):
        progression_class_counts(mod3_interval(9))


@pytest.mark.parametrize("kind", ["interval", "cyclic"])
def test_solution_shapes_partition_total(kind):
    ground = _ground(kind, 20)
    for eq in (AP, SCHUR):
        shapes = solution_shape_counts(eq, ground)
        assert sum(shapes) == count_total(eq, ground)
    # over [n] two equal coordinates force all three equal; Z_20 also has z = x + 10
    _, two_equal, all_equal = solution_shape_counts(AP, ground)
    assert two_equal == (0 if kind == "interval" else 20)
    assert all_equal == 20


def test_expected_uniform_counts():
    assert expected_uniform_counts(AP, GroundSet.cyclic(1)) == (0, 1)
    distinct, two_equal, all_equal = solution_shape_counts(AP, GroundSet.interval(10))
    rainbow, mono = expected_uniform_counts(AP, GroundSet.interval(10))
    assert rainbow == Fraction(2, 9) * distinct
    assert mono == Fraction(1, 9) * distinct + all_equal


def test_expected_uniform_counts_match_exhaustive_average():
    ground = GroundSet.cyclic(4)
    total_rainbow = total_mono = 0
    for colors in itertools.product((0, 1, 2), repeat=4):
        codes = np.array(colors)
        for x, y, z in enumerate_solutions(SCHUR, ground):
            distinct = len({codes[x], codes[y], codes[z]})
            total_rainbow += distinct == 3
            total_mono += distinct == 1
    rainbow, mono = expected_uniform_counts(SCHUR, ground)
    assert rainbow == Fraction(total_rainbow, 81)
    assert mono == Fraction(total_mono, 81)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__]))

"""
Coloring Domain Tests
Ground sets, equations, colorings and solution classification
"""

import os
import sys
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

# Add parent directory to path to import modules
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from coloring import (
    Coloring,
    CountSummary,
    DensityProfile,
    DomainError,
    GroundSet,
    LinearEquation,
    ProgressionPair,
    SolutionClass,
    SolutionTriple,
    SurjectivityError,
    classify,
    is_solution,
    progression_to_solution,
    solution_to_progression,
)


def test_ground_set_elements():
    assert list(GroundSet.interval(4).elements()) == [1, 2, 3, 4]
    assert list(GroundSet.cyclic(4).elements()) == [0, 1, 2, 3]
    assert GroundSet.interval(4).index(4) == 3
    assert GroundSet.cyclic(4).element(3) == 3
    assert GroundSet.cyclic(7).describe() == "Z_7"


@pytest.mark.parametrize("ground, e", [
    (GroundSet.interval(5), 0),
    (GroundSet.interval(5), 6),
    (GroundSet.cyclic(5), 5),
    (GroundSet.cyclic(5), -1),
])
def test_out_of_range_element(ground, e):
    with pytest.raises(DomainError):
        ground.index(e)


def test_ground_set_rejects_empty():
    with pytest.raises(DomainError):
        GroundSet.cyclic(0)


def test_equation_normalizes_gcd():
    assert LinearEquation(2, 2, 4) == LinearEquation(1, 1, 2)
    assert LinearEquation.parse("3, 6, 9").coefficients == (1, 2, 3)
    assert str(LinearEquation(1, 1, 2)) == "1,1,2"
    assert LinearEquation(1, 1, 2).describe() == "x + y = 2z"


@pytest.mark.parametrize("text", ["1,1", "a,b,c", "1,0,2", "1,1,2,3"])
def test_equation_parse_errors(text):
    with pytest.raises(DomainError):
        LinearEquation.parse(text)


def test_equation_properties():
    assert LinearEquation(1, 1, 2).is_unit_sum
    assert not LinearEquation(2, 3, 5).is_unit_sum
    assert LinearEquation(2, 3, 5).is_translation_invariant
    assert LinearEquation(1, 1, 1).is_translation_invariant is False


def test_coloring_must_be_surjective():
    with pytest.raises(SurjectivityError):
        Coloring(GroundSet.cyclic(4), (1, 1, 2, 2))


def test_coloring_validates_length_and_range():
    with pytest.raises(DomainError):
        Coloring(GroundSet.cyclic(4), (1, 2, 3))
    with pytest.raises(DomainError):
        Coloring(GroundSet.cyclic(3), (1, 2, 4))


@pytest.mark.parametrize("colors", [(1.9, 2, 3), (1, 2.5, 3), ("1", 2, 3), (None, 2, 3)])
def test_coloring_rejects_non_integer_colors(colors):
    with pytest.raises(DomainError):
        Coloring(GroundSet.cyclic(3), colors)


def test_coloring_accepts_integral_values():
    assert Coloring(GroundSet.cyclic(3), (1.0, 2, 3)).colors == (1, 2, 3)


def test_coloring_accessors():
    coloring = Coloring(GroundSet.interval(5), (1, 2, 3, 1, 2))
    assert coloring.color_of(1) == 1
    assert coloring.color_of(5) == 2
    assert coloring.color_counts() == (2, 2, 1)
    assert list(coloring.as_array()) == [0, 1, 2, 0, 1]
    assert str(coloring) == "12312"
    assert coloring.relabeled([3, 1, 2]).colors == (3, 1, 2, 3, 1)


def test_classify():
    coloring = Coloring(GroundSet.interval(3), (1, 2, 3))
    assert classify(1, 3, 2, coloring) is SolutionClass.RAINBOW
    assert classify(2, 2, 2, coloring) is SolutionClass.MONOCHROMATIC
    assert classify(1, 1, 2, coloring) is SolutionClass.DICHROMATIC
    with pytest.raises(DomainError):
        classify(0, 1, 2, coloring)


def test_is_solution():
    eq = LinearEquation(1, 1, 2)
    assert is_solution(eq, GroundSet.cyclic(5), 1, 3, 2)
    # 4 + 3 = 7 = 2 * 1 (mod 5)
    assert is_solution(eq, GroundSet.cyclic(5), 4, 3, 1)
    assert not is_solution(eq, GroundSet.interval(5), 4, 3, 1)
    assert eq.is_solution(GroundSet.interval(5), 1, 5, 3)
    with pytest.raises(DomainError):
        is_solution(eq, GroundSet.interval(5), 0, 2, 1)


def test_solution_triple_checks_and_classifies():
    eq = LinearEquation(1, 1, 2)
    coloring = Coloring(GroundSet.cyclic(5), (1, 2, 3, 1, 2))
    triple = SolutionTriple.of(eq, coloring, 1, 3, 2)
    assert (triple.x, triple.y, triple.z) == (1, 3, 2)
    assert triple.cls is classify(1, 3, 2, coloring)
    assert SolutionTriple.of(eq, coloring, 0, 3, 4).cls is SolutionClass.DICHROMATIC
    with pytest.raises(DomainError):
        SolutionTriple.of(eq, coloring, 1, 2, 3)
    with pytest.raises(DomainError):
        SolutionTriple.of(eq, coloring, 1, 3, 7)


def test_count_summary_proportions():
    summary = CountSummary(total=81, rainbow=54, mono=27, dichromatic=0)
    assert summary.rb == Fraction(2, 3)
    assert summary.mono_prop == Fraction(1, 3)
    assert summary.non_rainbow == 27


def test_count_summary_rejects_inconsistent_counts():
    with pytest.raises(DomainError):
        CountSummary(total=10, rainbow=5, mono=2, dichromatic=2)


def test_count_summary_without_solutions():
    summary = CountSummary(0, 0, 0, 0)
    with pytest.raises(DomainError):
        summary.rb


def test_density_profile():
    profile = DensityProfile((2, 2, 2), 6)
    assert profile.square_sum == 12
    assert profile.densities == (Fraction(1, 3),) * 3
    assert DensityProfile((4, 1, 1), 6).square_sum == 18
    with pytest.raises(DomainError):
        DensityProfile((1, 1, 1), 4)


def test_interval_progression_must_fit():
    ground = GroundSet.interval(5)
    assert progression_to_solution(ProgressionPair(1, 2), ground) == (1, 5, 3)
    with pytest.raises(DomainError):
        progression_to_solution(ProgressionPair(2, 2), ground)


@given(st.integers(1, 60).flatmap(
    lambda n: st.tuples(st.just(n), st.integers(0, n - 1), st.integers(0, n - 1))))
def test_cyclic_progressions_round_trip(args):
    n, a, d = args
    ground = GroundSet.cyclic(n)
    x, y, z = progression_to_solution(ProgressionPair(a, d), ground)
    assert is_solution(LinearEquation(1, 1, 2), ground, x, y, z)
    assert solution_to_progression(x, y, z, ground) == ProgressionPair(a, d)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__]))

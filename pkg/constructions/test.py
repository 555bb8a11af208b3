"""
Construction Tests
Residue-class colorings, periodic tilings and seeded random colorings
"""

import os
import sys
from fractions import Fraction

import numpy as np
import pytest

# Add parent directory to path to import modules
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from coloring import DomainError, GroundSet, LinearEquation, SurjectivityError
from constructions import (
    CONSTRUCTIONS,
    known_constructions,
    mod3_cyclic,
    mod3_interval,
    mod5_schur_cyclic,
    parse_pattern,
    periodic,
    random_coloring,
    repair_surjectivity,
    seeded_random_coloring,
)
from counting import count_by_class

AP = LinearEquation(1, 1, 2)


def test_mod3_interval():
    assert mod3_interval(3).colors == (1, 2, 3)
    assert mod3_interval(6).colors == (1, 2, 3, 1, 2, 3)
    assert mod3_interval(10).color_of(10) == 1


def test_mod3_cyclic():
    assert mod3_cyclic(9).colors == (1, 2, 3) * 3
    assert mod3_cyclic(5).colors == (1, 2, 3, 1, 2)
    assert mod3_cyclic(3).colors == (1, 2, 3)


def test_mod5_schur_cyclic():
    assert mod5_schur_cyclic(5).colors == (1, 2, 3, 3, 2)
    assert mod5_schur_cyclic(10).colors == (1, 2, 3, 3, 2) * 2
    assert mod5_schur_cyclic(25).color_counts()[0] == 5


@pytest.mark.parametrize("build, n", [(mod3_interval, 2), (mod3_cyclic, 2), (mod5_schur_cyclic, 4)])
def test_too_small_for_three_colors(build, n):
    with pytest.raises(SurjectivityError):
        build(n)


def test_periodic():
    assert periodic(9, (1, 2, 3)) == mod3_cyclic(9)
    assert periodic(25, (1, 2, 3, 3, 2)) == mod5_schur_cyclic(25)
    assert periodic(6, (1, 2, 3), GroundSet.interval(6)) == mod3_interval(6)


def test_periodic_errors():
    with pytest.raises(SurjectivityError):
        periodic(5, (1,))
    with pytest.raises(DomainError):
        periodic(5, ())
    with pytest.raises(DomainError):
        periodic(5, (1, 2, 3), GroundSet.cyclic(6))


def test_parse_pattern():
    assert parse_pattern("12332") == [1, 2, 3, 3, 2]
    assert parse_pattern("1,2,3") == [1, 2, 3]
    with pytest.raises(DomainError):
        parse_pattern("1a3")


def test_interval_construction_has_no_dichromatic_solutions():
    for n in range(3, 120):
        assert count_by_class(AP, mod3_interval(n)).dichromatic == 0


def test_cyclic_construction_reaches_two_thirds():
    for n in range(3, 301, 3):
        assert count_by_class(AP, mod3_cyclic(n)).summary.rb == Fraction(2, 3)


def test_schur_construction_is_red_only_on_multiples_of_five():
    schur = LinearEquation(1, 1, 1)
    for n in range(5, 101, 5):
        assert count_by_class(schur, mod5_schur_cyclic(n)).mono_by_color() == (n * n // 25, 0, 0)


def test_repair_surjectivity():
    rng = np.random.default_rng(7)
    repaired = repair_surjectivity(np.ones(10, dtype=np.int64), rng)
    assert set(repaired.tolist()) == {1, 2, 3}
    assert (repaired == 1).sum() == 8
    with pytest.raises(SurjectivityError):
        repair_surjectivity(np.array([1, 2]), rng)


def test_random_colorings_are_seeded():
    ground = GroundSet.interval(30)
    assert seeded_random_coloring(ground, 5) == seeded_random_coloring(ground, 5)
    coloring = random_coloring(ground, np.random.default_rng(1))
    assert set(coloring.colors) == {1, 2, 3}


def test_known_constructions_by_ground():
    assert set(known_constructions(GroundSet.cyclic(4))) == {"mod3-cyclic"}
    assert set(known_constructions(GroundSet.cyclic(5))) == {"mod3-cyclic", "mod5-schur"}
    assert set(known_constructions(GroundSet.interval(5))) == {"mod3-interval"}
    assert known_constructions(GroundSet.cyclic(2)) == {}
    assert set(CONSTRUCTIONS) == {"mod3-interval", "mod3-cyclic", "mod5-schur"}


if __name__ == "__main__":
    sys.exit(pytest.main([__file__]))

"""
Closed-Form Counting Helpers
Predicted solution totals, density profiles and uniform-random baselines
"""

import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

import numpy as np

# Add parent directory to path to import config
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from config import config
from coloring import (
    Coloring,
    DensityProfile,
    GroundSet,
    LinearEquation,
    UnsupportedEquationError,
)

from .oracle import iter_solution_blocks


@dataclass(frozen=True)
class TotalPrediction:
    """
    Predicted number of solutions

    exact is True when leading is the exact count; otherwise the true count
    lies within error_budget of leading.
    """

    leading: Fraction
    exact: bool
    error_budget: Optional[int]
    note: str


def total_count_formula(eq: LinearEquation, ground: GroundSet) -> TotalPrediction:
    """
    Predict the total number of solutions

    Over [n] only x + y = cz with c >= 2 is covered (n^2/c + O(n)); over Z_n
    every normalized equation has exactly n^2 solutions.

    Raises:
        UnsupportedEquationError: if the equation is outside the formula's hypotheses
    """
    n = ground.n
    if ground.is_cyclic:
        # LinearEquation already divides out gcd(a, b, c)
        return TotalPrediction(Fraction(n * n), True, 0, "exact: n^2 solutions over Z_n when gcd(a,b,c) = 1")

    if not eq.is_unit_sum or eq.c < 2:
        raise UnsupportedEquationError(
            f"The interval total formula covers x + y = cz with c >= 2, got {eq.describe()}"
        )
    budget = config.ERROR_BUDGET_K * n
    return TotalPrediction(Fraction(n * n, eq.c), False, budget, f"leading term n^2/{eq.c}, error within {budget}")


def density_profile(coloring: Coloring) -> DensityProfile:
    return DensityProfile(tuple(coloring.color_counts()), coloring.n)


def balanced_square_sum(n: int) -> int:
    """Smallest c1^2 + c2^2 + c3^2 over non-negative integers summing to n"""
    q, r = divmod(n, 3)
    return r * (q + 1) ** 2 + (3 - r) * q * q


def solution_shape_counts(eq: LinearEquation, ground: GroundSet) -> Tuple[int, int, int]:
    """
    Split the solutions by coordinate coincidences

    Returns:
        Tuple[int, int, int]: (pairwise distinct, exactly two equal, all equal)
    """
    distinct = two_equal = all_equal = 0
    for x, y, z in iter_solution_blocks(eq, ground):
        same = (x == y).astype(np.int64) + (y == z) + (x == z)
        distinct += int((same == 0).sum())
        all_equal += int((same == 3).sum())
        two_equal += int((same == 1).sum())
    return distinct, two_equal, all_equal


def expected_uniform_counts(eq: LinearEquation, ground: GroundSet) -> Tuple[Fraction, Fraction]:
    """
    Expected (rainbow, monochromatic) counts under an i.i.d. uniform 3-coloring

    A triple with distinct coordinates is rainbow with probability 6/27 and
    monochromatic with probability 1/9; two coinciding coordinates make it
    monochromatic with probability 1/3 and never rainbow.
    """
    distinct, two_equal, all_equal = solution_shape_counts(eq, ground)
    rainbow = Fraction(6, 27) * distinct
    mono = Fraction(1, 9) * distinct + Fraction(1, 3) * two_equal + all_equal
    return rainbow, mono

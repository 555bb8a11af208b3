"""
Coloring Package
Universes, equations, colorings and the classification of solutions
"""

from .domain import (
    NUM_COLORS,
    RANDOM_MONO_BASELINE,
    RANDOM_RAINBOW_BASELINE,
    Coloring,
    CountSummary,
    DensityProfile,
    GroundKind,
    GroundSet,
    LinearEquation,
    ProgressionPair,
    SolutionClass,
    SolutionTriple,
    classify,
    is_solution,
    progression_to_solution,
    solution_to_progression,
)
from .errors import (
    CheckpointError,
    DomainError,
    GuardError,
    SurjectivityError,
    UnsupportedEquationError,
)

__version__ = "1.0.0"
__all__ = [
    "NUM_COLORS",
    "RANDOM_MONO_BASELINE",
    "RANDOM_RAINBOW_BASELINE",
    "Coloring",
    "CountSummary",
    "DensityProfile",
    "GroundKind",
    "GroundSet",
    "LinearEquation",
    "ProgressionPair",
    "SolutionClass",
    "SolutionTriple",
    "classify",
    "is_solution",
    "progression_to_solution",
    "solution_to_progression",
    "CheckpointError",
    "DomainError",
    "GuardError",
    "SurjectivityError",
    "UnsupportedEquationError",
]

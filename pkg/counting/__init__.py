"""
Counting Package
Exact enumeration and classification of solutions to ax + by = cz
"""

from .fast import count_classes, count_fast, time_counting
from .formulas import (
    TotalPrediction,
    balanced_square_sum,
    density_profile,
    expected_uniform_counts,
    solution_shape_counts,
    total_count_formula,
)
from .oracle import (
    ClassCountMatrix,
    classify_solutions,
    congruence_roots,
    congruence_solution_count,
    count_by_class,
    count_total,
    enumerate_solutions,
    incident_solutions,
    iter_solution_blocks,
    progression_class_counts,
    progression_rainbow_count,
    solution_arrays,
)

__version__ = "1.0.0"
__all__ = [
    "ClassCountMatrix",
    "TotalPrediction",
    "balanced_square_sum",
    "classify_solutions",
    "congruence_roots",
    "congruence_solution_count",
    "count_by_class",
    "count_classes",
    "count_fast",
    "count_total",
    "density_profile",
    "enumerate_solutions",
    "expected_uniform_counts",
    "incident_solutions",
    "iter_solution_blocks",
    "progression_class_counts",
    "progression_rainbow_count",
    "solution_arrays",
    "solution_shape_counts",
    "time_counting",
    "total_count_formula",
]


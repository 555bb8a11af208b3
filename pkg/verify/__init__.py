"""
Verify Package
Finite-n checks of every rainbow and Schur counting claim, with JSON-ready reports
"""

from .checks import (
    SUITES,
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
    run_suite,
)
from .report import CheckReport, decimal_text, fraction_text, jsonable, render_fraction

__version__ = "1.0.0"
__all__ = [
    "SUITES",
    "CheckReport",
    "check_cyclic_total",
    "check_dual_method",
    "check_exhaustive_maxima",
    "check_figure1_estimate",
    "check_interval_mono_count",
    "check_lemma_interval_total",
    "check_main_theorem",
    "check_no_dichromatic",
    "check_nonrainbow_floor",
    "check_random_baseline",
    "check_schur_composition",
    "check_schur_theorem",
    "decimal_text",
    "fraction_text",
    "half_range_rainbow",
    "jsonable",
    "render_fraction",
    "run_suite",
]

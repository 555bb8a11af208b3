"""
Constructions Package
The residue-class colorings behind the lower bounds, plus search seeds
"""

from .colorings import (
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

__version__ = "1.0.0"
__all__ = [
    "CONSTRUCTIONS",
    "known_constructions",
    "mod3_cyclic",
    "mod3_interval",
    "mod5_schur_cyclic",
    "parse_pattern",
    "periodic",
    "random_coloring",
    "repair_surjectivity",
    "seeded_random_coloring",
]

"""
Search Package
Exhaustive and local search for extremal colorings
"""

from .canonical import canonical_colors, canonical_form, is_canonical, symmetry_maps
from .exhaustive import ChunkResult, chunk_prefixes, exhaustive_search
from .local import MoveEvaluator, RestartResult, hill_climb, local_search, restart_plan
from .record import Objective, SearchRecord, prefer

__version__ = "1.0.0"
__all__ = [
    "ChunkResult",
    "MoveEvaluator",
    "Objective",
    "RestartResult",
    "SearchRecord",
    "canonical_colors",
    "canonical_form",
    "chunk_prefixes",
    "exhaustive_search",
    "hill_climb",
    "is_canonical",
    "local_search",
    "prefer",
    "restart_plan",
    "symmetry_maps",
]

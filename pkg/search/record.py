"""
Search Records
Objectives, best-so-far comparison and the reproducible result of a search
"""

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

from coloring import Coloring, CountSummary, GroundSet, LinearEquation
from counting import count_by_class


class Objective(str, Enum):
    MAX_RAINBOW = "max-rainbow"
    MIN_MONO = "min-mono"

    def measure(self, summary: CountSummary) -> int:
        """The count this objective optimizes"""
        return summary.rainbow if self is Objective.MAX_RAINBOW else summary.mono

    def score(self, rainbow: int, mono: int) -> int:
        """Larger is better for both objectives"""
        return rainbow if self is Objective.MAX_RAINBOW else -mono

    def improves(self, value: int, incumbent: int) -> bool:
        if self is Objective.MAX_RAINBOW:
            return value > incumbent
        return value < incumbent


def prefer(objective: Objective,
           candidate: Tuple[int, Tuple[int, ...]],
           incumbent: Optional[Tuple[int, Tuple[int, ...]]]) -> bool:
    """
    True if (value, colors) beats the incumbent

    Ties on value go to the lexicographically smaller color tuple, so the
    reduction is associative and commutative.
    """
    if incumbent is None:
        return True
    value, colors = candidate
    best_value, best_colors = incumbent
    if value != best_value:
        return objective.improves(value, best_value)
    return colors < best_colors


@dataclass(frozen=True)
class SearchRecord:
    """
    Best-so-far witness of an extremal search with the data to reproduce it

    complete is True only when the whole (quotiented) space was enumerated.
    """

    objective: Objective
    eq: LinearEquation
    ground: GroundSet
    best_value: int
    witness: Coloring
    explored: int
    seed: int
    budget: int
    complete: bool
    restarts: int = 0

    def reverify(self) -> bool:
        """Recount the witness with the oracle and compare with best_value"""
        summary = count_by_class(self.eq, self.witness).summary
        return self.objective.measure(summary) == self.best_value

    def to_dict(self) -> dict:
        return {
            "objective": self.objective.value,
            "eq": str(self.eq),
            "kind": self.ground.kind.value,
            "n": self.ground.n,
            "best_value": self.best_value,
            "witness": str(self.witness),
            "explored": self.explored,
            "seed": self.seed,
            "budget": self.budget,
            "restarts": self.restarts,
            "complete": self.complete,
        }

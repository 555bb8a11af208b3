"""
Local Search
Hill climbing over single-element recolorings with deterministic restarts
"""

import os
import sys
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np

# Add parent directory to path to import config
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from config import config
from coloring import Coloring, GroundSet, LinearEquation, SurjectivityError
from constructions import known_constructions, random_coloring
from counting import count_classes, incident_solutions

from .canonical import canonical_colors
from .record import Objective, SearchRecord, prefer


@dataclass(frozen=True)
class RestartResult:
    """Outcome of one hill climb; colors are canonical and one-based"""

    index: int
    start: str
    best_value: int
    best_colors: Tuple[int, ...]
    explored: int

    def to_dict(self) -> dict:
        return {
            "index": self.index,
            "start": self.start,
            "best_value": self.best_value,
            "best_colors": "".join(map(str, self.best_colors)),
            "explored": self.explored,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "RestartResult":
        return cls(
            int(data["index"]),
            str(data["start"]),
            int(data["best_value"]),
            tuple(int(c) for c in data["best_colors"]),
            int(data["explored"]),
        )


class MoveEvaluator:
    """
    Incremental objective for single-element recolorings

    Recoloring element e only changes the solutions incident to e, so a
    move is scored from that list alone.
    """

    def __init__(self, eq: LinearEquation, ground: GroundSet):
        self.n = ground.n
        self.incident = []
        self.hits = []
        for i in range(self.n):
            triples = incident_solutions(eq, ground, ground.element(i))
            self.incident.append(triples)
            self.hits.append(triples == i)

    @staticmethod
    def _tally(cx, cy, cz) -> Tuple[int, int]:
        rainbow = int(((cx != cy) & (cx != cz) & (cy != cz)).sum())
        mono = int(((cx == cy) & (cy == cz)).sum())
        return rainbow, mono

    def delta(self, codes: np.ndarray, e: int, color: int) -> Tuple[int, int]:
        """Change in (rainbow, mono) when element index e takes zero-based color"""
        triples = self.incident[e]
        hits = self.hits[e]
        cx, cy, cz = codes[triples[:, 0]], codes[triples[:, 1]], codes[triples[:, 2]]
        before = self._tally(cx, cy, cz)
        after = self._tally(
            np.where(hits[:, 0], color, cx),
            np.where(hits[:, 1], color, cy),
            np.where(hits[:, 2], color, cz),
        )
        return after[0] - before[0], after[1] - before[1]


def hill_climb(objective: Objective, eq: LinearEquation, start: Coloring, budget: int,
               evaluator: Optional[MoveEvaluator] = None) -> Tuple[int, Tuple[int, ...], int]:
    """
    Climb from a start coloring until a local optimum or the budget runs out

    A full neighborhood scan takes the steepest move, ties to the smallest
    element index and then the smallest color. When the budget ends inside a
    scan, the first improving move seen is taken instead. Moves that would
    remove the last element of a color are skipped.

    Returns:
        Tuple[int, Tuple[int, ...], int]: (objective value, one-based colors, evaluations)
    """
    ground = start.ground
    evaluator = evaluator or MoveEvaluator(eq, ground)
    codes = start.as_array().copy()
    sizes = np.bincount(codes, minlength=3)
    summary = count_classes(eq, start).summary
    rainbow, mono = summary.rainbow, summary.mono
    evaluations = 1

    spent = 0
    while True:
        steepest = None
        first_gain = None
        exhausted = False
        for e in range(ground.n):
            if sizes[codes[e]] == 1:
                continue
            for color in range(3):
                if color == codes[e]:
                    continue
                if spent >= budget:
                    exhausted = True
                    break
                spent += 1
                dr, dm = evaluator.delta(codes, e, color)
                gain = objective.score(dr, dm)
                if steepest is None or gain > steepest[0]:
                    steepest = (gain, e, color, dr, dm)
                if first_gain is None and gain > 0:
                    first_gain = (gain, e, color, dr, dm)
            if exhausted:
                break

        move = first_gain if exhausted else steepest
        if move is None or move[0] <= 0:
            break
        _, e, color, dr, dm = move
        sizes[codes[e]] -= 1
        sizes[color] += 1
        codes[e] = color
        rainbow += dr
        mono += dm
        if exhausted:
            break

    colors = tuple(int(c) + 1 for c in codes)
    value = rainbow if objective is Objective.MAX_RAINBOW else mono
    return value, colors, evaluations + spent


def restart_plan(ground: GroundSet, restarts: int) -> List[str]:
    """Start labels: every construction defined on the ground set, then random restarts"""
    plan = [f"construction:{name}" for name in sorted(known_constructions(ground))]
    plan.extend(f"random:{r}" for r in range(restarts))
    return plan


def start_coloring(ground: GroundSet, label: str, seed: int) -> Coloring:
    kind, _, key = label.partition(":")
    if kind == "construction":
        return known_constructions(ground)[key]
    rng = np.random.default_rng(np.random.SeedSequence([seed % 2 ** 64, int(key)]))
    return random_coloring(ground, rng)


def _run_restart(objective: Objective, eq: LinearEquation, ground: GroundSet,
                 index: int, label: str, seed: int, budget: int) -> RestartResult:
    start = start_coloring(ground, label, seed)
    value, colors, explored = hill_climb(objective, eq, start, budget)
    return RestartResult(index, label, value, canonical_colors(colors), explored)


def local_search(objective: Objective, eq: LinearEquation, ground: GroundSet,
                 seed: Optional[int] = None, budget: Optional[int] = None,
                 restarts: Optional[int] = None, threads: Optional[int] = None,
                 completed: Optional[Dict[int, RestartResult]] = None,
                 on_restart: Optional[Callable[[RestartResult], None]] = None,
                 on_improvement: Optional[Callable[[int, Tuple[int, ...]], None]] = None) -> SearchRecord:
    """
    Budgeted hill climbing from the known constructions and random seeds

    Args:
        objective (Objective): Maximize rainbow or minimize monochromatic count
        eq (LinearEquation): Equation to count
        ground (GroundSet): Universe to color, n >= 3
        seed (Optional[int]): Root of every restart's random stream
        budget (Optional[int]): Move evaluations allowed per restart
        restarts (Optional[int]): Number of random restarts
        threads (Optional[int]): Worker processes
        completed (Optional[Dict[int, RestartResult]]): Restarts restored from a checkpoint
        on_restart (Optional[Callable]): Called with every newly finished restart
        on_improvement (Optional[Callable]): Called in restart order when the best improves

    Returns:
        SearchRecord: Best witness found; complete is always False
    """
    if ground.n < 3:
        raise SurjectivityError(f"No surjective 3-coloring exists for n = {ground.n}")
    seed = config.DEFAULT_SEED if seed is None else seed
    budget = config.DEFAULT_BUDGET if budget is None else budget
    restarts = config.DEFAULT_RESTARTS if restarts is None else restarts
    threads = threads or config.THREADS

    plan = restart_plan(ground, restarts)
    results: Dict[int, RestartResult] = dict(completed or {})
    todo = [i for i in range(len(plan)) if i not in results]
    state = {"next": 0, "best": None}

    def fold_ready():
        while state["next"] in results:
            result = results[state["next"]]
            state["next"] += 1
            candidate = (result.best_value, result.best_colors)
            if prefer(objective, candidate, state["best"]):
                state["best"] = candidate
                if on_improvement is not None:
                    on_improvement(*candidate)

    def finish(result: RestartResult):
        results[result.index] = result
        if on_restart is not None:
            on_restart(result)
        fold_ready()

    fold_ready()
    if threads <= 1:
        for i in todo:
            finish(_run_restart(objective, eq, ground, i, plan[i], seed, budget))
    else:
        with ProcessPoolExecutor(max_workers=threads) as executor:
            futures = [
                executor.submit(_run_restart, objective, eq, ground, i, plan[i], seed, budget)
                for i in todo
            ]
            for future in as_completed(futures):
                finish(future.result())

    if state["best"] is None:
        raise SurjectivityError("Local search needs at least one restart or construction seed")
    best_value, best_colors = state["best"]
    return SearchRecord(
        objective=objective,
        eq=eq,
        ground=ground,
        best_value=best_value,
        witness=Coloring(ground, best_colors),
        explored=sum(r.explored for r in results.values()),
        seed=seed,
        budget=budget,
        complete=False,
        restarts=restarts,
    )

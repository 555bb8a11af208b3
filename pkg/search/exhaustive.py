"""
Exhaustive Extremal Search
Enumerates every surjective 3-coloring (up to symmetry) and keeps the best one
"""

import os
import sys
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass
from typing import Callable, Dict, Iterator, List, Optional, Tuple

import numpy as np
from tqdm import tqdm

# Add parent directory to path to import config
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from config import config
from coloring import Coloring, GroundSet, GuardError, LinearEquation, SurjectivityError
from counting import solution_arrays

from .canonical import (
    check_quotient_args,
    extend_all,
    extend_canonical,
    is_orbit_minimum,
    symmetry_maps,
)
from .record import Objective, SearchRecord, prefer

BATCH = 2048
CHUNK_DEPTH = 6


@dataclass(frozen=True)
class ChunkResult:
    """Best coloring of one prefix chunk; colors are one-based, None if the chunk was empty"""

    index: int
    best_value: Optional[int]
    best_colors: Optional[Tuple[int, ...]]
    explored: int

    def to_dict(self) -> dict:
        return {
            "index": self.index,
            "best_value": self.best_value,
            "best_colors": None if self.best_colors is None else "".join(map(str, self.best_colors)),
            "explored": self.explored,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ChunkResult":
        colors = data["best_colors"]
        return cls(
            int(data["index"]),
            None if data["best_value"] is None else int(data["best_value"]),
            None if colors is None else tuple(int(c) for c in colors),
            int(data["explored"]),
        )


def chunk_prefixes(n: int, quotient: bool) -> List[Tuple[int, ...]]:
    """Prefixes that split the search space into contiguous, ordered chunks"""
    depth = min(n, CHUNK_DEPTH)
    if quotient:
        return list(extend_canonical((), depth))
    return list(extend_all((), depth))


def _batches(strings: Iterator[Tuple[int, ...]]) -> Iterator[np.ndarray]:
    batch = []
    for s in strings:
        batch.append(s)
        if len(batch) == BATCH:
            yield np.array(batch, dtype=np.int64)
            batch = []
    if batch:
        yield np.array(batch, dtype=np.int64)


def _search_chunk(objective: Objective, eq: LinearEquation, ground: GroundSet,
                  index: int, prefix: Tuple[int, ...], quotient: bool,
                  symmetries: bool) -> ChunkResult:
    n = ground.n
    X, Y, Z = solution_arrays(eq, ground)
    maps = symmetry_maps(eq, ground) if symmetries else None
    strings = extend_canonical(prefix, n) if quotient else extend_all(prefix, n)

    best = None
    explored = 0
    for batch in _batches(strings):
        surjective = (batch == 0).any(1) & (batch == 1).any(1) & (batch == 2).any(1)
        batch = batch[surjective]
        if maps is not None and len(batch):
            keep = [is_orbit_minimum(row.tolist(), maps) for row in batch]
            batch = batch[np.array(keep, dtype=bool)]
        if not len(batch):
            continue
        explored += len(batch)

        cx, cy, cz = batch[:, X], batch[:, Y], batch[:, Z]
        if objective is Objective.MAX_RAINBOW:
            values = ((cx != cy) & (cx != cz) & (cy != cz)).sum(axis=1)
            target = values.max()
        else:
            values = ((cx == cy) & (cy == cz)).sum(axis=1)
            target = values.min()
        # batches arrive in lexicographic order, so the first hit is the smallest
        row = int(np.flatnonzero(values == target)[0])
        candidate = (int(target), tuple(int(c) + 1 for c in batch[row]))
        if prefer(objective, candidate, best):
            best = candidate

    if best is None:
        return ChunkResult(index, None, None, explored)
    return ChunkResult(index, best[0], best[1], explored)


def exhaustive_search(objective: Objective, eq: LinearEquation, ground: GroundSet,
                      quotient: bool = True, symmetries: bool = False,
                      override: bool = False, threads: Optional[int] = None,
                      completed: Optional[Dict[int, ChunkResult]] = None,
                      on_chunk: Optional[Callable[[ChunkResult], None]] = None,
                      on_improvement: Optional[Callable[[int, Tuple[int, ...]], None]] = None,
                      progress: bool = False) -> SearchRecord:
    """
    Find the optimum over all surjective 3-colorings

    Args:
        objective (Objective): Maximize rainbow or minimize monochromatic count
        eq (LinearEquation): Equation to count
        ground (GroundSet): Universe to color
        quotient (bool): Enumerate only canonical color labelings
        symmetries (bool): Also quotient by the ground set's affine symmetries
        override (bool): Ignore the RAINBOW_EXHAUSTIVE_MAX_N guard
        threads (Optional[int]): Worker processes (RAINBOW_THREADS by default)
        completed (Optional[Dict[int, ChunkResult]]): Chunks restored from a checkpoint
        on_chunk (Optional[Callable]): Called with every newly finished chunk
        on_improvement (Optional[Callable]): Called in chunk order when the best improves
        progress (bool): Show a progress bar on standard error

    Returns:
        SearchRecord: Optimum with the lexicographically smallest canonical witness
    """
    n = ground.n
    if n > config.EXHAUSTIVE_MAX_N and not override:
        raise GuardError(
            f"Exhaustive search over n = {n} exceeds the guard n <= {config.EXHAUSTIVE_MAX_N}; "
            "pass the override flag for long runs"
        )
    if n < 3:
        raise SurjectivityError(f"No surjective 3-coloring exists for n = {n}")
    check_quotient_args(quotient, symmetries)
    if symmetries:
        symmetry_maps(eq, ground)

    threads = threads or config.THREADS
    prefixes = chunk_prefixes(n, quotient)
    results: Dict[int, ChunkResult] = dict(completed or {})
    todo = [i for i in range(len(prefixes)) if i not in results]

    state = {"next": 0, "best": None}

    def fold_ready():
        while state["next"] in results:
            chunk = results[state["next"]]
            state["next"] += 1
            if chunk.best_value is None:
                continue
            candidate = (chunk.best_value, chunk.best_colors)
            if prefer(objective, candidate, state["best"]):
                state["best"] = candidate
                if on_improvement is not None:
                    on_improvement(*candidate)

    def finish(chunk: ChunkResult):
        results[chunk.index] = chunk
        if on_chunk is not None:
            on_chunk(chunk)
        fold_ready()

    fold_ready()
    bar = tqdm(total=len(todo), desc=f"Exhaustive {ground.describe()}", disable=not progress)
    if threads <= 1:
        for i in todo:
            finish(_search_chunk(objective, eq, ground, i, prefixes[i], quotient, symmetries))
            bar.update()
    else:
        with ProcessPoolExecutor(max_workers=threads) as executor:
            futures = [
                executor.submit(_search_chunk, objective, eq, ground, i, prefixes[i], quotient, symmetries)
                for i in todo
            ]
            for future in as_completed(futures):
                finish(future.result())
                bar.update()
    bar.close()

    best_value, best_colors = state["best"]
    return SearchRecord(
        objective=objective,
        eq=eq,
        ground=ground,
        best_value=best_value,
        witness=Coloring(ground, best_colors),
        explored=sum(r.explored for r in results.values()),
        seed=0,
        budget=0,
        complete=True,
    )

"""
Solution Enumeration Oracle
Exact enumeration of ax + by = cz over [n] and Z_n, and class counting by brute force
"""

import math
import os
import sys
from itertools import permutations
from typing import Iterator, List, Sequence, Tuple

import numpy as np

# Add parent directory to path to import config
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from config import config
from coloring import (
    Coloring,
    CountSummary,
    DomainError,
    GroundSet,
    GuardError,
    LinearEquation,
    SolutionTriple,
    UnsupportedEquationError,
)

# Upper bound on the number of (x, y) pairs materialized at once
BLOCK_PAIRS = 1 << 20

RAINBOW_CELLS = tuple(permutations(range(3)))


class ClassCountMatrix:
    """
    m[i][j][k] = number of solutions with f(x) = i + 1, f(y) = j + 1, f(z) = k + 1

    The matrix is read-only; equality compares every cell.
    """

    def __init__(self, counts):
        array = np.array(counts, dtype=np.int64).reshape(3, 3, 3)
        if (array < 0).any():
            raise DomainError("Class counts must be non-negative")
        array.flags.writeable = False
        self._array = array

    @property
    def array(self) -> np.ndarray:
        return self._array

    @property
    def total(self) -> int:
        return int(self._array.sum())

    @property
    def rainbow(self) -> int:
        return int(sum(self._array[cell] for cell in RAINBOW_CELLS))

    @property
    def mono(self) -> int:
        return int(sum(self._array[k, k, k] for k in range(3)))

    @property
    def dichromatic(self) -> int:
        return self.total - self.rainbow - self.mono

    @property
    def summary(self) -> CountSummary:
        return CountSummary(self.total, self.rainbow, self.mono, self.dichromatic)

    def mono_by_color(self) -> Tuple[int, int, int]:
        return tuple(int(self._array[k, k, k]) for k in range(3))

    def permuted(self, mapping: Sequence[int]) -> "ClassCountMatrix":
        """Counts after relabeling color c as mapping[c - 1]"""
        p = [m - 1 for m in mapping]
        out = np.zeros((3, 3, 3), dtype=np.int64)
        for i in range(3):
            for j in range(3):
                for k in range(3):
                    out[p[i], p[j], p[k]] = self._array[i, j, k]
        return ClassCountMatrix(out)

    def as_nested(self) -> List[List[List[int]]]:
        return self._array.tolist()

    def __eq__(self, other) -> bool:
        if not isinstance(other, ClassCountMatrix):
            return NotImplemented
        return bool(np.array_equal(self._array, other._array))

    __hash__ = None

    def __repr__(self) -> str:
        return f"ClassCountMatrix({self.as_nested()})"


def congruence_solution_count(c: int, s: int, n: int) -> int:
    """
    Number of z in {0..n-1} with cz = s (mod n)

    The congruence is solvable iff gcd(c, n) divides s, and then has exactly
    gcd(c, n) solutions.

    Raises:
        DomainError: if the modulus is not positive
    """
    if n < 1:
        raise DomainError(f"Modulus must be positive, got {n}")
    g = math.gcd(c, n)
    return g if s % g == 0 else 0


def congruence_roots(c: int, s: int, n: int) -> List[int]:
    """All z in {0..n-1} with cz = s (mod n), ascending"""
    if congruence_solution_count(c, s, n) == 0:
        return []
    g = math.gcd(c, n)
    m = n // g
    z0 = (s // g) * pow(c // g, -1, m) % m if m > 1 else 0
    return [z0 + k * m for k in range(g)]


def enumerate_solutions(eq: LinearEquation, ground: GroundSet) -> Iterator[Tuple[int, int, int]]:
    """
    Yield every ordered solution (x, y, z) exactly once

    Order is (x, y) lexicographic with z ascending within a pair.
    """
    n = ground.n
    for x in ground.elements():
        for y in ground.elements():
            s = eq.a * x + eq.b * y
            if ground.is_cyclic:
                for z in congruence_roots(eq.c, s, n):
                    yield (x, y, z)
            elif s % eq.c == 0 and 1 <= s // eq.c <= n:
                yield (x, y, s // eq.c)


def _divide(coef: int, s: np.ndarray, ground: GroundSet) -> Tuple[np.ndarray, np.ndarray]:
    """
    Solve coef * v = s[i] for every entry of s

    Returns positions i (repeated once per root) and the root's index in
    the ground set, roots ascending within a position.
    """
    n = ground.n
    if not ground.is_cyclic:
        v = s // coef
        ok = (s % coef == 0) & (v >= 1) & (v <= n)
        idx = np.flatnonzero(ok)
        return idx, v[idx] - 1

    g = math.gcd(coef, n)
    m = n // g
    s = s % n
    idx = np.flatnonzero(s % g == 0)
    inv = pow(coef // g, -1, m) if m > 1 else 0
    v0 = (s[idx] // g) * inv % m
    if g == 1:
        return idx, v0
    roots = v0[:, None] + m * np.arange(g, dtype=np.int64)[None, :]
    return np.repeat(idx, g), roots.ravel()


def solutions_for_rows(eq: LinearEquation, ground: GroundSet,
                       x_idx: np.ndarray) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Index arrays (X, Y, Z) of all solutions whose x has an index in x_idx"""
    n = ground.n
    off = ground.offset
    x_idx = np.asarray(x_idx, dtype=np.int64)
    values = np.arange(n, dtype=np.int64) + off
    s = (eq.a * (x_idx[:, None] + off) + eq.b * values[None, :]).ravel()
    pos, z = _divide(eq.c, s, ground)
    return x_idx[pos // n], pos % n, z


def iter_solution_blocks(eq: LinearEquation, ground: GroundSet,
                         allow_large: bool = False) -> Iterator[Tuple[np.ndarray, np.ndarray, np.ndarray]]:
    """
    Yield solution index arrays in blocks of consecutive x

    Raises:
        GuardError: if n exceeds the oracle guard and allow_large is not set
    """
    n = ground.n
    if n > config.ORACLE_MAX_N and not allow_large:
        raise GuardError(
            f"n = {n} exceeds the O(n^2) oracle guard {config.ORACLE_MAX_N}; "
            "raise RAINBOW_ORACLE_MAX_N or pass allow_large=True"
        )
    rows = max(1, BLOCK_PAIRS // n)
    for start in range(0, n, rows):
        yield solutions_for_rows(eq, ground, np.arange(start, min(n, start + rows)))


def solution_arrays(eq: LinearEquation, ground: GroundSet,
                    allow_large: bool = False) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """All solutions as three index arrays, in enumeration order"""
    blocks = list(iter_solution_blocks(eq, ground, allow_large))
    return tuple(np.concatenate([b[i] for b in blocks]) for i in range(3))


def classify_solutions(eq: LinearEquation, coloring: Coloring) -> Iterator[SolutionTriple]:
    """Every solution in enumeration order, checked and classified one at a time"""
    for x, y, z in enumerate_solutions(eq, coloring.ground):
        yield SolutionTriple.of(eq, coloring, x, y, z)


def count_total(eq: LinearEquation, ground: GroundSet, allow_large: bool = False) -> int:
    return int(sum(len(x) for x, _, _ in iter_solution_blocks(eq, ground, allow_large)))


def _check_three_colors(coloring: Coloring):
    if coloring.num_colors != 3:
        raise DomainError(f"Class counting needs a 3-coloring, got {coloring.num_colors} colors")


def count_by_class(eq: LinearEquation, coloring: Coloring,
                   allow_large: bool = False) -> ClassCountMatrix:
    """
    Classify every solution under a coloring by enumeration

    Args:
        eq (LinearEquation): Equation to count
        coloring (Coloring): 3-coloring of the ground set
        allow_large (bool): Skip the oracle size guard

    Returns:
        ClassCountMatrix: Full color-pattern counts; .summary gives the tallies
    """
    _check_three_colors(coloring)
    codes = coloring.as_array()
    counts = np.zeros(27, dtype=np.int64)
    for x, y, z in iter_solution_blocks(eq, coloring.ground, allow_large):
        counts += np.bincount(9 * codes[x] + 3 * codes[y] + codes[z], minlength=27)
    return ClassCountMatrix(counts)


def incident_solutions(eq: LinearEquation, ground: GroundSet, e: int) -> np.ndarray:
    """
    Every solution with element e in at least one coordinate, each once

    Returns:
        np.ndarray: (k, 3) array of ground-set indices, sorted lexicographically
    """
    n = ground.n
    i = ground.index(e)
    row = np.array([i], dtype=np.int64)
    values = np.arange(n, dtype=np.int64) + ground.offset

    # e as x
    x1, y1, z1 = solutions_for_rows(eq, ground, row)
    # e as y: same computation with the roles of a and b exchanged
    y2, x2, z2 = solutions_for_rows(LinearEquation(eq.b, eq.a, eq.c), ground, row)
    # e as z: b y = c e - a x for every x
    x3, y3 = _divide(eq.b, eq.c * e - eq.a * values, ground)
    z3 = np.full(len(x3), i, dtype=np.int64)

    triples = np.stack([
        np.concatenate([x1, x2, x3]),
        np.concatenate([y1, y2, y3]),
        np.concatenate([z1, z2, z3]),
    ], axis=1)
    codes = (triples[:, 0] * n + triples[:, 1]) * n + triples[:, 2]
    _, keep = np.unique(codes, return_index=True)
    return triples[keep]


def progression_class_counts(coloring: Coloring) -> ClassCountMatrix:
    """
    Class counts for x + y = 2z over Z_n swept through progressions (a, d)

    Each pair (a, d) maps to the solution (a, a + 2d, a + d); over Z_n this
    hits every solution exactly once.
    """
    _check_three_colors(coloring)
    if not coloring.ground.is_cyclic:
        raise UnsupportedEquationError("Progression sweep counts solutions over Z_n only")
    n = coloring.n
    codes = coloring.as_array()
    a = np.arange(n, dtype=np.int64)
    counts = np.zeros(27, dtype=np.int64)
    rows = max(1, BLOCK_PAIRS // n)
    for start in range(0, n, rows):
        d = np.arange(start, min(n, start + rows), dtype=np.int64)[:, None]
        x = np.broadcast_to(a[None, :], (len(d), n))
        y = (a[None, :] + 2 * d) % n
        z = (a[None, :] + d) % n
        cells = 9 * codes[x] + 3 * codes[y] + codes[z]
        counts += np.bincount(cells.ravel(), minlength=27)
    return ClassCountMatrix(counts)


def progression_rainbow_count(coloring: Coloring) -> int:
    return progression_class_counts(coloring).rainbow

"""
Core Domain Types
Universes, equations, colorings and solution classification
"""

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Sequence, Tuple

import numpy as np

from .errors import DomainError, SurjectivityError

NUM_COLORS = 3

# Expected proportions under a uniform random 3-coloring
RANDOM_RAINBOW_BASELINE = Fraction(2, 9)
RANDOM_MONO_BASELINE = Fraction(1, 9)


class GroundKind(str, Enum):
    """Which universe is colored"""

    INTERVAL = "interval"
    CYCLIC = "cyclic"


class SolutionClass(str, Enum):
    """Color pattern of a solution triple"""

    RAINBOW = "rainbow"
    MONOCHROMATIC = "monochromatic"
    DICHROMATIC = "dichromatic"


@dataclass(frozen=True)
class GroundSet:
    """
    The interval [n] = {1..n} or the cyclic group Z_n = {0..n-1}

    Elements are stored in canonical order starting from the smallest one,
    so index i always refers to element i + offset.
    """

    kind: GroundKind
    n: int

    def __post_init__(self):
        object.__setattr__(self, "kind", GroundKind(self.kind))
        if not isinstance(self.n, (int, np.integer)) or self.n < 1:
            raise DomainError(f"Ground set size must be a positive integer, got {self.n!r}")
        object.__setattr__(self, "n", int(self.n))

    @classmethod
    def interval(cls, n: int) -> "GroundSet":
        return cls(GroundKind.INTERVAL, n)

    @classmethod
    def cyclic(cls, n: int) -> "GroundSet":
        return cls(GroundKind.CYCLIC, n)

    @property
    def is_cyclic(self) -> bool:
        return self.kind is GroundKind.CYCLIC

    @property
    def offset(self) -> int:
        """Smallest element: 1 for [n], 0 for Z_n"""
        return 0 if self.is_cyclic else 1

    def elements(self) -> range:
        return range(self.offset, self.offset + self.n)

    def contains(self, e: int) -> bool:
        return self.offset <= e < self.offset + self.n

    def index(self, e: int) -> int:
        """
        Position of an element in canonical order

        Raises:
            DomainError: if e is not an element of this ground set
        """
        if not self.contains(e):
            raise DomainError(
                f"Element {e} is outside {self.describe()} "
                f"(valid range {self.offset}..{self.offset + self.n - 1})"
            )
        return e - self.offset

    def element(self, i: int) -> int:
        if not 0 <= i < self.n:
            raise DomainError(f"Index {i} is outside 0..{self.n - 1}")
        return i + self.offset

    def describe(self) -> str:
        return f"Z_{self.n}" if self.is_cyclic else f"[{self.n}]"


@dataclass(frozen=True)
class LinearEquation:
    """
    The equation ax + by = cz with positive coefficients

    The constructor divides out gcd(a, b, c), so two equations with
    proportional coefficients compare equal.
    """

    a: int
    b: int
    c: int

    def __post_init__(self):
        for name in ("a", "b", "c"):
            value = getattr(self, name)
            if not isinstance(value, (int, np.integer)) or value < 1:
                raise DomainError(f"Coefficient {name} must be a positive integer, got {value!r}")
        g = math.gcd(int(self.a), int(self.b), int(self.c))
        object.__setattr__(self, "a", int(self.a) // g)
        object.__setattr__(self, "b", int(self.b) // g)
        object.__setattr__(self, "c", int(self.c) // g)

    @classmethod
    def parse(cls, text: str) -> "LinearEquation":
        """Parse 'a,b,c' as used on the command line"""
        parts = [p.strip() for p in text.split(",")]
        if len(parts) != 3:
            raise DomainError(f"Equation must be given as a,b,c, got {text!r}")
        try:
            a, b, c = (int(p) for p in parts)
        except ValueError:
            raise DomainError(f"Equation coefficients must be integers, got {text!r}") from None
        return cls(a, b, c)

    @property
    def coefficients(self) -> Tuple[int, int, int]:
        return (self.a, self.b, self.c)

    @property
    def is_unit_sum(self) -> bool:
        """True for x + y = cz, the equations the fast path handles"""
        return self.a == 1 and self.b == 1

    @property
    def is_translation_invariant(self) -> bool:
        """Solutions stay solutions under x -> x + t for every t"""
        return self.a + self.b == self.c

    def is_solution(self, ground: GroundSet, x: int, y: int, z: int) -> bool:
        return is_solution(self, ground, x, y, z)

    def describe(self) -> str:
        def term(coef: int, var: str) -> str:
            return var if coef == 1 else f"{coef}{var}"

        return f"{term(self.a, 'x')} + {term(self.b, 'y')} = {term(self.c, 'z')}"

    def __str__(self) -> str:
        return f"{self.a},{self.b},{self.c}"


def _color_value(c) -> int:
    try:
        value = int(c)
    except (TypeError, ValueError):
        raise DomainError(f"Colors must be integers, found {c!r}") from None
    if value != c:
        raise DomainError(f"Colors must be integers, found {c!r}")
    return value


@dataclass(frozen=True)
class Coloring:
    """
    A surjective assignment of colors 1..num_colors to ground-set elements

    colors[i] is the color of ground.element(i). num_colors is kept as a
    forward-compatible hook; everything downstream assumes three colors.
    """

    ground: GroundSet
    colors: Tuple[int, ...]
    num_colors: int = NUM_COLORS

    def __post_init__(self):
        colors = tuple(_color_value(c) for c in self.colors)
        object.__setattr__(self, "colors", colors)
        if self.num_colors < 1:
            raise DomainError(f"Color count must be positive, got {self.num_colors}")
        if len(colors) != self.ground.n:
            raise DomainError(
                f"Coloring of {self.ground.describe()} needs {self.ground.n} entries, got {len(colors)}"
            )
        bad = [c for c in colors if not 1 <= c <= self.num_colors]
        if bad:
            raise DomainError(f"Colors must lie in 1..{self.num_colors}, found {bad[0]}")
        missing = sorted(set(range(1, self.num_colors + 1)) - set(colors))
        if missing:
            raise SurjectivityError(
                f"Coloring of {self.ground.describe()} is not surjective: "
                f"color(s) {', '.join(map(str, missing))} never used"
            )

    @classmethod
    def from_sequence(cls, ground: GroundSet, colors: Iterable[int],
                      num_colors: int = NUM_COLORS) -> "Coloring":
        return cls(ground, tuple(colors), num_colors)

    @property
    def n(self) -> int:
        return self.ground.n

    def color_of(self, e: int) -> int:
        return self.colors[self.ground.index(e)]

    def as_array(self) -> np.ndarray:
        """Zero-based color codes (color k -> k - 1) as an int64 array"""
        return np.asarray(self.colors, dtype=np.int64) - 1

    def color_counts(self) -> Tuple[int, ...]:
        return tuple(self.colors.count(k) for k in range(1, self.num_colors + 1))

    def relabeled(self, mapping: Sequence[int]) -> "Coloring":
        """Apply a color permutation given as mapping[old - 1] = new"""
        return Coloring(self.ground, tuple(mapping[c - 1] for c in self.colors), self.num_colors)

    def __str__(self) -> str:
        return "".join(str(c) for c in self.colors)


@dataclass(frozen=True)
class SolutionTriple:
    """A solution (x, y, z) with its color class; build it through of()"""

    x: int
    y: int
    z: int
    cls: SolutionClass

    @classmethod
    def of(cls, eq: LinearEquation, coloring: Coloring, x: int, y: int, z: int) -> "SolutionTriple":
        """
        Check the triple against the equation and classify it under the coloring

        Raises:
            DomainError: if (x, y, z) is not a solution over the coloring's ground set
        """
        if not is_solution(eq, coloring.ground, x, y, z):
            raise DomainError(f"({x}, {y}, {z}) does not solve {eq.describe()} over {coloring.ground.describe()}")
        return cls(x, y, z, classify(x, y, z, coloring))


@dataclass(frozen=True)
class CountSummary:
    """
    Exact tallies of the solutions of one equation under one coloring

    Proportions are exact rationals; they are undefined when there are no
    solutions at all.
    """

    total: int
    rainbow: int
    mono: int
    dichromatic: int

    def __post_init__(self):
        for name in ("total", "rainbow", "mono", "dichromatic"):
            value = int(getattr(self, name))
            if value < 0:
                raise DomainError(f"Count {name} must be non-negative, got {value}")
            object.__setattr__(self, name, value)
        if self.total != self.rainbow + self.mono + self.dichromatic:
            raise DomainError(
                f"Inconsistent counts: total {self.total} != "
                f"{self.rainbow} + {self.mono} + {self.dichromatic}"
            )

    def _proportion(self, count: int) -> Fraction:
        if self.total == 0:
            raise DomainError("Proportion is undefined: the equation has no solutions here")
        return Fraction(count, self.total)

    @property
    def rb(self) -> Fraction:
        return self._proportion(self.rainbow)

    @property
    def mono_prop(self) -> Fraction:
        return self._proportion(self.mono)

    @property
    def non_rainbow(self) -> int:
        return self.mono + self.dichromatic


@dataclass(frozen=True)
class DensityProfile:
    counts: Tuple[int, int, int]
    n: int

    def __post_init__(self):
        if sum(self.counts) != self.n:
            raise DomainError(f"Color counts {self.counts} do not sum to n = {self.n}")

    @property
    def densities(self) -> Tuple[Fraction, ...]:
        return tuple(Fraction(c, self.n) for c in self.counts)

    @property
    def square_sum(self) -> int:
        """c1^2 + c2^2 + c3^2, the non-rainbow floor over Z_n for x + y = 2z"""
        return sum(c * c for c in self.counts)


@dataclass(frozen=True)
class ProgressionPair:
    """First term a and common difference d of a 3-term progression"""

    a: int
    d: int


def classify(x: int, y: int, z: int, coloring: Coloring) -> SolutionClass:
    """
    Classify a triple by its colors

    Raises:
        DomainError: if an element lies outside the coloring's ground set
    """
    distinct = len({coloring.color_of(x), coloring.color_of(y), coloring.color_of(z)})
    if distinct == 3:
        return SolutionClass.RAINBOW
    if distinct == 1:
        return SolutionClass.MONOCHROMATIC
    return SolutionClass.DICHROMATIC


def is_solution(eq: LinearEquation, ground: GroundSet, x: int, y: int, z: int) -> bool:
    for e in (x, y, z):
        ground.index(e)
    lhs = eq.a * x + eq.b * y
    rhs = eq.c * z
    if ground.is_cyclic:
        return (lhs - rhs) % ground.n == 0
    return lhs == rhs


def progression_to_solution(p: ProgressionPair, ground: GroundSet) -> Tuple[int, int, int]:
    """
    Map the progression {a, a + d, a + 2d} to the solution (a, a + 2d, a + d)

    Over Z_n every pair is valid and the map is a bijection onto the solutions
    of x + y = 2z. Over [n] all three terms must land in range.
    """
    if ground.is_cyclic:
        n = ground.n
        ground.index(p.a)
        return (p.a % n, (p.a + 2 * p.d) % n, (p.a + p.d) % n)
    triple = (p.a, p.a + 2 * p.d, p.a + p.d)
    for e in triple:
        if not ground.contains(e):
            raise DomainError(
                f"Progression (a={p.a}, d={p.d}) leaves {ground.describe()} at term {e}"
            )
    return triple


def solution_to_progression(x: int, y: int, z: int, ground: GroundSet) -> ProgressionPair:
    """Inverse of progression_to_solution: d = z - x"""
    d = z - x
    if ground.is_cyclic:
        d %= ground.n
    return ProgressionPair(x, d)


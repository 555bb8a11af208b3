"""
Symmetry Quotients
Color-label canonicalization and the affine symmetries of the ground set
"""

import itertools
from typing import Iterator, List, Sequence, Tuple

import numpy as np

from coloring import Coloring, DomainError, GroundSet, LinearEquation, UnsupportedEquationError


def canonical_colors(colors: Sequence[int]) -> Tuple[int, ...]:
    """Relabel so that first occurrences of distinct colors read 1, 2, 3, ..."""
    mapping = {}
    out = []
    for c in colors:
        if c not in mapping:
            mapping[c] = len(mapping) + 1
        out.append(mapping[c])
    return tuple(out)


def canonical_form(coloring: Coloring) -> Coloring:
    """Representative of the coloring's class under the 3! color relabelings"""
    return Coloring(coloring.ground, canonical_colors(coloring.colors), coloring.num_colors)


def is_canonical(colors: Sequence[int]) -> bool:
    return tuple(colors) == canonical_colors(colors)


def extend_canonical(prefix: Sequence[int], length: int, num_colors: int = 3) -> Iterator[Tuple[int, ...]]:
    """
    Every canonical color string of the given length that starts with prefix

    Colors are zero-based here; strings that miss a color are included and
    filtered by the caller.
    """
    current = list(prefix)
    used = max(current) + 1 if current else 0

    def grow(used: int) -> Iterator[Tuple[int, ...]]:
        if len(current) == length:
            yield tuple(current)
            return
        for c in range(min(used + 1, num_colors)):
            current.append(c)
            yield from grow(max(used, c + 1))
            current.pop()

    yield from grow(used)


def extend_all(prefix: Sequence[int], length: int, num_colors: int = 3) -> Iterator[Tuple[int, ...]]:
    """Every zero-based color string of the given length that starts with prefix"""
    head = tuple(prefix)
    for tail in itertools.product(range(num_colors), repeat=length - len(head)):
        yield head + tail


def symmetry_maps(eq: LinearEquation, ground: GroundSet) -> List[np.ndarray]:
    """
    Index permutations that map the solution set of eq onto itself

    Over Z_n negation always qualifies and translations qualify when
    a + b = c; over [n] the reflection x -> n + 1 - x qualifies when
    a + b = c. The identity is always first.

    Raises:
        UnsupportedEquationError: if no symmetry beyond the identity is sound
    """
    n = ground.n
    idx = np.arange(n, dtype=np.int64)
    if ground.is_cyclic:
        shifts = range(n) if eq.is_translation_invariant else range(1)
        maps = []
        for t in shifts:
            maps.append((idx + t) % n)
            maps.append((t - idx) % n)
        return maps
    if eq.is_translation_invariant:
        return [idx, n - 1 - idx]
    raise UnsupportedEquationError(
        f"No sound symmetry of {ground.describe()} preserves {eq.describe()}; "
        "run without the symmetry flag"
    )


def is_orbit_minimum(colors: Sequence[int], maps: List[np.ndarray]) -> bool:
    """True if no symmetric image of the coloring has a smaller canonical form"""
    base = canonical_colors(colors)
    arr = np.asarray(colors)
    for perm in maps[1:]:
        if canonical_colors(arr[perm].tolist()) < base:
            return False
    return True


def check_quotient_args(quotient: bool, symmetries: bool):
    if symmetries and not quotient:
        raise DomainError("Symmetry reduction needs the color-label quotient as well")

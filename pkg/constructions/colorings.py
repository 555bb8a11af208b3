"""
Extremal Colorings
Residue-class constructions and periodic or random search seeds
"""

from typing import Dict, Optional, Sequence

import numpy as np

from coloring import Coloring, DomainError, GroundSet, SurjectivityError

# residue mod 3 -> color, for x in 1..n
MOD3_INTERVAL_TABLE = {1: 1, 2: 2, 0: 3}
# residue mod 3 -> color, for representatives 0..n-1
MOD3_CYCLIC_TABLE = {0: 1, 1: 2, 2: 3}
# residue mod 5 -> color: red on 0, blue on +-1, green on +-2
MOD5_SCHUR_TABLE = {0: 1, 1: 2, 4: 2, 2: 3, 3: 3}


def _residue_coloring(ground: GroundSet, modulus: int, table: Dict[int, int], name: str) -> Coloring:
    if ground.n < modulus:
        raise SurjectivityError(f"{name} needs n >= {modulus} to use all three colors, got n = {ground.n}")
    return Coloring(ground, tuple(table[e % modulus] for e in ground.elements()))


def mod3_interval(n: int) -> Coloring:
    """Color x in [n] by x mod 3: 1 -> 1, 2 -> 2, 0 -> 3"""
    return _residue_coloring(GroundSet.interval(n), 3, MOD3_INTERVAL_TABLE, "mod3_interval")


def mod3_cyclic(n: int) -> Coloring:
    """Color the representative x in {0..n-1} by x mod 3: 0 -> 1, 1 -> 2, 2 -> 3"""
    return _residue_coloring(GroundSet.cyclic(n), 3, MOD3_CYCLIC_TABLE, "mod3_cyclic")


def mod5_schur_cyclic(n: int) -> Coloring:
    """Color the representative x by x mod 5: 0 -> 1, +-1 -> 2, +-2 -> 3"""
    return _residue_coloring(GroundSet.cyclic(n), 5, MOD5_SCHUR_TABLE, "mod5_schur_cyclic")


def periodic(n: int, pattern: Sequence[int], ground: Optional[GroundSet] = None) -> Coloring:
    """
    Tile a color pattern over the ground set: colors[i] = pattern[i mod len(pattern)]

    Args:
        n (int): Ground set size
        pattern (Sequence[int]): Colors in {1, 2, 3}
        ground (Optional[GroundSet]): Universe to color, Z_n when omitted

    Raises:
        DomainError: if the pattern is empty
        SurjectivityError: if the tiling misses a color
    """
    if not pattern:
        raise DomainError("Periodic pattern must not be empty")
    ground = ground or GroundSet.cyclic(n)
    if ground.n != n:
        raise DomainError(f"Ground set {ground.describe()} does not have size {n}")
    return Coloring(ground, tuple(pattern[i % len(pattern)] for i in range(n)))


def parse_pattern(text: str) -> Sequence[int]:
    """Read '12332' or '1,2,3,3,2' as a color pattern"""
    digits = text.replace(",", "").replace(" ", "")
    if not digits.isdigit():
        raise DomainError(f"Pattern must consist of colors 1-3, got {text!r}")
    return [int(ch) for ch in digits]


def repair_surjectivity(colors: np.ndarray, rng: np.random.Generator) -> np.ndarray:
    """
    Give every missing color to a distinct uniformly chosen element

    Draws are repeated until the result uses all three colors; colors are
    one-based.
    """
    colors = np.array(colors, dtype=np.int64)
    n = len(colors)
    if n < 3:
        raise SurjectivityError(f"A 3-coloring needs at least 3 elements, got {n}")
    while True:
        missing = [k for k in (1, 2, 3) if not (colors == k).any()]
        if not missing:
            return colors
        spots = rng.choice(n, size=len(missing), replace=False)
        for spot, k in zip(spots, missing):
            colors[spot] = k


def random_coloring(ground: GroundSet, rng: np.random.Generator) -> Coloring:
    """Uniform color per element, then surjectivity repair"""
    colors = rng.integers(1, 4, size=ground.n)
    return Coloring(ground, tuple(repair_surjectivity(colors, rng)))


def seeded_random_coloring(ground: GroundSet, seed: int) -> Coloring:
    return random_coloring(ground, np.random.default_rng(seed))


def known_constructions(ground: GroundSet) -> Dict[str, Coloring]:
    """Every named construction defined on this ground set, by name"""
    found = {}
    n = ground.n
    if ground.is_cyclic:
        if n >= 3:
            found["mod3-cyclic"] = mod3_cyclic(n)
        if n >= 5:
            found["mod5-schur"] = mod5_schur_cyclic(n)
    elif n >= 3:
        found["mod3-interval"] = mod3_interval(n)
    return found


CONSTRUCTIONS = {
    "mod3-interval": mod3_interval,
    "mod3-cyclic": mod3_cyclic,
    "mod5-schur": mod5_schur_cyclic,
}

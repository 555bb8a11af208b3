"""
Convolution Counting Path
Exact class counts for x + y = cz from convolutions of color indicator vectors
"""

import os
import sys
import time
from typing import Dict, Tuple

import numpy as np

# Add parent directory to path to import config
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from config import config
from coloring import Coloring, DomainError, LinearEquation, UnsupportedEquationError

from .oracle import ClassCountMatrix, count_by_class

METHODS = ("auto", "direct", "fft")


def _direct_convolutions(indicators) -> Dict[Tuple[int, int], np.ndarray]:
    return {
        (i, j): np.convolve(indicators[i], indicators[j])
        for i in range(3) for j in range(i, 3)
    }


def _fft_convolutions(indicators) -> Dict[Tuple[int, int], np.ndarray]:
    """
    Convolutions through a real FFT, rounded and certified

    Every rounded value must sit within 1/4 of the transform output and the
    rounded sums must factor exactly; otherwise the direct kernel is used.
    """
    n = len(indicators[0])
    length = 2 * n - 1
    size = 1 << (length - 1).bit_length()
    spectra = [np.fft.rfft(v.astype(np.float64), size) for v in indicators]
    sums = [int(v.sum()) for v in indicators]
    out = {}
    for i in range(3):
        for j in range(i, 3):
            raw = np.fft.irfft(spectra[i] * spectra[j], size)[:length]
            rounded = np.rint(raw)
            if np.abs(raw - rounded).max(initial=0.0) >= 0.25 or (rounded < 0).any():
                return _direct_convolutions(indicators)
            conv = rounded.astype(np.int64)
            if int(conv.sum()) != sums[i] * sums[j]:
                return _direct_convolutions(indicators)
            out[(i, j)] = conv
    return out


def count_fast(eq: LinearEquation, coloring: Coloring, method: str = "auto") -> ClassCountMatrix:
    """
    Class counts for x + y = cz via pairwise color convolutions

    For each color pair (i, j) the convolution of the two indicator vectors
    counts pairs (x, y) by their sum s; each z then collects the pairs with
    cz = s (cz = s mod n over Z_n).

    Args:
        eq (LinearEquation): Equation with a = b = 1
        coloring (Coloring): 3-coloring of [n] or Z_n
        method (str): 'direct', 'fft', or 'auto' (fft from RAINBOW_FFT_MIN_N on)

    Returns:
        ClassCountMatrix: Identical to count_by_class on the same input
    """
    if not eq.is_unit_sum:
        raise UnsupportedEquationError(
            f"The convolution path handles x + y = cz only, got {eq.describe()}"
        )
    if method not in METHODS:
        raise DomainError(f"Unknown convolution method {method!r}, expected one of {METHODS}")
    if coloring.num_colors != 3:
        raise DomainError(f"Class counting needs a 3-coloring, got {coloring.num_colors} colors")

    n = coloring.n
    codes = coloring.as_array()
    indicators = np.stack([(codes == k).astype(np.int64) for k in range(3)])

    use_fft = method == "fft" or (method == "auto" and n >= config.FFT_MIN_N)
    convolutions = _fft_convolutions(indicators) if use_fft else _direct_convolutions(indicators)

    z = np.arange(n, dtype=np.int64)
    if coloring.ground.is_cyclic:
        # convolution index t is x + y; fold t >= n back onto t - n
        target = (eq.c * z) % n
        weights = indicators
    else:
        # elements are index + 1, so x + y = t + 2 and z = (t + 2) / c
        target = eq.c * (z + 1) - 2
        valid = (target >= 0) & (target <= 2 * n - 2)
        target = target[valid]
        weights = indicators[:, valid]

    matrix = np.zeros((3, 3, 3), dtype=np.int64)
    for (i, j), conv in convolutions.items():
        if coloring.ground.is_cyclic:
            sums = conv[:n].copy()
            sums[:n - 1] += conv[n:]
        else:
            sums = conv
        row = weights @ sums[target]
        matrix[i, j] = row
        matrix[j, i] = row
    return ClassCountMatrix(matrix)


def time_counting(eq: LinearEquation, coloring: Coloring) -> Tuple[float, float]:
    """
    Wall-clock seconds of (oracle, convolution path) on the same input

    Raises:
        AssertionError: if the two paths disagree
    """
    start = time.perf_counter()
    slow = count_by_class(eq, coloring)
    oracle_seconds = time.perf_counter() - start

    start = time.perf_counter()
    fast = count_fast(eq, coloring)
    fast_seconds = time.perf_counter() - start

    assert slow == fast, "convolution counts disagree with the oracle"
    return oracle_seconds, fast_seconds


def count_classes(eq: LinearEquation, coloring: Coloring) -> ClassCountMatrix:
    """Use the convolution path when it applies, the oracle otherwise"""
    if eq.is_unit_sum:
        return count_fast(eq, coloring)
    return count_by_class(eq, coloring)

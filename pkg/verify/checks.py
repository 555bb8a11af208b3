"""
Finite-n Checks
Every quantitative claim about rainbow and monochromatic counts as a concrete
inequality or identity, recomputed by enumeration at assertion time
"""

import os
import sys
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Optional, Sequence

import numpy as np
from tqdm import tqdm

# Add parent directory to path to import config
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from config import config
from coloring import (
    RANDOM_MONO_BASELINE,
    RANDOM_RAINBOW_BASELINE,
    Coloring,
    DomainError,
    GroundSet,
    LinearEquation,
    UnsupportedEquationError,
)
from constructions import known_constructions, mod3_cyclic, mod3_interval, mod5_schur_cyclic, seeded_random_coloring
from counting import (
    balanced_square_sum,
    count_by_class,
    count_fast,
    count_total,
    density_profile,
    expected_uniform_counts,
    progression_rainbow_count,
    total_count_formula,
)
from search import Objective, exhaustive_search

from .report import CheckReport

TWO_THIRDS = Fraction(2, 3)
ONE_THIRD = Fraction(1, 3)

AP = LinearEquation(1, 1, 2)
SCHUR = LinearEquation(1, 1, 1)

# fast-path results are cross-checked against the oracle up to this n
ORACLE_CROSS_CHECK_N = 64
# quotiented and unquotiented exhaustive searches are compared up to this n
UNQUOTIENTED_MAX_N = 8


def _budget() -> int:
    return config.ERROR_BUDGET_K


def half_range_rainbow(n: int) -> int:
    """
    Rainbow count of mod3_cyclic(n) for x + y = 2z recounted over half the differences

    A progression (x, x + d, x + 2d) with x + 2d < n is rainbow iff 3 does not
    divide d. Differences d and n - d describe the same solutions read
    backwards, so the half-range count is doubled. The self-paired
    differences contribute nothing: d = 0 is divisible by 3 and d = n/2 leaves
    no room for x + 2d < n. Exact for 3 not dividing n.
    """
    def term(d: int) -> int:
        return max(0, n - 2 * d) if d % 3 else 0

    return 2 * sum(term(d) for d in range(1, n // 2 + 1))


def check_lemma_interval_total(c: int, n_range: Iterable[int]) -> CheckReport:
    """
    Total solutions of x + y = cz over [n] stay within K * n of n^2 / c

    Raises:
        UnsupportedEquationError: if c < 2
    """
    if c < 2:
        raise UnsupportedEquationError(f"The interval total check needs c >= 2, got c = {c}")
    k = _budget()
    eq = LinearEquation(1, 1, c)
    report = CheckReport(f"lemma-interval c={c}", f"|T(n) - n^2/{c}| <= {k} n over [n]", budget_k=k)
    for n in n_range:
        ground = GroundSet.interval(n)
        predicted = total_count_formula(eq, ground).leading
        total = count_total(eq, ground)
        error = abs(total - predicted)
        report.observe(error / n)
        report.add({"n": n, "c": c, "total": total, "leading": predicted, "error": error}, error <= k * n)
    return report


def check_cyclic_total(eq: LinearEquation, n_range: Iterable[int]) -> CheckReport:
    """Every normalized equation has exactly n^2 solutions over Z_n"""
    report = CheckReport(f"cyclic-total {eq}", f"T(n) = n^2 over Z_n for {eq.describe()}")
    for n in n_range:
        total = count_total(eq, GroundSet.cyclic(n))
        report.add({"n": n, "eq": str(eq), "total": total, "expected": n * n}, total == n * n)
    return report


def check_no_dichromatic(n_range: Iterable[int]) -> CheckReport:
    """mod3_interval(n) leaves no dichromatic solution of x + y = 2z"""
    report = CheckReport("no-dichromatic", "dichromatic = 0 under mod3_interval for x + y = 2z")
    for n in n_range:
        if n < 3:
            continue
        coloring = mod3_interval(n)
        fast = count_fast(AP, coloring)
        ok = fast.dichromatic == 0
        row = {"n": n, "total": fast.total, "rainbow": fast.rainbow, "mono": fast.mono,
               "dichromatic": fast.dichromatic}
        if n <= ORACLE_CROSS_CHECK_N:
            agrees = count_by_class(AP, coloring) == fast
            row["oracle_agrees"] = agrees
            ok = ok and agrees
        report.add(row, ok)
    return report


def _tested_cyclic_colorings(n: int) -> Dict[str, Coloring]:
    ground = GroundSet.cyclic(n)
    colorings = dict(known_constructions(ground))
    for j in range(2):
        colorings[f"random:{j}"] = seeded_random_coloring(ground, 1000 * n + j)
    return colorings


def check_main_theorem(n_range: Iterable[int]) -> CheckReport:
    """
    Rainbow proportion bounds for x + y = 2z

    (i) mod3_interval reaches 2/3 - K/n over [n]; (ii) mod3_cyclic reaches
    exactly 2/3 over Z_n when 3 | n; (iii) otherwise at least 1/3 - K/n;
    (iv) no coloring tested over Z_n beats n^2 - (c1^2 + c2^2 + c3^2) <= 2n^2/3.
    """
    k = _budget()
    report = CheckReport("main-theorem", "rb >= 2/3 - K/n on [n]; rb = 2/3 on Z_3t; 1/3 - K/n <= rb <= 2/3 on Z_n",
                         budget_k=k)
    for n in n_range:
        if n < 3:
            continue
        eps = Fraction(k, n)

        rb = count_by_class(AP, mod3_interval(n)).summary.rb
        report.observe((TWO_THIRDS - rb) * n)
        report.add({"n": n, "clause": "interval", "rb": rb, "bound": TWO_THIRDS - eps},
                   rb >= TWO_THIRDS - eps)

        summary = count_by_class(AP, mod3_cyclic(n)).summary
        if n % 3 == 0:
            report.add({"n": n, "clause": "cyclic-3t", "rainbow": summary.rainbow, "rb": summary.rb},
                       summary.rb == TWO_THIRDS)
        else:
            report.observe((ONE_THIRD - summary.rb) * n)
            report.add({"n": n, "clause": "cyclic", "rainbow": summary.rainbow, "rb": summary.rb,
                        "bound": ONE_THIRD - eps},
                       ONE_THIRD - eps <= summary.rb <= TWO_THIRDS)

        for name, coloring in _tested_cyclic_colorings(n).items():
            rainbow = count_by_class(AP, coloring).rainbow
            ceiling = n * n - density_profile(coloring).square_sum
            report.add({"n": n, "clause": "universal", "coloring": name, "rainbow": rainbow,
                        "ceiling": ceiling},
                       rainbow <= ceiling and Fraction(rainbow, n * n) <= TWO_THIRDS)
    return report


def check_nonrainbow_floor(colorings: Optional[Sequence[Coloring]] = None,
                           n_range: Optional[Iterable[int]] = None,
                           samples: int = 1000, seed: int = 0) -> CheckReport:
    """
    Non-rainbow solutions of x + y = 2z over Z_n number at least c1^2 + c2^2 + c3^2

    Each same-colored pair (x, z) fixes y = 2z - x, so the bound is exact
    counting. Without explicit colorings, samples random colorings are drawn
    with n cycling through n_range.

    Raises:
        DomainError: if a coloring is not over Z_n
    """
    if colorings is None:
        sizes = [n for n in (range(5, 41) if n_range is None else n_range) if n >= 3]
        rng = np.random.default_rng(seed)
        colorings = []
        for i in range(samples if sizes else 0):
            ground = GroundSet.cyclic(sizes[i % len(sizes)])
            colorings.append(seeded_random_coloring(ground, int(rng.integers(2 ** 32))))
    report = CheckReport("nonrainbow-floor", "mono + dichromatic >= c1^2 + c2^2 + c3^2 over Z_n for x + y = 2z")
    for coloring in colorings:
        if not coloring.ground.is_cyclic:
            raise DomainError(f"The non-rainbow floor is stated over Z_n, got {coloring.ground.describe()}")
        n = coloring.n
        non_rainbow = count_by_class(AP, coloring).summary.non_rainbow
        floor = density_profile(coloring).square_sum
        balanced = balanced_square_sum(n)
        report.add({"n": n, "counts": list(coloring.color_counts()), "non_rainbow": non_rainbow,
                    "floor": floor, "balanced_floor": balanced},
                   non_rainbow >= floor >= balanced)
    return report


def check_figure1_estimate(n_range: Iterable[int]) -> CheckReport:
    """
    For 3 not dividing n, mod3_cyclic(n) has n^2/3 + O(n) rainbow solutions

    The direct count must equal the half-range recount exactly.
    """
    k = _budget()
    report = CheckReport("figure1", "rainbow = n^2/3 +- K n under mod3_cyclic for 3 not dividing n; recount agrees",
                         budget_k=k)
    for n in n_range:
        if n < 3 or n % 3 == 0:
            continue
        direct = count_by_class(AP, mod3_cyclic(n)).rainbow
        recount = half_range_rainbow(n)
        estimate = Fraction(n * n, 3)
        error = abs(direct - estimate)
        report.observe(error / n)
        report.add({"n": n, "rainbow": direct, "recount": recount, "estimate": estimate,
                    "estimate_rb": ONE_THIRD},
                   direct == recount and error <= k * n)
    return report


def check_schur_theorem(n_range: Iterable[int]) -> CheckReport:
    """mod5_schur_cyclic(n) leaves n^2/25 red-only Schur triples when 5 | n, about n^2/10 otherwise"""
    k = _budget()
    report = CheckReport("schur", "mono = n^2/25 (all red) if 5 | n, |mono - n^2/10| <= K n otherwise", budget_k=k)
    for n in n_range:
        if n < 5:
            continue
        counts = count_by_class(SCHUR, mod5_schur_cyclic(n))
        mono = counts.mono
        by_color = list(counts.mono_by_color())
        if n % 5 == 0:
            expected = n * n // 25
            report.add({"n": n, "mono": mono, "by_color": by_color, "expected": expected},
                       mono == expected and by_color == [expected, 0, 0])
        else:
            leading = Fraction(n * n, 10)
            error = abs(mono - leading)
            report.observe(error / n)
            report.add({"n": n, "mono": mono, "by_color": by_color, "leading": leading,
                        "mono_prop": counts.summary.mono_prop},
                       error <= k * n)
    return report


def check_schur_composition(n_range: Iterable[int]) -> CheckReport:
    """
    Per-color Schur triples under mod5_schur_cyclic(n) for 5 not dividing n

    Red collects about n^2/50. Of blue and green, the color holding the
    residues +-(n mod 5) collects about 3n^2/50 and the other about n^2/50.
    """
    k = _budget()
    report = CheckReport("schur-composition", "red ~ n^2/50, blue/green ~ 3n^2/50 and n^2/50 by n mod 5",
                         budget_k=k)
    for n in n_range:
        if n < 5 or n % 5 == 0:
            continue
        by_color = count_by_class(SCHUR, mod5_schur_cyclic(n)).mono_by_color()
        small, large = Fraction(n * n, 50), Fraction(3 * n * n, 50)
        expected = (small, large, small) if n % 5 in (1, 4) else (small, small, large)
        errors = [abs(got - want) for got, want in zip(by_color, expected)]
        report.observe(max(errors) / n)
        report.add({"n": n, "by_color": list(by_color), "expected": list(expected)},
                   all(e <= k * n for e in errors))
    return report


def check_interval_mono_count(n_range: Iterable[int]) -> CheckReport:
    """Under mod3_interval(n) the monochromatic solutions of x + y = 2z are the pairs x = y (mod 6)"""
    k = _budget()
    report = CheckReport("interval-mono", "mono = #{x = y mod 6}, mono ~ n^2/6, rainbow ~ n^2/3", budget_k=k)
    for n in n_range:
        if n < 3:
            continue
        summary = count_by_class(AP, mod3_interval(n)).summary
        classes = np.bincount(np.arange(1, n + 1) % 6, minlength=6)
        same_class = int((classes * classes).sum())
        mono_error = abs(summary.mono - Fraction(n * n, 6))
        rainbow_error = abs(summary.rainbow - Fraction(n * n, 3))
        report.observe(max(mono_error, rainbow_error) / n)
        report.add({"n": n, "mono": summary.mono, "same_class_pairs": same_class, "rainbow": summary.rainbow},
                   summary.mono == same_class and mono_error <= k * n and rainbow_error <= k * n)
    return report


def check_random_baseline(eq: LinearEquation, kind: str, n_range: Iterable[int]) -> CheckReport:
    """
    Uniform random colorings sit within K/n of rb = 2/9 and mono = 1/9

    The constructions beat the baselines: mod3 colorings exceed 2/9 for
    x + y = 2z, and mod5_schur_cyclic(5t) stays below 1/9 for x + y = z.
    """
    if kind not in ("interval", "cyclic"):
        raise DomainError(f"Ground kind must be interval or cyclic, got {kind!r}")
    k = _budget()
    report = CheckReport(f"random-baseline {eq} {kind}",
                         "expected rb within K/n of 2/9 and mono within K/n of 1/9", budget_k=k)
    for n in n_range:
        ground = GroundSet.cyclic(n) if kind == "cyclic" else GroundSet.interval(n)
        total = count_total(eq, ground)
        if total == 0:
            report.add({"n": n, "total": 0, "rb": None})
            continue
        rainbow, mono = expected_uniform_counts(eq, ground)
        rb, mono_prop = rainbow / total, mono / total
        eps = Fraction(k, n)
        report.observe(max(abs(rb - RANDOM_RAINBOW_BASELINE), abs(mono_prop - RANDOM_MONO_BASELINE)) * n)
        report.add({"n": n, "total": total, "expected_rb": rb, "expected_mono_prop": mono_prop},
                   abs(rb - RANDOM_RAINBOW_BASELINE) <= eps and abs(mono_prop - RANDOM_MONO_BASELINE) <= eps)

        if eq == AP and n >= 3:
            coloring = mod3_cyclic(n) if ground.is_cyclic else mod3_interval(n)
            built = count_by_class(eq, coloring).summary.rb
            report.add({"n": n, "construction": "mod3", "rb": built}, built > RANDOM_RAINBOW_BASELINE)
        if eq == SCHUR and ground.is_cyclic and n % 5 == 0:
            built = count_by_class(eq, mod5_schur_cyclic(n)).summary.mono_prop
            report.add({"n": n, "construction": "mod5-schur", "mono_prop": built},
                       built < RANDOM_MONO_BASELINE)
    return report


def check_dual_method(n_range: Iterable[int]) -> CheckReport:
    """Oracle, progression sweep and convolution agree on mod3_cyclic(n); so does the half-range recount"""
    report = CheckReport("dual-method", "independent rainbow counts of mod3_cyclic agree exactly")
    for n in n_range:
        if n < 3:
            continue
        coloring = mod3_cyclic(n)
        direct = count_by_class(AP, coloring)
        swept = progression_rainbow_count(coloring)
        fast = count_fast(AP, coloring)
        row = {"n": n, "direct": direct.rainbow, "progressions": swept, "convolution": fast.rainbow}
        ok = direct == fast and swept == direct.rainbow
        if n % 3:
            row["half_range"] = half_range_rainbow(n)
            ok = ok and row["half_range"] == direct.rainbow
        report.add(row, ok)
    return report


def check_exhaustive_maxima(n_range: Iterable[int]) -> CheckReport:
    """
    Exact maximum rainbow count over Z_n for small n

    The maximum never exceeds n^2 minus the balanced square sum and equals
    2n^2/3 when 3 | n. For 3 not dividing n the maxima are recorded as data.
    Up to UNQUOTIENTED_MAX_N the quotiented search must match the full one.
    """
    report = CheckReport("exhaustive", "max rainbow <= n^2 - balanced floor, = 2n^2/3 when 3 | n")
    for n in n_range:
        if n < 3:
            continue
        ground = GroundSet.cyclic(n)
        record = exhaustive_search(Objective.MAX_RAINBOW, AP, ground, override=True)
        ceiling = n * n - balanced_square_sum(n)
        ok = record.best_value <= ceiling
        if n % 3 == 0:
            ok = ok and 3 * record.best_value == 2 * n * n
        row = {"n": n, "max_rainbow": record.best_value, "witness": str(record.witness), "ceiling": ceiling,
               "explored": record.explored}
        if n <= UNQUOTIENTED_MAX_N:
            full = exhaustive_search(Objective.MAX_RAINBOW, AP, ground, quotient=False, override=True)
            row["unquotiented_agrees"] = (full.best_value, full.witness) == (record.best_value, record.witness)
            ok = ok and row["unquotiented_agrees"]
        report.add(row, ok)
    return report


def _capped(start: int, max_n: int, limit: Optional[int] = None) -> range:
    stop = max_n if limit is None else min(max_n, limit)
    return range(start, stop + 1)


SUITES: Dict[str, Callable[[int], List[CheckReport]]] = {
    "lemma-interval": lambda m: [check_lemma_interval_total(c, _capped(1, m)) for c in range(2, 6)],
    "cyclic-total": lambda m: [check_cyclic_total(eq, _capped(1, m))
                               for eq in (AP, SCHUR, LinearEquation(2, 3, 5))],
    "no-dichromatic": lambda m: [check_no_dichromatic(_capped(3, m))],
    "main-theorem": lambda m: [check_main_theorem(_capped(3, m))],
    "nonrainbow-floor": lambda m: [check_nonrainbow_floor(n_range=_capped(5, m))],
    "figure1": lambda m: [check_figure1_estimate(_capped(3, m))],
    "schur": lambda m: [check_schur_theorem(_capped(5, m))],
    "schur-composition": lambda m: [check_schur_composition(_capped(5, m))],
    "interval-mono": lambda m: [check_interval_mono_count(_capped(3, m))],
    "random-baseline": lambda m: [check_random_baseline(AP, "interval", _capped(1, m)),
                                  check_random_baseline(AP, "cyclic", _capped(1, m)),
                                  check_random_baseline(SCHUR, "cyclic", _capped(1, m))],
    "dual-method": lambda m: [check_dual_method(_capped(3, m))],
    "exhaustive": lambda m: [check_exhaustive_maxima(_capped(3, m, 10))],
}


def run_suite(name: str, max_n: int, progress: bool = False) -> List[CheckReport]:
    """
    Run a named suite, or every suite for 'all'

    Args:
        name (str): Suite name from SUITES, or 'all'
        max_n (int): Largest n any check visits
        progress (bool): Show a progress bar over suites on standard error

    Returns:
        List[CheckReport]: One report per check, failing ones included

    Raises:
        DomainError: if the suite name is unknown or max_n < 1
    """
    if max_n < 1:
        raise DomainError(f"max_n must be positive, got {max_n}")
    if name == "all":
        names = list(SUITES)
    elif name in SUITES:
        names = [name]
    else:
        raise DomainError(f"Unknown suite {name!r}; choose one of: all, {', '.join(SUITES)}")

    reports = []
    for suite in tqdm(names, desc="Verifying", disable=not progress):
        reports.extend(SUITES[suite](max_n))
    return reports

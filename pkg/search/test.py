"""
Search Tests
Canonical forms, exhaustive optimum, symmetry quotients and local search
"""

import os
import sys

import pytest
from hypothesis import given
from hypothesis import strategies as st

# Add parent directory to path to import modules
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from coloring import (
    Coloring,
    DomainError,
    GroundSet,
    GuardError,
    LinearEquation,
    SurjectivityError,
    UnsupportedEquationError,
)
from constructions import mod3_cyclic, mod3_interval, seeded_random_coloring
from counting import count_by_class
from search import (
    MoveEvaluator,
    Objective,
    canonical_colors,
    canonical_form,
    chunk_prefixes,
    exhaustive_search,
    hill_climb,
    is_canonical,
    local_search,
    prefer,
    restart_plan,
    symmetry_maps,
)

AP = LinearEquation(1, 1, 2)
SCHUR = LinearEquation(1, 1, 1)

# Stirling numbers of the second kind S(n, 3)
SURJECTIVE_CANONICAL = {3: 1, 4: 6, 5: 25, 6: 90, 7: 301, 8: 966}


def test_canonical_form_examples():
    ground = GroundSet.cyclic(4)
    assert canonical_form(Coloring(ground, (2, 3, 1, 2))).colors == (1, 2, 3, 1)
    assert canonical_colors((1, 2, 3)) == (1, 2, 3)
    assert is_canonical((1, 1, 2, 3))
    assert not is_canonical((2, 1, 3))


@given(st.lists(st.integers(1, 3), min_size=3, max_size=30).filter(lambda c: set(c) == {1, 2, 3}))
def test_canonical_form_is_idempotent_and_count_invariant(colors):
    coloring = Coloring(GroundSet.cyclic(len(colors)), tuple(colors))
    canonical = canonical_form(coloring)
    assert canonical_form(canonical) == canonical
    assert count_by_class(AP, canonical).summary == count_by_class(AP, coloring).summary


def test_prefer_breaks_ties_lexicographically():
    assert prefer(Objective.MAX_RAINBOW, (5, (1, 2, 3)), None)
    assert prefer(Objective.MAX_RAINBOW, (6, (1, 2, 3)), (5, (1, 1, 2)))
    assert prefer(Objective.MIN_MONO, (4, (1, 2, 3)), (5, (1, 1, 2)))
    assert prefer(Objective.MAX_RAINBOW, (5, (1, 1, 2)), (5, (1, 2, 3)))
    assert not prefer(Objective.MAX_RAINBOW, (5, (1, 2, 3)), (5, (1, 1, 2)))


def test_exhaustive_examples():
    record = exhaustive_search(Objective.MAX_RAINBOW, AP, GroundSet.cyclic(3))
    assert record.best_value == 6
    assert record.complete
    assert str(record.witness) == "123"

    assert exhaustive_search(Objective.MAX_RAINBOW, AP, GroundSet.cyclic(6)).best_value == 24
    assert exhaustive_search(Objective.MIN_MONO, SCHUR, GroundSet.cyclic(5)).best_value == 1


def test_exhaustive_counts_canonical_surjective_colorings():
    for n, expected in SURJECTIVE_CANONICAL.items():
        record = exhaustive_search(Objective.MAX_RAINBOW, AP, GroundSet.cyclic(n))
        assert record.explored == expected
        full = exhaustive_search(Objective.MAX_RAINBOW, AP, GroundSet.cyclic(n), quotient=False)
        assert full.explored == 6 * expected


@pytest.mark.parametrize("kind", ["interval", "cyclic"])
@pytest.mark.parametrize("objective, eq", [(Objective.MAX_RAINBOW, AP), (Objective.MIN_MONO, SCHUR)])
def test_quotient_matches_full_enumeration(kind, objective, eq):
    for n in range(3, 9):
        ground = GroundSet.cyclic(n) if kind == "cyclic" else GroundSet.interval(n)
        quotiented = exhaustive_search(objective, eq, ground)
        full = exhaustive_search(objective, eq, ground, quotient=False)
        assert (quotiented.best_value, quotiented.witness) == (full.best_value, full.witness)
        assert quotiented.reverify()


def test_exhaustive_upper_bound_on_cyclic_groups():
    for n in range(3, 10):
        best = exhaustive_search(Objective.MAX_RAINBOW, AP, GroundSet.cyclic(n)).best_value
        assert best <= 2 * n * n // 3
        if n % 3 == 0:
            assert 3 * best == 2 * n * n


@pytest.mark.parametrize("eq, ground", [
    (AP, GroundSet.cyclic(9)),
    (AP, GroundSet.interval(9)),
    (SCHUR, GroundSet.cyclic(8)),
    (LinearEquation(2, 3, 5), GroundSet.interval(8)),
])
def test_symmetry_quotient_keeps_optimum_and_witness(eq, ground):
    plain = exhaustive_search(Objective.MAX_RAINBOW, eq, ground)
    reduced = exhaustive_search(Objective.MAX_RAINBOW, eq, ground, symmetries=True)
    assert (reduced.best_value, reduced.witness) == (plain.best_value, plain.witness)
    assert reduced.explored <= plain.explored


def test_symmetry_maps():
    assert len(symmetry_maps(AP, GroundSet.cyclic(7))) == 14
    assert len(symmetry_maps(SCHUR, GroundSet.cyclic(7))) == 2
    assert symmetry_maps(AP, GroundSet.interval(5))[1].tolist() == [4, 3, 2, 1, 0]
    with pytest.raises(UnsupportedEquationError):
        symmetry_maps(SCHUR, GroundSet.interval(5))


def test_exhaustive_argument_errors():
    with pytest.raises(GuardError):
        exhaustive_search(Objective.MAX_RAINBOW, AP, GroundSet.cyclic(17))
    with pytest.raises(SurjectivityError):
        exhaustive_search(Objective.MAX_RAINBOW, AP, GroundSet.cyclic(2))
    with pytest.raises(DomainError):
        exhaustive_search(Objective.MAX_RAINBOW, AP, GroundSet.cyclic(5), quotient=False, symmetries=True)
    with pytest.raises(UnsupportedEquationError):
        exhaustive_search(Objective.MAX_RAINBOW, SCHUR, GroundSet.interval(5), symmetries=True)


def test_exhaustive_resume_and_threads_agree():
    ground = GroundSet.cyclic(9)
    chunks = []
    improvements = []
    baseline = exhaustive_search(Objective.MAX_RAINBOW, AP, ground, on_chunk=chunks.append,
                                 on_improvement=lambda v, c: improvements.append((v, c)))
    assert len(chunks) == len(chunk_prefixes(9, True))
    assert improvements[-1] == (baseline.best_value, baseline.witness.colors)

    restored = {c.index: c for c in chunks[: len(chunks) // 2]}
    resumed = exhaustive_search(Objective.MAX_RAINBOW, AP, ground, completed=restored)
    assert resumed == baseline

    threaded = exhaustive_search(Objective.MAX_RAINBOW, AP, ground, threads=2)
    assert threaded == baseline


@given(st.integers(3, 25), st.integers(0, 10 ** 6), st.data())
def test_move_delta_matches_recount(n, seed, data):
    ground = GroundSet.interval(n) if seed % 2 else GroundSet.cyclic(n)
    coloring = seeded_random_coloring(ground, seed)
    evaluator = MoveEvaluator(AP, ground)
    e = data.draw(st.integers(0, n - 1))
    color = data.draw(st.integers(0, 2))
    codes = coloring.as_array()
    moved = codes.copy()
    moved[e] = color
    if len(set(moved.tolist())) < 3:
        return
    before = count_by_class(AP, coloring).summary
    after = count_by_class(AP, Coloring(ground, tuple(moved + 1))).summary
    assert evaluator.delta(codes, e, color) == (after.rainbow - before.rainbow, after.mono - before.mono)


def test_hill_climb_never_worsens():
    ground = GroundSet.cyclic(20)
    start = seeded_random_coloring(ground, 11)
    before = count_by_class(AP, start).rainbow
    value, colors, evaluations = hill_climb(Objective.MAX_RAINBOW, AP, start, budget=500)
    assert value >= before
    assert count_by_class(AP, Coloring(ground, colors)).rainbow == value
    assert evaluations <= 501


def test_hill_climb_with_zero_budget_keeps_start():
    start = mod3_cyclic(9)
    value, colors, evaluations = hill_climb(Objective.MAX_RAINBOW, AP, start, budget=0)
    assert (value, colors, evaluations) == (54, start.colors, 1)


def test_restart_plan():
    assert restart_plan(GroundSet.cyclic(9), 2) == [
        "construction:mod3-cyclic", "construction:mod5-schur", "random:0", "random:1",
    ]
    assert restart_plan(GroundSet.interval(9), 1) == ["construction:mod3-interval", "random:0"]


def test_local_search_keeps_construction_value():
    record = local_search(Objective.MAX_RAINBOW, AP, GroundSet.cyclic(9), seed=0, budget=0, restarts=3)
    assert record.best_value == 54
    assert not record.complete
    assert record.reverify()


def test_local_search_beats_interval_construction():
    ground = GroundSet.interval(30)
    record = local_search(Objective.MAX_RAINBOW, AP, ground, seed=42, budget=2000, restarts=20)
    assert record.best_value >= count_by_class(AP, mod3_interval(30)).rainbow
    assert record.reverify()


def test_local_search_is_reproducible():
    ground = GroundSet.interval(20)
    runs = [
        local_search(Objective.MIN_MONO, SCHUR, ground, seed=7, budget=300, restarts=4, threads=threads)
        for threads in (1, 1, 2)
    ]
    assert runs[0] == runs[1] == runs[2]
    assert runs[0].witness == canonical_form(runs[0].witness)


def test_local_search_resume():
    ground = GroundSet.cyclic(15)
    finished = []
    baseline = local_search(Objective.MAX_RAINBOW, AP, ground, seed=3, budget=200, restarts=3,
                            on_restart=finished.append)
    restored = {r.index: r for r in finished[:2]}
    resumed = local_search(Objective.MAX_RAINBOW, AP, ground, seed=3, budget=200, restarts=3,
                           completed=restored)
    assert resumed == baseline


def test_local_search_needs_three_elements():
    with pytest.raises(SurjectivityError):
        local_search(Objective.MAX_RAINBOW, AP, GroundSet.cyclic(2))


if __name__ == "__main__":
    sys.exit(pytest.main([__file__]))

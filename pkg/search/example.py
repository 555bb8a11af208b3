"""
Rainbow Schur Triples Example
Tracks the best rainbow proportion of x + y = z over [n] as n grows
"""

import os
import sys
from fractions import Fraction

# Add parent directory to path to import modules
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from coloring import GroundSet, LinearEquation
from counting import count_total
from search import Objective, exhaustive_search, local_search

SCHUR = LinearEquation(1, 1, 1)
EXHAUSTIVE_UP_TO = 12


def best_rainbow(n: int):
    """Exact optimum while exhaustive search is cheap, budgeted local search after that"""
    ground = GroundSet.interval(n)
    if n <= EXHAUSTIVE_UP_TO:
        return exhaustive_search(Objective.MAX_RAINBOW, SCHUR, ground)
    return local_search(Objective.MAX_RAINBOW, SCHUR, ground, seed=n, budget=5000, restarts=16)


def main():
    """Print the best rainbow proportion found for n = 5..30"""
    print("🚀 Rainbow Schur triples over [n]")
    print("=" * 60)
    print("📊 Reference proportion: 2/5 = 0.4")

    for n in range(5, 31):
        record = best_rainbow(n)
        total = count_total(SCHUR, record.ground)
        proportion = Fraction(record.best_value, total)
        tag = "exact" if record.complete else "local"
        print(f"  n={n:3d}  {record.best_value:4d}/{total:<4d} = {float(proportion):.4f} ({tag})  {record.witness}")

    print("\n💡 Local-search rows are lower bounds only")


if __name__ == "__main__":
    main()

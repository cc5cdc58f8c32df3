"""Measure how often each method lets a dominated alternative outrank its
dominator, over random positive matrices with one injected dominated row.

Dominance preservation is provable for seven of the nine methods; CODAS
(whose threshold function can ignore small Euclidean gaps) and PROBID (whose
tier geometry moves with every row) are the open cases this survey measures.

Usage: python scripts/dominance_survey.py [--cases 2000] [--seed 7]
"""

from __future__ import annotations

import argparse

import numpy as np

from refrank.core import CriterionSpec, DecisionProblem, Direction, Method, ValidationError
from refrank.methods import run_method


def random_problem_with_dominated_row(rng) -> tuple[DecisionProblem, int]:
    m = int(rng.integers(2, 10))
    n = int(rng.integers(1, 7))
    values = rng.uniform(0.1, 1000.0, size=(m, n))
    directions = [Direction(rng.choice(["max", "min"])) for _ in range(n)]
    raw = rng.uniform(0.05, 1.0, size=n)
    weights = raw / raw.sum()
    target = int(rng.integers(0, m))
    factors = np.array([
        rng.uniform(0.5, 0.9) if d is Direction.MAX else rng.uniform(1.1, 1.5)
        for d in directions
    ])
    rows = np.vstack([values, values[target] * factors])
    criteria = tuple(
        CriterionSpec(f"C{j + 1}", directions[j], float(weights[j])) for j in range(n)
    )
    labels = tuple(f"A{i + 1}" for i in range(m)) + ("DOM",)
    return DecisionProblem(labels, criteria, rows), target


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--cases", type=int, default=2000)
    parser.add_argument("--seed", type=int, default=7)
    args = parser.parse_args()

    rng = np.random.default_rng(args.seed)
    violations = {method: 0 for method in Method}
    runs = {method: 0 for method in Method}
    for _ in range(args.cases):
        problem, target = random_problem_with_dominated_row(rng)
        for method in Method:
            try:
                res = run_method(problem, method)
            except ValidationError:
                continue
            runs[method] += 1
            if res.ranks[target] > res.ranks[-1]:
                violations[method] += 1

    print(f"{args.cases} random cases, seed {args.seed}")
    print(f"{'method':<8} {'violations':>10} {'runs':>8} {'frequency':>10}")
    for method in Method:
        freq = violations[method] / runs[method] if runs[method] else float("nan")
        print(f"{method.value:<8} {violations[method]:>10} {runs[method]:>8} {freq:>10.4f}")


if __name__ == "__main__":
    main()

"""Shared fixture problems.

DEMO is the 5x3 sample every known-score test keys off; the EX_* problems
cover the documented size range (4x3 up to 10x6) and are strictly positive,
so every method accepts them.
"""

from __future__ import annotations

from refrank.core import CriterionSpec, DecisionProblem, Direction


def build_problem(labels, names, directions, weights, rows) -> DecisionProblem:
    criteria = tuple(
        CriterionSpec(name, Direction(d), w)
        for name, d, w in zip(names, directions, weights)
    )
    return DecisionProblem(tuple(labels), criteria, rows)


DEMO_ROWS = [
    [0.185, 2.33, 454.0],
    [0.317, 1.08, 298.0],
    [0.555, 6.45, 174.0],
    [0.731, 8.88, 849.0],
    [0.948, 7.39, 517.0],
]
DEMO_DIRECTIONS = ["max", "min", "max"]
DEMO_WEIGHTS = [0.25, 0.4, 0.35]


def demo_problem() -> DecisionProblem:
    return build_problem(
        [f"A{i}" for i in range(1, 6)],
        [f"C{j}" for j in range(1, 4)],
        DEMO_DIRECTIONS,
        DEMO_WEIGHTS,
        DEMO_ROWS,
    )


EX_SMALL_ROWS = [
    [0.93, 600.0, 8.25],
    [0.51, 700.0, 6.33],
    [0.77, 500.0, 3.16],
    [0.82, 400.0, 2.98],
]
EX_SMALL_DIRECTIONS = ["max", "max", "min"]
EX_SMALL_WEIGHTS = [0.5, 0.3, 0.2]


def ex_small_problem() -> DecisionProblem:
    return build_problem(
        [f"A{i}" for i in range(1, 5)],
        [f"C{j}" for j in range(1, 4)],
        EX_SMALL_DIRECTIONS,
        EX_SMALL_WEIGHTS,
        EX_SMALL_ROWS,
    )


EX_MEDIUM_ROWS = [
    [234.0, 0.122, 90.3, 0.069],
    [179.0, 0.641, 13.2, 0.032],
    [398.0, 0.782, 67.1, 0.191],
    [273.0, 0.979, 49.8, 0.264],
    [278.0, 0.543, 86.8, 0.219],
]
EX_MEDIUM_DIRECTIONS = ["min", "max", "max", "min"]
EX_MEDIUM_WEIGHTS = [0.3, 0.4, 0.2, 0.1]


def ex_medium_problem() -> DecisionProblem:
    return build_problem(
        [f"A{i}" for i in range(1, 6)],
        [f"C{j}" for j in range(1, 5)],
        EX_MEDIUM_DIRECTIONS,
        EX_MEDIUM_WEIGHTS,
        EX_MEDIUM_ROWS,
    )


EX_WIDE_ROWS = [
    [3405.0, 87.4, 0.245, 0.105, 4.2],
    [2159.0, 45.2, 0.521, 0.187, 3.7],
    [4782.0, 72.1, 0.684, 0.274, 5.1],
    [3594.0, 33.9, 0.319, 0.143, 2.9],
    [2911.0, 94.3, 0.753, 0.238, 4.8],
    [4100.0, 59.7, 0.602, 0.194, 3.4],
    [3317.0, 80.6, 0.438, 0.165, 4.7],
]
EX_WIDE_DIRECTIONS = ["max", "max", "max", "min", "min"]
EX_WIDE_WEIGHTS = [0.25, 0.2, 0.3, 0.15, 0.1]


def ex_wide_problem() -> DecisionProblem:
    return build_problem(
        [f"A{i}" for i in range(1, 8)],
        [f"C{j}" for j in range(1, 6)],
        EX_WIDE_DIRECTIONS,
        EX_WIDE_WEIGHTS,
        EX_WIDE_ROWS,
    )


EX_LARGE_ROWS = [
    [575.0, 0.125, 63.8, 0.0215, 12.3, 3.5],
    [432.0, 0.315, 89.2, 0.0382, 15.7, 2.9],
    [689.0, 0.498, 74.5, 0.0497, 18.2, 4.1],
    [540.0, 0.276, 95.3, 0.0328, 14.9, 3.8],
    [478.0, 0.605, 70.4, 0.0409, 16.5, 4.5],
    [615.0, 0.451, 82.6, 0.0462, 17.9, 3.7],
    [503.0, 0.333, 88.9, 0.0375, 13.8, 3.2],
    [389.0, 0.254, 59.1, 0.0293, 10.5, 2.8],
    [455.0, 0.394, 76.3, 0.0319, 14.2, 4.3],
    [612.0, 0.512, 81.9, 0.0415, 15.1, 3.6],
]
EX_LARGE_DIRECTIONS = ["max", "min", "min", "max", "min", "min"]
EX_LARGE_WEIGHTS = [0.2, 0.15, 0.25, 0.15, 0.15, 0.1]


def ex_large_problem() -> DecisionProblem:
    return build_problem(
        [f"A{i}" for i in range(1, 11)],
        [f"C{j}" for j in range(1, 7)],
        EX_LARGE_DIRECTIONS,
        EX_LARGE_WEIGHTS,
        EX_LARGE_ROWS,
    )


ALL_FIXTURES = {
    "demo": (DEMO_ROWS, DEMO_DIRECTIONS, DEMO_WEIGHTS, demo_problem),
    "ex_small": (EX_SMALL_ROWS, EX_SMALL_DIRECTIONS, EX_SMALL_WEIGHTS, ex_small_problem),
    "ex_medium": (EX_MEDIUM_ROWS, EX_MEDIUM_DIRECTIONS, EX_MEDIUM_WEIGHTS, ex_medium_problem),
    "ex_wide": (EX_WIDE_ROWS, EX_WIDE_DIRECTIONS, EX_WIDE_WEIGHTS, ex_wide_problem),
    "ex_large": (EX_LARGE_ROWS, EX_LARGE_DIRECTIONS, EX_LARGE_WEIGHTS, ex_large_problem),
}

"""The four normalization schemes and two weighting rules used by the methods.

Normalization and weighting are separate composable stages: each scheme maps
a raw matrix to a :class:`NormalizedMatrix`, and the weighting rules turn an
unweighted normalized matrix into a weighted one.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .core import (
    CriterionSpec,
    DecisionProblem,
    Direction,
    ValidationError,
    ValidationIssue,
    _readonly,
)


class Scheme(enum.Enum):
    VECTOR = "vector"
    MAXMIN = "maxmin"
    VIKOR_DEVIATION = "vikor_deviation"
    MAX = "max"


#: Schemes whose minimization formula already reverses the optimization
#: direction, so every column of the output is to be maximized.
DIRECTION_REVERSING = frozenset({Scheme.MAXMIN, Scheme.MAX})


@dataclass(frozen=True)
class NormalizedMatrix:
    """An m x n matrix after normalization and, optionally, weighting."""

    values: np.ndarray
    scheme: Scheme
    weighted: bool = False

    def __post_init__(self):
        object.__setattr__(self, "values", _readonly(np.asarray(self.values, dtype=float)))

    @property
    def m(self) -> int:
        return self.values.shape[0]

    @property
    def n(self) -> int:
        return self.values.shape[1]


def vector_normalize(problem: DecisionProblem) -> NormalizedMatrix:
    """Divide each column by its L2 norm.

    Direction metadata is preserved: this scheme does not flip minimization
    criteria, so downstream reference construction must stay direction-aware.

    Raises:
        ValidationError: ZeroColumnNorm for any all-zero column.
    """
    vals = problem.values
    norms = np.sqrt((vals**2).sum(axis=0))
    bad = [
        ValidationIssue(
            "ZeroColumnNorm",
            f"criterion {problem.criteria[j].name!r} has zero L2 norm",
            {"column": int(j)},
        )
        for j in np.flatnonzero(norms == 0.0)
    ]
    if bad:
        raise ValidationError(bad)
    return NormalizedMatrix(vals / norms, Scheme.VECTOR)


def _column_ranges(problem: DecisionProblem) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    vals = problem.values
    lo = vals.min(axis=0)
    hi = vals.max(axis=0)
    span = hi - lo
    bad = [
        ValidationIssue(
            "DegenerateCriterion",
            f"criterion {problem.criteria[j].name!r} is constant (max = min)",
            {"column": int(j)},
        )
        for j in np.flatnonzero(span == 0.0)
    ]
    if bad:
        raise ValidationError(bad)
    return lo, hi, span


def maxmin_normalize(problem: DecisionProblem) -> NormalizedMatrix:
    """Max-Min normalization onto [0, 1], reversing minimization criteria.

    Maximization columns map through (f - min) / (max - min); minimization
    columns through (max - f) / (max - min), so larger is better everywhere
    in the output.

    Raises:
        ValidationError: DegenerateCriterion for any constant column.
    """
    lo, hi, span = _column_ranges(problem)
    vals = problem.values
    out = np.empty_like(vals)
    for j, direction in enumerate(problem.directions):
        if direction is Direction.MAX:
            out[:, j] = (vals[:, j] - lo[j]) / span[j]
        else:
            out[:, j] = (hi[j] - vals[:, j]) / span[j]
    return NormalizedMatrix(out, Scheme.MAXMIN)


def vikor_deviation_normalize(problem: DecisionProblem) -> NormalizedMatrix:
    """Normalized deviation from each criterion's best value, onto [0, 1].

    Uses the direction-aware best (f+) and worst (f-) column values and maps
    f through (f+ - f) / (f+ - f-): 0 means best, 1 means worst, for every
    column. Entrywise this equals 1 minus the Max-Min normalization.

    Raises:
        ValidationError: DegenerateCriterion for any constant column.
    """
    lo, hi, span = _column_ranges(problem)
    vals = problem.values
    out = np.empty_like(vals)
    for j, direction in enumerate(problem.directions):
        best, worst = (hi[j], lo[j]) if direction is Direction.MAX else (lo[j], hi[j])
        out[:, j] = (best - vals[:, j]) / (best - worst)
    return NormalizedMatrix(out, Scheme.VIKOR_DEVIATION)


def max_normalize(problem: DecisionProblem) -> NormalizedMatrix:
    """Max normalization, reversing minimization criteria.

    Maximization columns map through f / max; minimization columns through
    min / f. Requires strictly positive entries (minimization puts f in a
    denominator); output lies in (0, 1].

    Raises:
        ValidationError: NonPositiveValue for any entry <= 0.
    """
    vals = problem.values
    bad = [
        ValidationIssue(
            "NonPositiveValue",
            f"value at row {i}, column {j} is {vals[i, j]!r}; Max normalization "
            "requires strictly positive entries",
            {"row": int(i), "column": int(j)},
        )
        for i, j in zip(*np.nonzero(vals <= 0.0))
    ]
    if bad:
        raise ValidationError(bad)
    out = np.empty_like(vals)
    for j, direction in enumerate(problem.directions):
        col = vals[:, j]
        if direction is Direction.MAX:
            out[:, j] = col / col.max()
        else:
            out[:, j] = col.min() / col
    return NormalizedMatrix(out, Scheme.MAX)


def apply_weights(
    normalized: NormalizedMatrix, criteria: Sequence[CriterionSpec]
) -> NormalizedMatrix:
    """Multiply each normalized column by its criterion weight."""
    if normalized.weighted:
        raise ValueError("matrix is already weighted")
    w = np.array([c.weight for c in criteria])
    return NormalizedMatrix(normalized.values * w, normalized.scheme, weighted=True)


def mabac_weighting(
    normalized: NormalizedMatrix, criteria: Sequence[CriterionSpec]
) -> NormalizedMatrix:
    """Shifted weighting (1 + F) * w applied to a Max-Min normalized matrix.

    The shift keeps every weighted value strictly positive, which the
    geometric-mean border construction downstream depends on.
    """
    if normalized.scheme is not Scheme.MAXMIN:
        raise ValueError("shifted weighting applies to Max-Min normalized matrices only")
    if normalized.weighted:
        raise ValueError("matrix is already weighted")
    w = np.array([c.weight for c in criteria])
    return NormalizedMatrix((1.0 + normalized.values) * w, Scheme.MAXMIN, weighted=True)

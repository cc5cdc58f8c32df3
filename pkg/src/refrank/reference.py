"""Construction of the reference solutions the methods compare against.

Every reference here is derived from the matrix itself: positive/negative
ideals (column extremes), the arithmetic-mean average solution, the
geometric-mean border, and the tiered ideal hierarchy running from the most
positive ideal down to the most negative.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from .core import DecisionProblem, Direction, _readonly
from .normalize import DIRECTION_REVERSING, NormalizedMatrix


class RefKind(enum.Enum):
    POSITIVE_IDEAL = "positive_ideal"
    NEGATIVE_IDEAL = "negative_ideal"
    AVERAGE = "average"
    BORDER = "border"
    TIERED_IDEAL = "tiered_ideal"


class RefDomain(enum.Enum):
    RAW = "raw"
    NORMALIZED = "normalized"
    WEIGHTED_NORMALIZED = "weighted_normalized"


@dataclass(frozen=True)
class ReferenceSolution:
    """A benchmark vector over the n criteria.

    ``tier`` is set only for tiered ideals: tier 1 is the most positive
    ideal and tier m the most negative.
    """

    kind: RefKind
    values: np.ndarray
    domain: RefDomain
    tier: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "values", _readonly(np.asarray(self.values, dtype=float)))


Matrix = Union[DecisionProblem, NormalizedMatrix]


def _matrix_domain(matrix: Matrix) -> tuple[np.ndarray, RefDomain, bool]:
    """Unpack values, domain tag, and whether min-columns were already reversed."""
    if isinstance(matrix, DecisionProblem):
        return matrix.values, RefDomain.RAW, False
    domain = RefDomain.WEIGHTED_NORMALIZED if matrix.weighted else RefDomain.NORMALIZED
    return matrix.values, domain, matrix.scheme in DIRECTION_REVERSING


def ideal_solutions(
    matrix: Matrix, directions: Sequence[Direction]
) -> tuple[ReferenceSolution, ReferenceSolution]:
    """Positive and negative ideal solutions (per-column best and worst).

    The PIS takes each column's maximum for maximization criteria and
    minimum for minimization criteria; the NIS takes the opposite. When the
    matrix was normalized by a direction-reversing scheme (Max-Min or Max),
    every column is treated as maximization regardless of ``directions``.
    """
    vals, domain, reversed_ = _matrix_domain(matrix)
    hi = vals.max(axis=0)
    lo = vals.min(axis=0)
    pis = np.empty(vals.shape[1])
    nis = np.empty(vals.shape[1])
    for j in range(vals.shape[1]):
        maximize = reversed_ or directions[j] is Direction.MAX
        pis[j], nis[j] = (hi[j], lo[j]) if maximize else (lo[j], hi[j])
    return (
        ReferenceSolution(RefKind.POSITIVE_IDEAL, pis, domain),
        ReferenceSolution(RefKind.NEGATIVE_IDEAL, nis, domain),
    )


def average_solution_raw(problem: DecisionProblem) -> ReferenceSolution:
    """Arithmetic column means of the raw matrix."""
    return ReferenceSolution(RefKind.AVERAGE, problem.values.mean(axis=0), RefDomain.RAW)


def average_solution_weighted(matrix: NormalizedMatrix) -> ReferenceSolution:
    """Arithmetic column means of a weighted normalized matrix."""
    if not matrix.weighted:
        raise ValueError("expected a weighted matrix")
    return ReferenceSolution(
        RefKind.AVERAGE, matrix.values.mean(axis=0), RefDomain.WEIGHTED_NORMALIZED
    )


def border_approximation(matrix: NormalizedMatrix) -> ReferenceSolution:
    """Per-column geometric means of a strictly positive weighted matrix.

    Computed as exp(mean(log v)) per column; the direct product underflows
    once m is large and the entries are small.
    """
    if not matrix.weighted:
        raise ValueError("expected a weighted matrix")
    vals = matrix.values
    if np.any(vals <= 0.0):
        raise ValueError("geometric mean requires strictly positive entries")
    border = np.exp(np.log(vals).mean(axis=0))
    return ReferenceSolution(RefKind.BORDER, border, RefDomain.WEIGHTED_NORMALIZED)


def tiered_ideals(
    matrix: NormalizedMatrix, directions: Sequence[Direction]
) -> list[ReferenceSolution]:
    """The full ideal hierarchy: tier k holds each column's k-th best value.

    "k-th best" is the k-th largest for maximization columns and k-th
    smallest for minimization ones, with duplicates counted by multiplicity
    (plain sorted-order indexing). Tier 1 therefore equals the PIS and tier
    m the NIS of the same matrix.
    """
    if not matrix.weighted:
        raise ValueError("expected a weighted matrix")
    vals = matrix.values
    m, n = vals.shape
    by_goodness = np.empty_like(vals)
    for j in range(n):
        descending = directions[j] is Direction.MAX
        by_goodness[:, j] = np.sort(vals[:, j])[::-1] if descending else np.sort(vals[:, j])
    return [
        ReferenceSolution(
            RefKind.TIERED_IDEAL,
            by_goodness[k - 1, :],
            RefDomain.WEIGHTED_NORMALIZED,
            tier=k,
        )
        for k in range(1, m + 1)
    ]

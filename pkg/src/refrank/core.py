"""Core domain types shared by every ranking method.

A decision problem is an alternatives-criteria matrix: m alternatives (rows)
scored against n criteria (columns), each criterion tagged with an
optimization direction and a weight. All types are immutable after
construction and all operations are pure functions.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

import numpy as np

TIE_TOL = 1e-12
"""Two scores are tied iff their absolute difference is <= this."""

WEIGHT_SUM_TOL = 1e-9
"""Criterion weights must sum to 1 within this tolerance."""


class Direction(enum.Enum):
    """Optimization direction of a criterion."""

    MAX = "max"
    MIN = "min"


class Orientation(enum.Enum):
    """Whether larger or smaller scores indicate better alternatives."""

    HIGHER_BETTER = "higher_better"
    LOWER_BETTER = "lower_better"


class Method(enum.Enum):
    """The nine reference-type ranking methods."""

    TOPSIS = "topsis"
    GRA = "gra"
    VIKOR = "vikor"
    EDAS = "edas"
    MABAC = "mabac"
    CODAS = "codas"
    PIV = "piv"
    MARCOS = "marcos"
    PROBID = "probid"


ALL_METHODS: frozenset[Method] = frozenset(Method)

# Raw-matrix preconditions, grouped by the normalization each method applies.
REQUIRES_POSITIVE = frozenset({Method.EDAS, Method.CODAS, Method.MARCOS})
REQUIRES_NON_CONSTANT = frozenset({Method.GRA, Method.VIKOR, Method.MABAC})
REQUIRES_NONZERO_NORM = frozenset({Method.TOPSIS, Method.PIV, Method.PROBID})


class GraVariant(enum.Enum):
    """GRA flavor: plain coefficient average, or distinguishing-coefficient
    form aggregated with criterion weights."""

    UNWEIGHTED = "unweighted"
    WEIGHTED = "weighted"


@dataclass(frozen=True)
class ValidationIssue:
    """One machine-readable validation failure.

    Attributes:
        code: Stable identifier, e.g. "DegenerateCriterion".
        message: Human-readable description.
        location: Where the failure sits, e.g. {"row": 0, "column": 2}.
            Indices are 0-based; labels are used where available.
    """

    code: str
    message: str
    location: Mapping[str, object] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "code": self.code,
            "message": self.message,
            "location": dict(self.location),
        }


class ValidationError(ValueError):
    """Raised when a problem, parameter set, or document fails validation.

    Carries the full list of issues so callers can report every failure
    at once instead of one per round-trip.
    """

    def __init__(self, issues: Iterable[ValidationIssue]):
        self.issues: list[ValidationIssue] = list(issues)
        super().__init__("; ".join(i.message for i in self.issues) or "validation failed")

    @classmethod
    def single(cls, code: str, message: str, **location: object) -> "ValidationError":
        return cls([ValidationIssue(code, message, location)])

    def codes(self) -> set[str]:
        return {i.code for i in self.issues}


class ParseError(ValidationError):
    """Raised when an input document cannot be parsed into a problem."""


@dataclass(frozen=True)
class CriterionSpec:
    """A single evaluation dimension: its name, direction, and weight."""

    name: str
    direction: Direction
    weight: float


def _readonly(arr: np.ndarray) -> np.ndarray:
    arr = np.ascontiguousarray(arr)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class DecisionProblem:
    """The raw alternatives-criteria matrix plus criterion metadata.

    Attributes:
        alternatives: Ordered labels of the m alternatives.
        criteria: Ordered specs of the n criteria.
        values: m x n float matrix of raw criterion values.

    Construction only enforces what is needed to hold the data at all
    (rectangular matrix, dimensions matching the labels). Everything
    else -- finiteness, weight sum, uniqueness, per-method preconditions --
    is checked by :func:`validate_problem` so callers receive the complete
    issue list in one pass.
    """

    alternatives: tuple[str, ...]
    criteria: tuple[CriterionSpec, ...]
    values: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "alternatives", tuple(str(a) for a in self.alternatives))
        object.__setattr__(self, "criteria", tuple(self.criteria))
        try:
            arr = np.array(self.values, dtype=float)
        except (ValueError, TypeError) as exc:
            raise ValidationError.single(
                "NonRectangular", f"matrix rows have unequal lengths: {exc}"
            ) from exc
        if arr.ndim != 2:
            raise ValidationError.single(
                "NonRectangular", f"expected a 2-D matrix, got {arr.ndim}-D"
            )
        if arr.shape[0] != len(self.alternatives):
            raise ValidationError.single(
                "NonRectangular",
                f"{len(self.alternatives)} alternative labels but {arr.shape[0]} rows",
            )
        if arr.shape[1] != len(self.criteria):
            raise ValidationError.single(
                "NonRectangular",
                f"{len(self.criteria)} criteria but {arr.shape[1]} columns",
            )
        object.__setattr__(self, "values", _readonly(arr))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, DecisionProblem)
            and self.alternatives == other.alternatives
            and self.criteria == other.criteria
            and np.array_equal(self.values, other.values)
        )

    __hash__ = None

    @property
    def m(self) -> int:
        return self.values.shape[0]

    @property
    def n(self) -> int:
        return self.values.shape[1]

    @property
    def directions(self) -> tuple[Direction, ...]:
        return tuple(c.direction for c in self.criteria)

    @property
    def weights(self) -> np.ndarray:
        return np.array([c.weight for c in self.criteria])

    def drop_alternatives(self, labels: Iterable[str]) -> "DecisionProblem":
        """Return a copy without the given alternatives (order preserved)."""
        gone = set(labels)
        unknown = gone - set(self.alternatives)
        if unknown:
            raise ValidationError.single(
                "UnknownAlternative",
                f"no such alternative(s): {sorted(unknown)}",
                labels=sorted(unknown),
            )
        keep = [i for i, a in enumerate(self.alternatives) if a not in gone]
        return DecisionProblem(
            alternatives=tuple(self.alternatives[i] for i in keep),
            criteria=self.criteria,
            values=self.values[keep, :],
        )

    def with_weights(self, weights: Sequence[float]) -> "DecisionProblem":
        """Return a copy with the criterion weights replaced."""
        if len(weights) != self.n:
            raise ValidationError.single(
                "CountMismatch",
                f"{len(weights)} weights for {self.n} criteria",
            )
        criteria = tuple(
            CriterionSpec(c.name, c.direction, float(w))
            for c, w in zip(self.criteria, weights)
        )
        return DecisionProblem(self.alternatives, criteria, self.values)


@dataclass(frozen=True)
class MethodParams:
    """Tunable method parameters with their conventional defaults."""

    vikor_gamma: float = 0.5
    gra_variant: GraVariant = GraVariant.UNWEIGHTED
    gra_zeta: float = 0.5
    codas_tau: float = 0.02

    def __post_init__(self):
        issues = []
        if not 0.0 <= self.vikor_gamma <= 1.0:
            issues.append(ValidationIssue(
                "ParamOutOfRange",
                f"gamma must be in [0, 1], got {self.vikor_gamma}",
                {"param": "gamma"},
            ))
        if not 0.0 < self.gra_zeta <= 1.0:
            issues.append(ValidationIssue(
                "ParamOutOfRange",
                f"zeta must be in (0, 1], got {self.gra_zeta}",
                {"param": "zeta"},
            ))
        if not 0.01 <= self.codas_tau <= 0.05:
            issues.append(ValidationIssue(
                "ParamOutOfRange",
                f"tau must be in [0.01, 0.05], got {self.codas_tau}",
                {"param": "tau"},
            ))
        if issues:
            raise ValidationError(issues)


DEFAULT_PARAMS = MethodParams()


@dataclass(frozen=True)
class MethodResult:
    """Per-alternative scores, derived ranks, and method diagnostics.

    ``scores`` follow the method's native orientation; ``ranks`` are a
    competition ranking with 1 = best. ``diagnostics`` holds named
    intermediate vectors/matrices specific to each method.
    """

    method: Method
    scores: np.ndarray
    orientation: Orientation
    ranks: np.ndarray
    diagnostics: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "scores", _readonly(np.asarray(self.scores, dtype=float)))
        object.__setattr__(self, "ranks", _readonly(np.asarray(self.ranks, dtype=int)))

    def best_index(self) -> int:
        """Index of the top-ranked alternative (display ties broken by index)."""
        return int(np.flatnonzero(self.ranks == 1)[0])


def rank_from_scores(scores: Sequence[float], orientation: Orientation) -> np.ndarray:
    """Derive a competition ranking from scores.

    Tied items (difference <= TIE_TOL) share the minimum applicable rank;
    the next distinct value's rank equals the number of strictly better
    alternatives plus one.

    Args:
        scores: Finite per-alternative scores.
        orientation: Whether higher or lower scores are better.

    Returns:
        Integer array of ranks, 1 = best, never exceeding len(scores).
    """
    s = np.asarray(scores, dtype=float)
    if orientation is Orientation.HIGHER_BETTER:
        strictly_better = s[:, None] > s[None, :] + TIE_TOL
    else:
        strictly_better = s[:, None] < s[None, :] - TIE_TOL
    # entry (k, i) is True iff alternative k strictly beats alternative i
    return strictly_better.sum(axis=0).astype(int) + 1


def ranking_order(scores: Sequence[float], orientation: Orientation) -> list[int]:
    """Alternative indices from best to worst, ties broken by original index."""
    s = np.asarray(scores, dtype=float)
    reverse = orientation is Orientation.HIGHER_BETTER
    return sorted(range(len(s)), key=lambda i: (-s[i] if reverse else s[i], i))


def problem_issues(
    problem: DecisionProblem,
    methods: Iterable[Method] = ALL_METHODS,
) -> list[ValidationIssue]:
    """Collect every validation issue for the problem and requested methods.

    Structural invariants are always checked; per-method preconditions are
    checked for the union of the requested methods' requirements.
    """
    methods = set(methods)
    issues: list[ValidationIssue] = []
    vals = problem.values
    m, n = problem.m, problem.n

    if m < 2 or n < 1:
        issues.append(ValidationIssue(
            "MatrixTooSmall",
            f"m >= 2 and n >= 1 required, got m={m}, n={n}",
            {"m": m, "n": n},
        ))
    for i, j in zip(*np.nonzero(~np.isfinite(vals))):
        issues.append(ValidationIssue(
            "NonFinite",
            f"value at row {i}, column {j} is not finite",
            {"row": int(i), "column": int(j)},
        ))
    seen: dict[str, int] = {}
    for i, label in enumerate(problem.alternatives):
        if label in seen:
            issues.append(ValidationIssue(
                "DuplicateLabel",
                f"alternative label {label!r} appears more than once",
                {"kind": "alternative", "label": label},
            ))
        seen.setdefault(label, i)
    seen = {}
    for j, crit in enumerate(problem.criteria):
        if crit.name in seen:
            issues.append(ValidationIssue(
                "DuplicateLabel",
                f"criterion name {crit.name!r} appears more than once",
                {"kind": "criterion", "label": crit.name},
            ))
        seen.setdefault(crit.name, j)

    weights = problem.weights
    for j, w in enumerate(weights):
        if not np.isfinite(w) or w <= 0.0 or w > 1.0:
            issues.append(ValidationIssue(
                "WeightOutOfRange",
                f"weight of criterion {problem.criteria[j].name!r} must be in (0, 1], got {w}",
                {"criterion": j},
            ))
    if n >= 1 and np.all(np.isfinite(weights)):
        total = float(weights.sum())
        if abs(total - 1.0) > WEIGHT_SUM_TOL:
            issues.append(ValidationIssue(
                "WeightSumInvalid",
                f"criterion weights sum to {total!r}, expected 1 within {WEIGHT_SUM_TOL}",
                {"sum": total},
            ))

    finite = bool(np.all(np.isfinite(vals)))
    if m >= 1 and n >= 1 and finite:
        if methods & REQUIRES_POSITIVE:
            needing = sorted(mm.value for mm in methods & REQUIRES_POSITIVE)
            for i, j in zip(*np.nonzero(vals <= 0.0)):
                issues.append(ValidationIssue(
                    "NonPositiveValue",
                    f"value at row {i}, column {j} is {vals[i, j]!r}; "
                    f"{', '.join(needing)} require strictly positive entries",
                    {"row": int(i), "column": int(j)},
                ))
        if methods & REQUIRES_NON_CONSTANT:
            needing = sorted(mm.value for mm in methods & REQUIRES_NON_CONSTANT)
            for j in range(n):
                if vals[:, j].max() == vals[:, j].min():
                    issues.append(ValidationIssue(
                        "DegenerateCriterion",
                        f"criterion {problem.criteria[j].name!r} is constant across "
                        f"alternatives; {', '.join(needing)} divide by its range",
                        {"column": int(j)},
                    ))
        if methods & REQUIRES_NONZERO_NORM:
            needing = sorted(mm.value for mm in methods & REQUIRES_NONZERO_NORM)
            for j in range(n):
                if not np.any(vals[:, j] != 0.0):
                    issues.append(ValidationIssue(
                        "ZeroColumnNorm",
                        f"criterion {problem.criteria[j].name!r} is all zeros; "
                        f"{', '.join(needing)} divide by its L2 norm",
                        {"column": int(j)},
                    ))
    return issues


def validate_problem(
    problem: DecisionProblem,
    methods: Iterable[Method] = ALL_METHODS,
) -> DecisionProblem:
    """Return the problem unchanged if all invariants and per-method
    preconditions hold; raise :class:`ValidationError` with the full issue
    list otherwise.
    """
    issues = problem_issues(problem, methods)
    if issues:
        raise ValidationError(issues)
    return problem

"""Cross-method comparison, rank-reversal probing, and sensitivity sweeps.

The empirical layer on top of the ranking methods: run several methods side
by side, remove alternatives and watch for order flips among the survivors,
or sweep a parameter / the weight vector across a grid.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

import numpy as np

from .core import (
    DEFAULT_PARAMS,
    DecisionProblem,
    Method,
    MethodParams,
    MethodResult,
    ValidationError,
    ValidationIssue,
    _readonly,
)
from .methods import run_method

#: Canonical method order used when callers pass an unordered set.
METHOD_ORDER = tuple(Method)


def _ordered(methods: Iterable[Method]) -> tuple[Method, ...]:
    methods = list(methods)
    if isinstance(methods, list) and len(set(methods)) != len(methods):
        methods = list(dict.fromkeys(methods))
    if not methods:
        raise ValidationError.single("NoMethods", "at least one method is required")
    return tuple(methods)


def spearman_rank_correlation(a: Sequence[int], b: Sequence[int]) -> float:
    """Pearson correlation of two (competition) rank vectors.

    When a rank vector is constant its variance vanishes; the correlation is
    then defined as 1.0 for identical vectors and 0.0 otherwise.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    am = a - a.mean()
    bm = b - b.mean()
    denom = float(np.sqrt((am @ am) * (bm @ bm)))
    if denom == 0.0:
        return 1.0 if np.array_equal(a, b) else 0.0
    return float((am @ bm) / denom)


@dataclass(frozen=True)
class ComparisonReport:
    """Rank table, per-method top choices, and rank correlations.

    ``rank_table`` is m x len(methods), column order matching ``methods``.
    Methods that failed validation appear in ``failures`` and in no other
    field.
    """

    alternatives: tuple[str, ...]
    methods: tuple[Method, ...]
    rank_table: np.ndarray
    score_table: np.ndarray
    top_choices: dict[Method, str]
    correlations: np.ndarray
    failures: dict[Method, tuple[ValidationIssue, ...]] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "rank_table", _readonly(np.asarray(self.rank_table, dtype=int)))
        object.__setattr__(self, "score_table", _readonly(np.asarray(self.score_table, dtype=float)))
        object.__setattr__(self, "correlations", _readonly(np.asarray(self.correlations, dtype=float)))


def compare_methods(
    problem: DecisionProblem,
    methods: Iterable[Method] = METHOD_ORDER,
    params: MethodParams = DEFAULT_PARAMS,
) -> ComparisonReport:
    """Run each method and assemble ranks, top choices, and correlations.

    A method whose validation fails is recorded under ``failures`` and the
    report is built from the remaining ones.
    """
    methods = _ordered(methods)
    results: dict[Method, MethodResult] = {}
    failures: dict[Method, tuple[ValidationIssue, ...]] = {}
    for method in methods:
        try:
            results[method] = run_method(problem, method, params)
        except ValidationError as exc:
            failures[method] = tuple(exc.issues)
    ok = tuple(m for m in methods if m in results)
    m = problem.m
    rank_table = np.zeros((m, len(ok)), dtype=int)
    score_table = np.zeros((m, len(ok)))
    top: dict[Method, str] = {}
    for col, method in enumerate(ok):
        res = results[method]
        rank_table[:, col] = res.ranks
        score_table[:, col] = res.scores
        top[method] = problem.alternatives[res.best_index()]
    corr = np.eye(len(ok))
    for i in range(len(ok)):
        for j in range(i + 1, len(ok)):
            corr[i, j] = corr[j, i] = spearman_rank_correlation(
                rank_table[:, i], rank_table[:, j]
            )
    return ComparisonReport(
        alternatives=problem.alternatives,
        methods=ok,
        rank_table=rank_table,
        score_table=score_table,
        top_choices=top,
        correlations=corr,
        failures=failures,
    )


@dataclass(frozen=True)
class ReversalReport:
    """Order flips among surviving alternatives after a removal.

    ``flips`` maps each method to the surviving pairs whose strict relative
    order reversed versus the original problem; ties turning strict (or vice
    versa) do not count. Methods that newly fail validation on the reduced
    problem land in ``failures``.
    """

    description: str
    removed: tuple[str, ...]
    survivors: tuple[str, ...]
    flips: dict[Method, tuple[tuple[str, str], ...]]
    affected: dict[Method, bool]
    failures: dict[Method, tuple[ValidationIssue, ...]] = field(default_factory=dict)


def _flips_between(
    survivors: Sequence[str],
    original_ranks: Mapping[str, int],
    reduced_ranks: Mapping[str, int],
) -> tuple[tuple[str, str], ...]:
    flips = []
    for i, a in enumerate(survivors):
        for b in survivors[i + 1:]:
            before = original_ranks[a] - original_ranks[b]
            after = reduced_ranks[a] - reduced_ranks[b]
            if before * after < 0:
                flips.append((a, b))
    return tuple(flips)


def rank_reversal_probe(
    problem: DecisionProblem,
    methods: Iterable[Method] = METHOD_ORDER,
    params: MethodParams = DEFAULT_PARAMS,
    drops: Iterable[str] = (),
) -> list[ReversalReport]:
    """Remove alternatives and report order flips among the survivors.

    The labels in ``drops`` are removed cumulatively (in the given order;
    sets are ordered by original alternative index): report k covers the
    problem with the first k labels removed, compared against the original.
    At least two alternatives must survive the full removal.
    """
    methods = _ordered(methods)
    if isinstance(drops, (set, frozenset)):
        index = {a: i for i, a in enumerate(problem.alternatives)}
        drops = sorted(drops, key=lambda a: index.get(a, len(index)))
    else:
        drops = list(drops)
    if not drops:
        raise ValidationError.single("NoDrops", "at least one alternative to drop is required")
    unknown = [d for d in drops if d not in problem.alternatives]
    if unknown:
        raise ValidationError.single(
            "UnknownAlternative", f"no such alternative(s): {unknown}", labels=unknown
        )
    if problem.m - len(drops) < 2:
        raise ValidationError.single(
            "MatrixTooSmall",
            f"removing {len(drops)} of {problem.m} alternatives leaves fewer than 2",
        )

    baseline: dict[Method, dict[str, int]] = {}
    base_failures: dict[Method, tuple[ValidationIssue, ...]] = {}
    for method in methods:
        try:
            res = run_method(problem, method, params)
            baseline[method] = dict(zip(problem.alternatives, (int(r) for r in res.ranks)))
        except ValidationError as exc:
            base_failures[method] = tuple(exc.issues)

    reports: list[ReversalReport] = []
    for k in range(1, len(drops) + 1):
        removed = tuple(drops[:k])
        reduced = problem.drop_alternatives(removed)
        flips: dict[Method, tuple[tuple[str, str], ...]] = {}
        affected: dict[Method, bool] = {}
        failures: dict[Method, tuple[ValidationIssue, ...]] = dict(base_failures)
        for method in methods:
            if method in base_failures:
                continue
            try:
                res = run_method(reduced, method, params)
            except ValidationError as exc:
                failures[method] = tuple(exc.issues)
                continue
            reduced_ranks = dict(zip(reduced.alternatives, (int(r) for r in res.ranks)))
            pairs = _flips_between(reduced.alternatives, baseline[method], reduced_ranks)
            flips[method] = pairs
            affected[method] = bool(pairs)
        reports.append(ReversalReport(
            description="removed " + ", ".join(removed),
            removed=removed,
            survivors=reduced.alternatives,
            flips=flips,
            affected=affected,
            failures=failures,
        ))
    return reports


@dataclass(frozen=True)
class SweepEntry:
    """One grid point: the setting, its ranking, and whether the top moved."""

    setting: dict
    scores: np.ndarray | None
    ranks: np.ndarray | None
    top: str | None
    top_changed: bool
    issues: tuple[ValidationIssue, ...] = ()


@dataclass(frozen=True)
class SweepResult:
    method: Method
    alternatives: tuple[str, ...]
    entries: tuple[SweepEntry, ...]


_PARAM_FIELDS = {"gamma": "vikor_gamma", "zeta": "gra_zeta", "tau": "codas_tau"}


def sensitivity_sweep(
    problem: DecisionProblem,
    method: Method,
    params: MethodParams = DEFAULT_PARAMS,
    *,
    param: str | None = None,
    values: Sequence[float] | None = None,
    weight_samples: Sequence[Sequence[float]] | None = None,
) -> SweepResult:
    """Evaluate one method across a parameter grid or weight-vector samples.

    Exactly one of (``param`` + ``values``) or ``weight_samples`` must be
    given. Settings that fail validation are kept in the table with their
    issues; ``top_changed`` flags every grid point whose top choice differs
    from the previous successful one.
    """
    if (param is None) == (weight_samples is None):
        raise ValidationError.single(
            "SweepGridInvalid", "provide either a parameter grid or weight samples"
        )
    settings: list[dict] = []
    if param is not None:
        if param not in _PARAM_FIELDS:
            raise ValidationError.single(
                "SweepGridInvalid",
                f"unknown parameter {param!r}; expected one of {sorted(_PARAM_FIELDS)}",
            )
        if not values:
            raise ValidationError.single("SweepGridInvalid", "empty parameter grid")
        settings = [{param: float(v)} for v in values]
    else:
        if not weight_samples:
            raise ValidationError.single("SweepGridInvalid", "empty weight sample list")
        settings = [{"weights": [float(w) for w in sample]} for sample in weight_samples]

    entries: list[SweepEntry] = []
    previous_top: str | None = None
    for setting in settings:
        try:
            if param is not None:
                run_params = dataclasses.replace(
                    params, **{_PARAM_FIELDS[param]: setting[param]}
                )
                run_problem = problem
            else:
                run_params = params
                run_problem = problem.with_weights(setting["weights"])
            res = run_method(run_problem, method, run_params)
        except ValidationError as exc:
            entries.append(SweepEntry(
                setting=setting, scores=None, ranks=None, top=None,
                top_changed=False, issues=tuple(exc.issues),
            ))
            continue
        top = problem.alternatives[res.best_index()]
        entries.append(SweepEntry(
            setting=setting,
            scores=res.scores,
            ranks=res.ranks,
            top=top,
            top_changed=previous_top is not None and top != previous_top,
        ))
        previous_top = top
    return SweepResult(method=method, alternatives=problem.alternatives, entries=tuple(entries))

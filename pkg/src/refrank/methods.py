"""The nine reference-type ranking methods.

Each method is a pure pipeline over the normalization and reference
primitives, returning a :class:`MethodResult` whose diagnostics expose the
intermediate vectors a decision-maker would want to audit. Every method
re-runs its own normalization; the schemes differ and the matrices are
small, so correctness wins over caching.
"""

from __future__ import annotations

from typing import Callable

import numpy as np

from .core import (
    DEFAULT_PARAMS,
    DecisionProblem,
    Method,
    MethodParams,
    MethodResult,
    Orientation,
    GraVariant,
    ValidationError,
    rank_from_scores,
    ranking_order,
    validate_problem,
)
from .normalize import (
    apply_weights,
    mabac_weighting,
    max_normalize,
    maxmin_normalize,
    vector_normalize,
    vikor_deviation_normalize,
)
from .reference import (
    average_solution_raw,
    average_solution_weighted,
    border_approximation,
    ideal_solutions,
    tiered_ideals,
)


def _result(method, scores, orientation, diagnostics) -> MethodResult:
    return MethodResult(
        method=method,
        scores=scores,
        orientation=orientation,
        ranks=rank_from_scores(scores, orientation),
        diagnostics=diagnostics,
    )


def topsis(problem: DecisionProblem, params: MethodParams = DEFAULT_PARAMS) -> MethodResult:
    """Rank by relative closeness to the positive ideal.

    Vector-normalize, weight, then score each alternative by
    d_nis / (d_nis + d_pis) where d are Euclidean distances to the
    negative/positive ideal of the weighted matrix. Higher is better.
    """
    validate_problem(problem, {Method.TOPSIS})
    weighted = apply_weights(vector_normalize(problem), problem.criteria)
    pis, nis = ideal_solutions(weighted, problem.directions)
    d_pos = np.sqrt(((weighted.values - pis.values) ** 2).sum(axis=1))
    d_neg = np.sqrt(((weighted.values - nis.values) ** 2).sum(axis=1))
    denom = d_pos + d_neg
    if np.any(denom == 0.0):
        raise ValidationError.single(
            "DegenerateProblem",
            "positive and negative ideals coincide; closeness is undefined",
        )
    scores = d_neg / denom
    return _result(Method.TOPSIS, scores, Orientation.HIGHER_BETTER, {
        "dist_to_pis": d_pos,
        "dist_to_nis": d_neg,
        "pis": pis.values,
        "nis": nis.values,
    })


def gra(problem: DecisionProblem, params: MethodParams = DEFAULT_PARAMS) -> MethodResult:
    """Rank by gray relational similarity to the per-column best.

    After Max-Min normalization the reference point is the all-ones vector.
    The unweighted variant averages the relational coefficients per row;
    the weighted variant uses the distinguishing coefficient zeta and a
    weighted sum. Higher is better.
    """
    validate_problem(problem, {Method.GRA})
    F = maxmin_normalize(problem).values
    reference = F.max(axis=0)
    delta = np.abs(reference - F)
    d_min = delta.min()
    d_max = delta.max()
    if params.gra_variant is GraVariant.UNWEIGHTED:
        grc = (d_min + d_max) / (delta + d_max)
        scores = grc.mean(axis=1)
    else:
        zeta = params.gra_zeta
        grc = (d_min + zeta * d_max) / (delta + zeta * d_max)
        scores = (grc * problem.weights).sum(axis=1)
    return _result(Method.GRA, scores, Orientation.HIGHER_BETTER, {
        "difference": delta,
        "grc": grc,
        "delta_min": float(d_min),
        "delta_max": float(d_max),
        "variant": params.gra_variant.value,
    })


def vikor(problem: DecisionProblem, params: MethodParams = DEFAULT_PARAMS) -> MethodResult:
    """Rank by the compromise index blending group utility and regret.

    S is the weighted sum of normalized deviations from the per-criterion
    best, R the worst single weighted deviation, and Q their gamma-blend
    after normalizing each across alternatives. Lower Q is better. If S (or
    R) does not discriminate at all, its Q term is defined as 0.

    Diagnostics carry the compromise set: starting from the Q-best
    alternative, the acceptable-advantage and acceptable-stability
    conditions decide whether it stands alone or the set is extended down
    the Q ranking.
    """
    validate_problem(problem, {Method.VIKOR})
    weighted_dev = vikor_deviation_normalize(problem).values * problem.weights
    s = weighted_dev.sum(axis=1)
    r = weighted_dev.max(axis=1)

    def normalized_term(x: np.ndarray) -> np.ndarray:
        lo, hi = x.min(), x.max()
        if hi == lo:
            return np.zeros_like(x)
        return (x - lo) / (hi - lo)

    gamma = params.vikor_gamma
    q = gamma * normalized_term(s) + (1.0 - gamma) * normalized_term(r)

    order = ranking_order(q, Orientation.LOWER_BETTER)
    m = problem.m
    first = order[0]
    advantage = q[order[1]] - q[first] >= 1.0 / (m - 1)
    stability = (
        rank_from_scores(s, Orientation.LOWER_BETTER)[first] == 1
        or rank_from_scores(r, Orientation.LOWER_BETTER)[first] == 1
    )
    if advantage and stability:
        compromise = [first]
    elif advantage:
        compromise = [first, order[1]]
    else:
        compromise = [first, order[1]]
        for d in range(3, m + 1):
            if q[order[d - 1]] - q[first] < 1.0 / (d - 1):
                compromise.append(order[d - 1])
            else:
                break
    return _result(Method.VIKOR, q, Orientation.LOWER_BETTER, {
        "s": s,
        "r": r,
        "compromise_set": [problem.alternatives[i] for i in compromise],
        "acceptable_advantage": bool(advantage),
        "acceptable_stability": bool(stability),
    })


def edas(problem: DecisionProblem, params: MethodParams = DEFAULT_PARAMS) -> MethodResult:
    """Rank by positive and negative distances from the average solution.

    PDA/NDA measure (direction-aware) how far above or below the column
    average each value sits, relative to that average. Their weighted sums
    are normalized against the best performer and averaged. Higher is
    better.
    """
    validate_problem(problem, {Method.EDAS})
    average = average_solution_raw(problem).values
    vals = problem.values
    above = np.maximum(0.0, vals - average) / average
    below = np.maximum(0.0, average - vals) / average
    maximize = np.array([d.value == "max" for d in problem.directions])
    pda = np.where(maximize, above, below)
    nda = np.where(maximize, below, above)
    w = problem.weights
    sp = (pda * w).sum(axis=1)
    sn = (nda * w).sum(axis=1)
    if sp.max() == 0.0 or sn.max() == 0.0:
        raise ValidationError.single(
            "DegenerateProblem",
            "no alternative deviates from the average solution; scores are undefined",
        )
    nsp = sp / sp.max()
    nsn = 1.0 - sn / sn.max()
    scores = 0.5 * (nsp + nsn)
    return _result(Method.EDAS, scores, Orientation.HIGHER_BETTER, {
        "pda": pda,
        "nda": nda,
        "sp": sp,
        "sn": sn,
        "nsp": nsp,
        "nsn": nsn,
        "average": average,
    })


def mabac(problem: DecisionProblem, params: MethodParams = DEFAULT_PARAMS) -> MethodResult:
    """Rank by total distance from the geometric-mean border.

    Max-Min normalize, apply the shifted weighting (1 + F) * w, take the
    per-column geometric mean as the border, and sum each row's signed
    deviations from it. Scores may be negative; higher is better.
    """
    validate_problem(problem, {Method.MABAC})
    weighted = mabac_weighting(maxmin_normalize(problem), problem.criteria)
    border = border_approximation(weighted).values
    scores = (weighted.values - border).sum(axis=1)
    return _result(Method.MABAC, scores, Orientation.HIGHER_BETTER, {
        "border": border,
        "weighted": weighted.values,
    })


def codas(problem: DecisionProblem, params: MethodParams = DEFAULT_PARAMS) -> MethodResult:
    """Rank by combined Euclidean and Taxicab distance from the negative ideal.

    After Max normalization and weighting the NIS is the per-column minimum.
    Pairwise assessments use the Euclidean gap, adding the Taxicab gap only
    when the Euclidean gap reaches the threshold tau. Row sums of the
    assessment matrix are the scores; higher is better.
    """
    validate_problem(problem, {Method.CODAS})
    weighted = apply_weights(max_normalize(problem), problem.criteria)
    _, nis = ideal_solutions(weighted, problem.directions)
    diff = weighted.values - nis.values
    euclid = np.sqrt((diff**2).sum(axis=1))
    taxicab = np.abs(diff).sum(axis=1)
    e_gap = euclid[:, None] - euclid[None, :]
    t_gap = taxicab[:, None] - taxicab[None, :]
    psi = (np.abs(e_gap) >= params.codas_tau).astype(float)
    assessment = e_gap + psi * t_gap
    scores = assessment.sum(axis=1)
    return _result(Method.CODAS, scores, Orientation.HIGHER_BETTER, {
        "euclidean": euclid,
        "taxicab": taxicab,
        "relative_assessment": assessment,
        "nis": nis.values,
    })


def piv(problem: DecisionProblem, params: MethodParams = DEFAULT_PARAMS) -> MethodResult:
    """Rank by summed absolute proximity to the positive ideal.

    Vector-normalize, weight, and sum each row's absolute deviations from
    the weighted positive ideal. Lower is better.
    """
    validate_problem(problem, {Method.PIV})
    weighted = apply_weights(vector_normalize(problem), problem.criteria)
    pis, _ = ideal_solutions(weighted, problem.directions)
    scores = np.abs(weighted.values - pis.values).sum(axis=1)
    return _result(Method.PIV, scores, Orientation.LOWER_BETTER, {
        "pis": pis.values,
    })


def _fresh_label(base: str, taken: tuple[str, ...]) -> str:
    label = base
    while label in taken:
        label += "'"
    return label


def marcos(problem: DecisionProblem, params: MethodParams = DEFAULT_PARAMS) -> MethodResult:
    """Rank by aggregated utility against raw-domain ideals.

    The raw PIS and NIS are appended to the matrix, the extended matrix is
    Max-normalized and weighted, and each alternative's row sum is related
    to the ideals' row sums through the utility degrees K+ and K- and their
    aggregation. Higher is better.
    """
    validate_problem(problem, {Method.MARCOS})
    pis, nis = ideal_solutions(problem, problem.directions)
    labels = problem.alternatives + (
        _fresh_label("PIS", problem.alternatives),
        _fresh_label("NIS", problem.alternatives),
    )
    extended = DecisionProblem(
        alternatives=labels,
        criteria=problem.criteria,
        values=np.vstack([problem.values, pis.values, nis.values]),
    )
    weighted = apply_weights(max_normalize(extended), problem.criteria)
    sums = weighted.values.sum(axis=1)
    m = problem.m
    s, s_pis, s_nis = sums[:m], float(sums[m]), float(sums[m + 1])
    k_plus = s / s_pis
    k_minus = s / s_nis
    # K-/(K+ + K-) reduces to a constant: the row sum cancels. Computing it
    # once keeps the utility functions bitwise identical across alternatives
    # and exactly complementary.
    f_plus = (1.0 / s_nis) / (1.0 / s_pis + 1.0 / s_nis)
    f_minus = 1.0 - f_plus
    scores = (k_plus + k_minus) / (
        1.0 + (1.0 - f_plus) / f_plus + (1.0 - f_minus) / f_minus
    )
    return _result(Method.MARCOS, scores, Orientation.HIGHER_BETTER, {
        "s": s,
        "s_pis": s_pis,
        "s_nis": s_nis,
        "k_plus": k_plus,
        "k_minus": k_minus,
        "f_k_plus": np.full(m, f_plus),
        "f_k_minus": np.full(m, f_minus),
    })


def probid(problem: DecisionProblem, params: MethodParams = DEFAULT_PARAMS) -> MethodResult:
    """Rank against the full hierarchy of tiered ideals plus the average.

    Euclidean distances to every tier are combined into overall positive-
    and negative-ideal distances with harmonically decaying weights (the
    middle tier contributes to both sums when m is odd). The score adds the
    distance from the average solution to 1 / (1 + ratio^2). Higher is
    better.
    """
    validate_problem(problem, {Method.PROBID})
    weighted = apply_weights(vector_normalize(problem), problem.criteria)
    tiers = tiered_ideals(weighted, problem.directions)
    avg = average_solution_weighted(weighted).values
    v = weighted.values
    m = problem.m
    dist = np.empty((m, m))
    for k, tier in enumerate(tiers, start=1):
        dist[:, k - 1] = np.sqrt(((v - tier.values) ** 2).sum(axis=1))
    d_avg = np.sqrt(((v - avg) ** 2).sum(axis=1))

    if m % 2 == 1:
        pos_tiers = range(1, (m + 1) // 2 + 1)
        neg_tiers = range((m + 1) // 2, m + 1)
    else:
        pos_tiers = range(1, m // 2 + 1)
        neg_tiers = range(m // 2 + 1, m + 1)
    pos = sum(dist[:, k - 1] / k for k in pos_tiers)
    neg = sum(dist[:, k - 1] / (m - k + 1) for k in neg_tiers)
    if np.any(neg == 0.0):
        raise ValidationError.single(
            "DegenerateProblem",
            "an alternative coincides with every negative-side tier; "
            "the ideal-distance ratio is undefined",
        )
    ratio = pos / neg
    scores = 1.0 / (1.0 + ratio**2) + d_avg
    return _result(Method.PROBID, scores, Orientation.HIGHER_BETTER, {
        "ideal_distances": dist,
        "avg_distance": d_avg,
        "pos_ideal_distance": pos,
        "neg_ideal_distance": neg,
        "ratio": ratio,
    })


REGISTRY: dict[Method, Callable[[DecisionProblem, MethodParams], MethodResult]] = {
    Method.TOPSIS: topsis,
    Method.GRA: gra,
    Method.VIKOR: vikor,
    Method.EDAS: edas,
    Method.MABAC: mabac,
    Method.CODAS: codas,
    Method.PIV: piv,
    Method.MARCOS: marcos,
    Method.PROBID: probid,
}


def run_method(
    problem: DecisionProblem,
    method: Method,
    params: MethodParams = DEFAULT_PARAMS,
) -> MethodResult:
    """Run a single method by id."""
    return REGISTRY[method](problem, params)

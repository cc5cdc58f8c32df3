import numpy as np
import pytest

from refrank.core import (
    CriterionSpec,
    DecisionProblem,
    Direction,
    Method,
    MethodParams,
    Orientation,
    ValidationError,
    problem_issues,
    rank_from_scores,
    validate_problem,
)

from fixtures import build_problem, demo_problem


def test_demo_problem_valid_for_all_methods():
    problem = demo_problem()
    assert validate_problem(problem) is problem


def test_values_matrix_is_readonly():
    problem = demo_problem()
    with pytest.raises(ValueError):
        problem.values[0, 0] = 99.0


def test_ragged_rows_rejected_at_construction():
    with pytest.raises(ValidationError) as err:
        build_problem(["A1", "A2"], ["C1", "C2"], ["max", "max"], [0.5, 0.5],
                      [[1.0, 2.0], [3.0]])
    assert err.value.codes() == {"NonRectangular"}


def test_label_count_mismatch_rejected():
    with pytest.raises(ValidationError) as err:
        build_problem(["A1", "A2", "A3"], ["C1"], ["max"], [1.0], [[1.0], [2.0]])
    assert err.value.codes() == {"NonRectangular"}


def test_constant_column_degenerate_for_maxmin_methods():
    problem = build_problem(["A1", "A2"], ["C1"], ["max"], [1.0], [[5.0], [5.0]])
    with pytest.raises(ValidationError) as err:
        validate_problem(problem, {Method.GRA})
    issues = err.value.issues
    assert [i.code for i in issues] == ["DegenerateCriterion"]
    assert issues[0].location["column"] == 0
    # the same matrix is fine for methods that never divide by the range
    validate_problem(problem, {Method.TOPSIS, Method.CODAS, Method.EDAS})


def test_nonpositive_entry_rejected_for_max_normalization_methods():
    rows = [list(r) for r in demo_problem().values]
    rows[0][0] = -0.185
    problem = build_problem([f"A{i}" for i in range(1, 6)], ["C1", "C2", "C3"],
                            ["max", "min", "max"], [0.25, 0.4, 0.35], rows)
    with pytest.raises(ValidationError) as err:
        validate_problem(problem, {Method.CODAS})
    issue = err.value.issues[0]
    assert issue.code == "NonPositiveValue"
    assert (issue.location["row"], issue.location["column"]) == (0, 0)
    # vector normalization tolerates negatives
    validate_problem(problem, {Method.TOPSIS, Method.PIV, Method.PROBID})


def test_zero_norm_column_rejected_for_vector_methods():
    problem = build_problem(["A1", "A2"], ["C1", "C2"], ["max", "max"], [0.5, 0.5],
                            [[0.0, 1.0], [0.0, 2.0]])
    with pytest.raises(ValidationError) as err:
        validate_problem(problem, {Method.PIV})
    assert err.value.codes() == {"ZeroColumnNorm"}


def test_weight_sum_and_duplicate_issues_collected_together():
    problem = build_problem(["A1", "A1"], ["C1", "C2"], ["max", "max"], [0.5, 0.6],
                            [[1.0, 2.0], [3.0, 4.0]])
    codes = {i.code for i in problem_issues(problem)}
    assert codes == {"DuplicateLabel", "WeightSumInvalid"}


def test_weight_must_be_strictly_positive():
    problem = build_problem(["A1", "A2"], ["C1", "C2"], ["max", "max"], [1.5, -0.5],
                            [[1.0, 2.0], [3.0, 4.0]])
    codes = {i.code for i in problem_issues(problem)}
    assert "WeightOutOfRange" in codes


def test_nonfinite_entries_located():
    problem = build_problem(["A1", "A2"], ["C1"], ["max"], [1.0],
                            [[float("nan")], [2.0]])
    issues = problem_issues(problem, {Method.TOPSIS})
    assert issues[0].code == "NonFinite"
    assert issues[0].location == {"row": 0, "column": 0}


def test_single_alternative_rejected():
    problem = build_problem(["A1"], ["C1"], [Direction.MAX], [1.0], [[1.0]])
    assert {i.code for i in problem_issues(problem)} >= {"MatrixTooSmall"}


def test_drop_alternatives_preserves_order():
    reduced = demo_problem().drop_alternatives({"A3"})
    assert reduced.alternatives == ("A1", "A2", "A4", "A5")
    assert reduced.values.shape == (4, 3)
    with pytest.raises(ValidationError):
        demo_problem().drop_alternatives({"A9"})


class TestRankFromScores:
    def test_higher_better(self):
        ranks = rank_from_scores(
            [0.5305, 0.5362, 0.2677, 0.4937, 0.4578], Orientation.HIGHER_BETTER
        )
        assert list(ranks) == [2, 1, 5, 3, 4]

    def test_lower_better(self):
        ranks = rank_from_scores(
            [0.0845, 0.1567, 0.8333, 0.5000, 0.2888], Orientation.LOWER_BETTER
        )
        assert list(ranks) == [1, 2, 5, 4, 3]

    def test_competition_tie_shares_minimum_rank(self):
        assert list(rank_from_scores([0.7, 0.7, 0.2], Orientation.HIGHER_BETTER)) == [1, 1, 3]

    def test_tie_tolerance_boundary(self):
        scores = [1.0, 1.0 + 1e-12, 1.0 + 1e-10]
        ranks = rank_from_scores(scores, Orientation.HIGHER_BETTER)
        assert list(ranks) == [2, 2, 1]


class TestMethodParams:
    def test_defaults(self):
        params = MethodParams()
        assert params.vikor_gamma == 0.5
        assert params.gra_zeta == 0.5
        assert params.codas_tau == 0.02

    @pytest.mark.parametrize("kwargs", [
        {"vikor_gamma": -0.1},
        {"vikor_gamma": 1.1},
        {"gra_zeta": 0.0},
        {"gra_zeta": 1.2},
        {"codas_tau": 0.005},
        {"codas_tau": 0.06},
    ])
    def test_out_of_range_rejected(self, kwargs):
        with pytest.raises(ValidationError) as err:
            MethodParams(**kwargs)
        assert err.value.codes() == {"ParamOutOfRange"}

    def test_boundaries_accepted(self):
        MethodParams(vikor_gamma=0.0)
        MethodParams(vikor_gamma=1.0)
        MethodParams(gra_zeta=1.0)
        MethodParams(codas_tau=0.01)
        MethodParams(codas_tau=0.05)


def test_criterion_spec_fields():
    spec = CriterionSpec("cost", Direction.MIN, 0.4)
    assert spec.direction is Direction.MIN
    assert spec.weight == 0.4

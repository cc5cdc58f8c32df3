import numpy as np
import pytest

from refrank.analysis import (
    compare_methods,
    rank_reversal_probe,
    sensitivity_sweep,
    spearman_rank_correlation,
)
from refrank.core import Method, MethodParams, Orientation, ValidationError, rank_from_scores
from refrank.methods import run_method

import known_values as kv
from fixtures import build_problem, demo_problem
from oracle import oracle_gra, oracle_scores


class TestCompareMethods:
    def test_demo_top_choices(self, demo):
        report = compare_methods(demo)
        top = {m.value: label for m, label in report.top_choices.items()}
        assert top == kv.TOP_CHOICES

    def test_rank_columns_are_competition_rankings(self, demo):
        report = compare_methods(demo)
        for col, method in enumerate(report.methods):
            column = report.rank_table[:, col]
            assert column.min() == 1
            assert column.max() <= demo.m
            assert list(column) == kv.RANKS[method.value]

    def test_correlation_matrix_symmetric_unit_diagonal(self, demo):
        report = compare_methods(demo)
        corr = report.correlations
        assert np.allclose(corr, corr.T)
        assert np.all(np.diag(corr) == 1.0)
        assert np.all(corr >= -1.0) and np.all(corr <= 1.0)

    def test_mabac_and_piv_agree_exactly(self, demo):
        report = compare_methods(demo, [Method.MABAC, Method.PIV])
        assert list(report.rank_table[:, 0]) == list(report.rank_table[:, 1])
        assert report.correlations[0, 1] == 1.0

    def test_single_method_identity_correlation(self, demo):
        report = compare_methods(demo, [Method.TOPSIS])
        assert report.correlations.shape == (1, 1)
        assert report.correlations[0, 0] == 1.0

    def test_method_order_permutes_columns_only(self, demo):
        forward = compare_methods(demo, [Method.TOPSIS, Method.VIKOR, Method.EDAS])
        backward = compare_methods(demo, [Method.EDAS, Method.VIKOR, Method.TOPSIS])
        assert forward.methods == tuple(reversed(backward.methods))
        assert np.array_equal(forward.rank_table, backward.rank_table[:, ::-1])
        assert np.array_equal(forward.correlations, backward.correlations[::-1, ::-1])

    def test_failed_method_reported_and_rest_continue(self):
        problem = build_problem(
            ["A1", "A2"], ["C1", "C2"], ["max", "max"], [0.5, 0.5],
            [[1.0, 3.0], [2.0, 3.0]],  # constant second column
        )
        report = compare_methods(problem, [Method.TOPSIS, Method.MABAC])
        assert report.methods == (Method.TOPSIS,)
        assert Method.MABAC in report.failures
        assert report.failures[Method.MABAC][0].code == "DegenerateCriterion"


class TestSpearman:
    def test_identical(self):
        assert spearman_rank_correlation([1, 2, 3], [1, 2, 3]) == 1.0

    def test_reversed(self):
        assert spearman_rank_correlation([1, 2, 3], [3, 2, 1]) == pytest.approx(-1.0)

    def test_constant_vectors(self):
        assert spearman_rank_correlation([1, 1], [1, 1]) == 1.0
        assert spearman_rank_correlation([1, 1], [1, 2]) == 0.0


class TestRankReversalProbe:
    def test_drop_one_matches_oracle_recomputation(self, demo):
        reports = rank_reversal_probe(demo, [Method.TOPSIS], drops=["A3"])
        assert len(reports) == 1
        report = reports[0]
        assert report.survivors == ("A1", "A2", "A4", "A5")
        reduced_rows = [r for r, label in zip(demo.values.tolist(), demo.alternatives)
                        if label != "A3"]
        expected = oracle_scores("topsis", reduced_rows, ["max", "min", "max"],
                                 [0.25, 0.4, 0.35])
        res = run_method(demo.drop_alternatives({"A3"}), Method.TOPSIS)
        assert res.scores == pytest.approx(expected, abs=1e-9)
        expected_ranks = rank_from_scores(expected, Orientation.HIGHER_BETTER)
        original = run_method(demo, Method.TOPSIS)
        orig_ranks = {a: r for a, r in zip(demo.alternatives, original.ranks)}
        flips = {
            (a, b)
            for i, a in enumerate(report.survivors)
            for b in report.survivors[i + 1:]
            if (orig_ranks[a] - orig_ranks[b])
            * (expected_ranks[report.survivors.index(a)]
               - expected_ranks[report.survivors.index(b)]) < 0
        }
        assert set(report.flips[Method.TOPSIS]) == flips

    def test_marcos_unchanged_when_drop_holds_no_extreme(self, demo):
        # A3 = (0.555, 6.45, 174 -> wait, 174 IS the C3 minimum) -- use a row
        # that is interior in every column: none of the demo rows qualifies,
        # so build one.
        rows = [
            [1.0, 10.0, 100.0],
            [5.0, 2.0, 900.0],
            [2.0, 5.0, 500.0],   # interior everywhere
            [4.0, 8.0, 200.0],
        ]
        problem = build_problem(["A1", "A2", "A3", "A4"], ["C1", "C2", "C3"],
                                ["max", "min", "max"], [0.25, 0.4, 0.35], rows)
        before = run_method(problem, Method.MARCOS)
        after = run_method(problem.drop_alternatives({"A3"}), Method.MARCOS)
        keep = [0, 1, 3]
        assert after.scores == pytest.approx(before.scores[keep], abs=1e-12)
        reports = rank_reversal_probe(problem, [Method.MARCOS], drops=["A3"])
        assert reports[0].flips[Method.MARCOS] == ()
        assert reports[0].affected[Method.MARCOS] is False

    def test_cumulative_drops_down_to_two_alternatives(self, demo):
        reports = rank_reversal_probe(demo, list(Method), drops=["A3", "A4", "A5"])
        assert len(reports) == 3
        assert reports[-1].survivors == ("A1", "A2")
        for method in Method:
            assert method in reports[-1].flips or method in reports[-1].failures

    def test_set_drops_ordered_by_original_index(self, demo):
        reports = rank_reversal_probe(demo, [Method.TOPSIS], drops={"A4", "A2"})
        assert reports[0].removed == ("A2",)
        assert reports[1].removed == ("A2", "A4")

    def test_too_many_drops_rejected(self, demo):
        with pytest.raises(ValidationError) as err:
            rank_reversal_probe(demo, [Method.TOPSIS], drops=["A1", "A2", "A3", "A4"])
        assert err.value.codes() == {"MatrixTooSmall"}

    def test_unknown_drop_rejected(self, demo):
        with pytest.raises(ValidationError) as err:
            rank_reversal_probe(demo, [Method.TOPSIS], drops=["A9"])
        assert err.value.codes() == {"UnknownAlternative"}

    def test_newly_degenerate_reduced_problem_reported_not_fatal(self):
        rows = [
            [1.0, 5.0],
            [2.0, 3.0],
            [3.0, 3.0],
            [4.0, 3.0],
        ]
        problem = build_problem(["A1", "A2", "A3", "A4"], ["C1", "C2"],
                                ["max", "min"], [0.5, 0.5], rows)
        reports = rank_reversal_probe(problem, [Method.GRA, Method.TOPSIS], drops=["A1"])
        report = reports[0]
        assert report.failures[Method.GRA][0].code == "DegenerateCriterion"
        assert Method.TOPSIS in report.flips  # unaffected method still probed


class TestSensitivitySweep:
    def test_gamma_grid_contains_default_result(self, demo):
        result = sensitivity_sweep(demo, Method.VIKOR,
                                   param="gamma", values=[0.0, 0.25, 0.5, 0.75, 1.0])
        default = run_method(demo, Method.VIKOR)
        middle = result.entries[2]
        assert middle.scores == pytest.approx(default.scores, abs=0)
        assert list(middle.ranks) == list(default.ranks)
        assert middle.top == "A1"

    def test_gamma_grid_flags_top_changes(self, demo):
        result = sensitivity_sweep(demo, Method.VIKOR,
                                   param="gamma", values=[0.0, 0.25, 0.5, 0.75, 1.0])
        tops = [e.top for e in result.entries]
        flags = [e.top_changed for e in result.entries]
        assert tops == ["A1", "A1", "A1", "A2", "A4"]
        assert flags == [False, False, False, True, True]

    def test_zeta_grid_matches_oracle(self, demo):
        from refrank.core import GraVariant
        params = MethodParams(gra_variant=GraVariant.WEIGHTED)
        result = sensitivity_sweep(demo, Method.GRA, params,
                                   param="zeta", values=[0.3, 0.5, 0.7])
        rows, directions, weights = (
            demo.values.tolist(), ["max", "min", "max"], [0.25, 0.4, 0.35],
        )
        for entry, zeta in zip(result.entries, [0.3, 0.5, 0.7]):
            expected = oracle_gra(rows, directions, weights, zeta)
            assert entry.scores == pytest.approx(expected, abs=1e-9)

    def test_identical_weight_samples_identical_ranks(self, demo):
        samples = [[0.25, 0.4, 0.35]] * 3
        result = sensitivity_sweep(demo, Method.TOPSIS, weight_samples=samples)
        first = list(result.entries[0].ranks)
        assert all(list(e.ranks) == first for e in result.entries)
        assert not any(e.top_changed for e in result.entries)

    def test_out_of_range_value_recorded_per_setting(self, demo):
        result = sensitivity_sweep(demo, Method.VIKOR, param="gamma",
                                   values=[0.5, 1.5])
        assert result.entries[0].issues == ()
        assert result.entries[1].issues[0].code == "ParamOutOfRange"
        assert result.entries[1].scores is None

    def test_invalid_weight_sample_recorded_per_setting(self, demo):
        result = sensitivity_sweep(demo, Method.TOPSIS,
                                   weight_samples=[[0.25, 0.4, 0.35], [0.5, 0.5, 0.5]])
        assert result.entries[0].issues == ()
        assert "WeightSumInvalid" in {i.code for i in result.entries[1].issues}

    def test_requires_exactly_one_grid(self, demo):
        with pytest.raises(ValidationError):
            sensitivity_sweep(demo, Method.VIKOR)
        with pytest.raises(ValidationError):
            sensitivity_sweep(demo, Method.VIKOR, param="gamma", values=[0.5],
                              weight_samples=[[0.25, 0.4, 0.35]])

"""Command-line interface: rank, compare, reversal, sweep, and serve.

Exit codes: 0 on success, 1 on validation/parse failures (details on
stderr), 2 on usage errors. Set MCDM_LOG=DEBUG|INFO|... for diagnostics.
"""

from __future__ import annotations

import argparse
import dataclasses
import logging
import os
import sys
from pathlib import Path

from .analysis import compare_methods, rank_reversal_probe, sensitivity_sweep
from .core import (
    CriterionSpec,
    DecisionProblem,
    Direction,
    GraVariant,
    Method,
    MethodParams,
    Orientation,
    ValidationError,
    ranking_order,
)
from .documents import (
    METHOD_IDS,
    comparison_to_dict,
    dumps,
    issues_to_list,
    parse_csv,
    parse_json,
    result_to_dict,
    reversal_to_dict,
    sweep_to_dict,
)
from .methods import run_method

log = logging.getLogger("refrank.cli")

DEFAULT_SWEEP_GRIDS = {
    Method.VIKOR: ("gamma", [0.0, 0.25, 0.5, 0.75, 1.0]),
    Method.GRA: ("zeta", [0.3, 0.5, 0.7]),
    Method.CODAS: ("tau", [0.01, 0.02, 0.03, 0.04, 0.05]),
}


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--input", required=True, help="CSV or JSON problem document")
    sub.add_argument("--format", choices=("table", "json"), default="table")
    sub.add_argument("--directions", help="comma list of max/min per criterion (CSV input)")
    sub.add_argument("--weights", help="comma list of criterion weights (CSV input)")
    sub.add_argument("--normalize-weights", action="store_true",
                     help="rescale the supplied weights to sum to 1")
    sub.add_argument("--methods", help="comma list of method ids, or 'all'")
    sub.add_argument("--gamma", type=float, help="group-utility weight (vikor)")
    sub.add_argument("--zeta", type=float, help="distinguishing coefficient (gra weighted)")
    sub.add_argument("--tau", type=float, help="taxicab threshold (codas)")
    sub.add_argument("--gra-variant", choices=("unweighted", "weighted"))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="refrank",
        description="Rank alternatives with nine reference-type decision methods.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    rank = sub.add_parser("rank", help="score and rank with each selected method")
    _add_common(rank)

    compare = sub.add_parser("compare", help="cross-method rank table and correlations")
    _add_common(compare)

    reversal = sub.add_parser("reversal", help="drop alternatives and report order flips")
    _add_common(reversal)
    reversal.add_argument("--drop", required=True,
                          help="comma list of alternative labels to remove")

    sweep = sub.add_parser("sweep", help="rank across a parameter grid or weight samples")
    _add_common(sweep)
    sweep.add_argument("--param", choices=("gamma", "zeta", "tau"))
    sweep.add_argument("--values", help="comma list of parameter values")
    sweep.add_argument("--weight-samples",
                       help="semicolon-separated weight vectors, e.g. '0.5,0.5;0.3,0.7'")

    serve = sub.add_parser("serve", help="start the HTTP service")
    serve.add_argument("--port", type=int, default=8000)
    serve.add_argument("--bind", default="127.0.0.1")
    serve.add_argument("--ui-dir", help="directory of static UI assets to serve")
    return parser


def _split_floats(text: str, parser, flag: str) -> list[float]:
    try:
        return [float(part) for part in text.split(",")]
    except ValueError:
        parser.error(f"{flag} expects a comma list of numbers, got {text!r}")


def _load(args, parser) -> tuple[DecisionProblem, MethodParams, tuple[Method, ...]]:
    """Build problem/params/methods from the input file plus flag overrides."""
    try:
        text = Path(args.input).read_text(encoding="utf-8")
    except OSError as exc:
        raise ValidationError.single("ParseError", f"cannot read {args.input}: {exc}") from exc

    is_json = args.input.endswith(".json") or text.lstrip().startswith("{")
    if is_json:
        problem, params, methods = parse_json(text)
        if args.directions is not None or args.weights is not None:
            directions = (args.directions.split(",") if args.directions is not None
                          else [d.value for d in problem.directions])
            weights = (_split_floats(args.weights, parser, "--weights")
                       if args.weights is not None else list(problem.weights))
            if len(directions) != problem.n or len(weights) != problem.n:
                parser.error(
                    f"--directions/--weights must list {problem.n} entries for this input"
                )
            if any(d not in ("max", "min") for d in directions):
                parser.error("--directions entries must be 'max' or 'min'")
            criteria = tuple(
                CriterionSpec(c.name, Direction(d), w)
                for c, d, w in zip(problem.criteria, directions, weights)
            )
            problem = DecisionProblem(problem.alternatives, criteria, problem.values)
    else:
        if args.directions is None or args.weights is None:
            parser.error("CSV input requires --directions and --weights")
        directions = args.directions.split(",")
        weights = _split_floats(args.weights, parser, "--weights")
        try:
            problem = parse_csv(text, directions, weights)
        except ValidationError as exc:
            if "CountMismatch" in exc.codes() or (
                exc.issues and exc.issues[0].location.get("field") == "directions"
            ):
                parser.error(str(exc))
            raise
        params = MethodParams()
        methods = tuple(Method)

    if args.normalize_weights:
        total = sum(c.weight for c in problem.criteria)
        if total > 0:
            criteria = tuple(
                CriterionSpec(c.name, c.direction, c.weight / total)
                for c in problem.criteria
            )
            problem = DecisionProblem(problem.alternatives, criteria, problem.values)

    if args.methods is not None:
        if args.methods == "all":
            methods = tuple(Method)
        else:
            ids = args.methods.split(",")
            unknown = [mid for mid in ids if mid not in METHOD_IDS]
            if unknown:
                parser.error(
                    f"unknown method(s) {unknown}; valid ids: {', '.join(METHOD_IDS)}"
                )
            methods = tuple(dict.fromkeys(Method(mid) for mid in ids))

    overrides = {}
    if args.gamma is not None:
        overrides["vikor_gamma"] = args.gamma
    if args.zeta is not None:
        overrides["gra_zeta"] = args.zeta
    if args.tau is not None:
        overrides["codas_tau"] = args.tau
    if args.gra_variant is not None:
        overrides["gra_variant"] = GraVariant(args.gra_variant)
    if overrides:
        params = dataclasses.replace(params, **overrides)
    return problem, params, methods


def _print_errors(issues, fmt: str) -> None:
    if fmt == "json":
        print(dumps({"errors": issues_to_list(issues)}), file=sys.stderr)
    else:
        for issue in issues:
            where = f" at {dict(issue.location)}" if issue.location else ""
            print(f"error[{issue.code}]{where}: {issue.message}", file=sys.stderr)


def _ranking_line(problem, scores, orientation) -> str:
    order = ranking_order(scores, orientation)
    return " > ".join(problem.alternatives[i] for i in order)


def _cmd_rank(args, parser) -> int:
    problem, params, methods = _load(args, parser)
    results, failures = {}, {}
    for method in methods:
        try:
            results[method] = run_method(problem, method, params)
        except ValidationError as exc:
            failures[method] = exc.issues

    if not results:
        _print_errors([i for group in failures.values() for i in group], args.format)
        return 1

    if args.format == "json":
        payload = {
            "alternatives": list(problem.alternatives),
            "results": {m.value: result_to_dict(r) for m, r in results.items()},
            "failures": {m.value: issues_to_list(i) for m, i in failures.items()},
        }
        print(dumps(payload))
    else:
        for method, res in results.items():
            tag = "lower is better" if res.orientation is Orientation.LOWER_BETTER \
                else "higher is better"
            print(f"== {method.value} ({tag}) ==")
            for i in ranking_order(res.scores, res.orientation):
                print(f"  {res.ranks[i]:>3}  {problem.alternatives[i]:<12} "
                      f"{res.scores[i]: .4f}")
            if "compromise_set" in res.diagnostics:
                print(f"  compromise set: {', '.join(res.diagnostics['compromise_set'])}")
        for method, issues in failures.items():
            for issue in issues:
                print(f"{method.value}: skipped -- [{issue.code}] {issue.message}",
                      file=sys.stderr)
    return 0


def _cmd_compare(args, parser) -> int:
    problem, params, methods = _load(args, parser)
    report = compare_methods(problem, methods, params)
    if not report.methods:
        _print_errors([i for g in report.failures.values() for i in g], args.format)
        return 1
    if args.format == "json":
        print(dumps(comparison_to_dict(report)))
        return 0
    ids = [m.value for m in report.methods]
    print("rank table (1 = best)")
    print(f"  {'alternative':<12} " + " ".join(f"{mid:>8}" for mid in ids))
    for i, label in enumerate(report.alternatives):
        cells = " ".join(f"{report.rank_table[i, c]:>8}" for c in range(len(ids)))
        print(f"  {label:<12} {cells}")
    print("top choices")
    for method in report.methods:
        print(f"  {method.value:<8} -> {report.top_choices[method]}")
    print("rank correlations")
    for i, mid in enumerate(ids):
        row = " ".join(f"{report.correlations[i, j]: .4f}" for j in range(len(ids)))
        print(f"  {mid:<8} {row}")
    for method, issues in report.failures.items():
        for issue in issues:
            print(f"{method.value}: skipped -- [{issue.code}] {issue.message}",
                  file=sys.stderr)
    return 0


def _cmd_reversal(args, parser) -> int:
    problem, params, methods = _load(args, parser)
    drops = [d.strip() for d in args.drop.split(",") if d.strip()]
    reports = rank_reversal_probe(problem, methods, params, drops=drops)
    if args.format == "json":
        print(dumps({"reports": [reversal_to_dict(r) for r in reports]}))
        return 0
    for report in reports:
        print(f"== {report.description} ==")
        print(f"  survivors: {', '.join(report.survivors)}")
        for method in methods:
            if method in report.failures:
                codes = ", ".join(i.code for i in report.failures[method])
                print(f"  {method.value:<8} failed ({codes})")
            elif report.flips.get(method):
                pairs = ", ".join(f"{a}/{b}" for a, b in report.flips[method])
                print(f"  {method.value:<8} flips: {pairs}")
            else:
                print(f"  {method.value:<8} no flips")
    return 0


def _cmd_sweep(args, parser) -> int:
    problem, params, methods = _load(args, parser)
    if len(methods) != 1:
        parser.error("sweep requires exactly one method (use --methods <id>)")
    method = methods[0]

    param, values, weight_samples = args.param, None, None
    if args.weight_samples:
        if args.param or args.values:
            parser.error("--weight-samples cannot be combined with --param/--values")
        weight_samples = [
            _split_floats(chunk, parser, "--weight-samples")
            for chunk in args.weight_samples.split(";") if chunk
        ]
    else:
        if args.values:
            values = _split_floats(args.values, parser, "--values")
            if param is None:
                default = DEFAULT_SWEEP_GRIDS.get(method)
                if default is None:
                    parser.error(f"--values needs --param for method {method.value}")
                param = default[0]
        elif param is not None:
            default = DEFAULT_SWEEP_GRIDS.get(method)
            values = default[1] if default and default[0] == param else None
            if values is None:
                parser.error(f"--param {param} needs --values")
        else:
            default = DEFAULT_SWEEP_GRIDS.get(method)
            if default is None:
                parser.error(
                    f"no default grid for {method.value}; pass --param/--values "
                    "or --weight-samples"
                )
            param, values = default

    result = sensitivity_sweep(
        problem, method, params, param=param, values=values,
        weight_samples=weight_samples,
    )
    if args.format == "json":
        print(dumps(sweep_to_dict(result)))
        return 0
    print(f"== sweep {method.value} ==")
    for entry in result.entries:
        setting = ", ".join(f"{k}={v}" for k, v in entry.setting.items())
        if entry.issues:
            codes = ", ".join(i.code for i in entry.issues)
            print(f"  {setting:<24} failed ({codes})")
            continue
        order = _ranking_line(problem, entry.scores,
                              Orientation.LOWER_BETTER if method in (Method.VIKOR, Method.PIV)
                              else Orientation.HIGHER_BETTER)
        marker = "  <- top changed" if entry.top_changed else ""
        print(f"  {setting:<24} {order}{marker}")
    return 0


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=os.environ.get("MCDM_LOG", "WARNING").upper())
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    if args.command == "serve":
        from .server import serve_http

        serve_http(port=args.port, bind=args.bind, ui_dir=args.ui_dir)
        return 0

    handler = {
        "rank": _cmd_rank,
        "compare": _cmd_compare,
        "reversal": _cmd_reversal,
        "sweep": _cmd_sweep,
    }[args.command]
    try:
        return handler(args, parser)
    except SystemExit as exc:  # parser.error inside a handler
        return int(exc.code or 0)
    except ValidationError as exc:
        _print_errors(exc.issues, args.format)
        return 1


if __name__ == "__main__":
    sys.exit(main())

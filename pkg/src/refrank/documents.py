"""Problem documents: the on-disk/wire representation and (de)serialization.

One JSON schema serves the CLI, the HTTP service, and snapshot export; CSV
ingestion covers the spreadsheet-shaped path (header row of criterion names,
first column of alternative labels, dot-decimal cells).
"""

from __future__ import annotations

import csv
import io
import json
from typing import Literal, Union

import numpy as np
import pydantic
from pydantic import BaseModel, ConfigDict

from .analysis import ComparisonReport, ReversalReport, SweepResult
from .core import (
    CriterionSpec,
    DecisionProblem,
    Direction,
    GraVariant,
    Method,
    MethodParams,
    MethodResult,
    ParseError,
    ValidationError,
    ValidationIssue,
)

METHOD_IDS = tuple(m.value for m in Method)


class CriterionDoc(BaseModel):
    model_config = ConfigDict(extra="forbid")

    name: str
    direction: Literal["max", "min"]
    weight: float


class ParamsDoc(BaseModel):
    model_config = ConfigDict(extra="forbid")

    gamma: float = 0.5
    zeta: float = 0.5
    tau: float = 0.02
    gra_variant: Literal["unweighted", "weighted"] = "unweighted"


class ProblemDocument(BaseModel):
    """Wire/disk form of a decision problem plus method selection."""

    model_config = ConfigDict(extra="forbid")

    alternatives: list[str]
    criteria: list[CriterionDoc]
    values: list[list[float]]
    methods: Union[Literal["all"], list[str]] = "all"
    params: ParamsDoc = ParamsDoc()


class SweepSpec(BaseModel):
    model_config = ConfigDict(extra="forbid")

    param: Literal["gamma", "zeta", "tau"] | None = None
    values: list[float] | None = None
    weights: list[list[float]] | None = None


class ReversalRequest(ProblemDocument):
    drop: list[str]


class SweepRequest(ProblemDocument):
    sweep: SweepSpec


def resolve_methods(selection: Union[str, list[str]]) -> tuple[Method, ...]:
    """Map wire method ids onto Method values ("all" selects every method)."""
    if selection == "all":
        return tuple(Method)
    issues = [
        ValidationIssue(
            "UnknownMethod",
            f"unknown method {mid!r}; valid ids: {', '.join(METHOD_IDS)}",
            {"method": mid},
        )
        for mid in selection
        if mid not in METHOD_IDS
    ]
    if issues:
        raise ValidationError(issues)
    return tuple(dict.fromkeys(Method(mid) for mid in selection))


def params_from_doc(doc: ParamsDoc) -> MethodParams:
    return MethodParams(
        vikor_gamma=doc.gamma,
        gra_variant=GraVariant(doc.gra_variant),
        gra_zeta=doc.zeta,
        codas_tau=doc.tau,
    )


def document_to_problem(
    doc: ProblemDocument,
) -> tuple[DecisionProblem, MethodParams, tuple[Method, ...]]:
    """Convert a validated document into domain objects.

    Raises ValidationError for domain-level failures (unknown method ids,
    parameter ranges, ragged matrices); structural schema failures are the
    caller's concern via pydantic.
    """
    criteria = tuple(
        CriterionSpec(c.name, Direction(c.direction), c.weight) for c in doc.criteria
    )
    problem = DecisionProblem(tuple(doc.alternatives), criteria, doc.values)
    methods = resolve_methods(doc.methods)
    params = params_from_doc(doc.params)
    return problem, params, methods


def _pointer(loc: tuple) -> str:
    return "/" + "/".join(str(part) for part in loc)


def parse_json(text: str) -> tuple[DecisionProblem, MethodParams, tuple[Method, ...]]:
    """Parse a self-contained JSON problem document.

    Snapshot files exported by the UI ({"request": <document>, "response":
    ...}) are accepted too; the embedded request is used.

    Raises:
        ParseError: malformed JSON, or schema violations (reported with
            JSON-pointer paths).
        ValidationError: domain failures such as UnknownMethod.
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError([ValidationIssue(
            "ParseError",
            f"invalid JSON: {exc.msg}",
            {"line": exc.lineno, "column": exc.colno},
        )]) from exc
    if isinstance(data, dict) and "alternatives" not in data and isinstance(
        data.get("request"), dict
    ):
        data = data["request"]
    try:
        doc = ProblemDocument.model_validate(data)
    except pydantic.ValidationError as exc:
        raise ParseError([
            ValidationIssue(
                "SchemaViolation",
                err["msg"],
                {"pointer": _pointer(err["loc"])},
            )
            for err in exc.errors()
        ]) from exc
    return document_to_problem(doc)


def _parse_cell(cell: str) -> float:
    value = float(cell)
    if not np.isfinite(value):
        raise ValueError(f"non-finite value {cell!r}")
    return value


def parse_csv(
    text: str,
    directions: list[str] | tuple[str, ...],
    weights: list[float] | tuple[float, ...],
) -> DecisionProblem:
    """Parse a CSV matrix with criterion metadata supplied alongside.

    The header row names the criteria (its first cell is ignored); each data
    row starts with the alternative label. Cells must be dot-decimal reals.

    Raises:
        ParseError: grammar violations, located by 1-based row/column.
        ValidationError: CountMismatch when directions/weights do not match
            the number of criteria columns.
    """
    rows = [row for row in csv.reader(io.StringIO(text)) if row]
    if not rows:
        raise ParseError([ValidationIssue("ParseError", "empty document", {"row": 1})])
    header = rows[0]
    names = [cell.strip() for cell in header[1:]]
    if not names:
        raise ParseError([ValidationIssue(
            "ParseError", "header row has no criterion columns", {"row": 1},
        )])
    data_rows = rows[1:]
    if len(data_rows) < 2:
        raise ParseError([ValidationIssue(
            "MatrixTooSmall",
            f"m >= 2 required, found {len(data_rows)} data row(s)",
            {"rows": len(data_rows)},
        )])

    issues: list[ValidationIssue] = []
    if len(directions) != len(names):
        issues.append(ValidationIssue(
            "CountMismatch",
            f"{len(directions)} directions for {len(names)} criteria",
            {"field": "directions"},
        ))
    if len(weights) != len(names):
        issues.append(ValidationIssue(
            "CountMismatch",
            f"{len(weights)} weights for {len(names)} criteria",
            {"field": "weights"},
        ))
    bad_direction = [d for d in directions if d not in ("max", "min")]
    if bad_direction:
        issues.append(ValidationIssue(
            "ParseError",
            f"directions must be 'max' or 'min', got {bad_direction}",
            {"field": "directions"},
        ))
    if issues:
        raise ValidationError(issues)

    labels: list[str] = []
    values: list[list[float]] = []
    for r, row in enumerate(data_rows, start=2):
        if len(row) != len(names) + 1:
            raise ParseError([ValidationIssue(
                "ParseError",
                f"expected {len(names) + 1} cells, got {len(row)}",
                {"row": r},
            )])
        labels.append(row[0].strip())
        parsed = []
        for c, cell in enumerate(row[1:], start=2):
            try:
                parsed.append(_parse_cell(cell.strip()))
            except ValueError:
                raise ParseError([ValidationIssue(
                    "ParseError",
                    f"cell {cell!r} is not a dot-decimal real",
                    {"row": r, "column": c},
                )]) from None
        values.append(parsed)

    criteria = tuple(
        CriterionSpec(name, Direction(d), float(w))
        for name, d, w in zip(names, directions, weights)
    )
    return DecisionProblem(tuple(labels), criteria, values)


# ---------------------------------------------------------------------------
# Serialization. json.dumps renders floats with their shortest exact repr,
# so emitted numbers round-trip bit-exactly; display layers round to 4
# decimals separately.

def jsonable(value):
    """Recursively convert engine values into JSON-serializable structures."""
    if isinstance(value, np.ndarray):
        return [jsonable(v) for v in value.tolist()]
    if isinstance(value, (np.floating, float)):
        return float(value)
    if isinstance(value, (np.integer, int)):
        return int(value)
    if isinstance(value, (Method, Direction, GraVariant)):
        return value.value
    if isinstance(value, dict):
        return {jsonable_key(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if isinstance(value, ValidationIssue):
        return value.to_dict()
    return value


def jsonable_key(key):
    return key.value if isinstance(key, (Method, Direction, GraVariant)) else key


def issues_to_list(issues) -> list[dict]:
    return [issue.to_dict() for issue in issues]


def result_to_dict(result: MethodResult) -> dict:
    return {
        "method": result.method.value,
        "orientation": result.orientation.value,
        "scores": jsonable(result.scores),
        "ranks": jsonable(result.ranks),
        "diagnostics": jsonable(result.diagnostics),
    }


def comparison_to_dict(report: ComparisonReport) -> dict:
    return {
        "alternatives": list(report.alternatives),
        "methods": [m.value for m in report.methods],
        "rank_table": jsonable(report.rank_table),
        "score_table": jsonable(report.score_table),
        "top_choices": {m.value: a for m, a in report.top_choices.items()},
        "correlations": jsonable(report.correlations),
        "failures": {
            m.value: issues_to_list(issues) for m, issues in report.failures.items()
        },
    }


def reversal_to_dict(report: ReversalReport) -> dict:
    return {
        "description": report.description,
        "removed": list(report.removed),
        "survivors": list(report.survivors),
        "flips": {
            m.value: [list(pair) for pair in pairs]
            for m, pairs in report.flips.items()
        },
        "affected": {m.value: flag for m, flag in report.affected.items()},
        "failures": {
            m.value: issues_to_list(issues) for m, issues in report.failures.items()
        },
    }


def sweep_to_dict(result: SweepResult) -> dict:
    return {
        "method": result.method.value,
        "alternatives": list(result.alternatives),
        "entries": [
            {
                "setting": jsonable(entry.setting),
                "scores": jsonable(entry.scores) if entry.scores is not None else None,
                "ranks": jsonable(entry.ranks) if entry.ranks is not None else None,
                "top": entry.top,
                "top_changed": entry.top_changed,
                "issues": issues_to_list(entry.issues),
            }
            for entry in result.entries
        ],
    }


def problem_to_document_dict(
    problem: DecisionProblem,
    params: MethodParams,
    methods: tuple[Method, ...],
) -> dict:
    """Echo a problem back in ProblemDocument form (used by snapshots)."""
    return {
        "alternatives": list(problem.alternatives),
        "criteria": [
            {"name": c.name, "direction": c.direction.value, "weight": c.weight}
            for c in problem.criteria
        ],
        "values": jsonable(problem.values),
        "methods": [m.value for m in methods],
        "params": {
            "gamma": params.vikor_gamma,
            "zeta": params.gra_zeta,
            "tau": params.codas_tau,
            "gra_variant": params.gra_variant.value,
        },
    }


def dumps(payload) -> str:
    """Serialize a payload deterministically; rejects non-finite numbers."""
    return json.dumps(payload, indent=2, allow_nan=False)


# Parameter metadata exposed by the CLI (--help), the methods endpoint, and
# the UI's parameter controls.
PARAM_INFO = [
    {
        "name": "gamma",
        "type": "number",
        "min": 0.0,
        "max": 1.0,
        "default": 0.5,
        "methods": ["vikor"],
        "description": "weight of group utility versus individual regret",
    },
    {
        "name": "zeta",
        "type": "number",
        "min": 0.0,
        "max": 1.0,
        "exclusive_min": True,
        "default": 0.5,
        "methods": ["gra"],
        "description": "distinguishing coefficient (weighted variant only)",
    },
    {
        "name": "tau",
        "type": "number",
        "min": 0.01,
        "max": 0.05,
        "default": 0.02,
        "methods": ["codas"],
        "description": "Euclidean-gap threshold for using the taxicab term",
    },
    {
        "name": "gra_variant",
        "type": "enum",
        "choices": ["unweighted", "weighted"],
        "default": "unweighted",
        "methods": ["gra"],
        "description": "plain coefficient average, or zeta form with weights",
    },
]

METHOD_INFO = [
    {
        "id": m.value,
        "orientation": "lower_better" if m in (Method.VIKOR, Method.PIV) else "higher_better",
        "params": [p["name"] for p in PARAM_INFO if m.value in p["methods"]],
    }
    for m in Method
]

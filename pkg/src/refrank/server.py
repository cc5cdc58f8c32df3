"""Stateless HTTP service exposing the engine under /api/v1.

Request bodies use the ProblemDocument schema; schema violations return 422
(with JSON-pointer-style locations from the framework), domain validation
failures return 400 with the same machine-readable codes the library raises.
Static UI assets, when present, are served from the root path.
"""

from __future__ import annotations

import logging
import os
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from . import __version__
from .analysis import compare_methods, rank_reversal_probe, sensitivity_sweep
from .core import ValidationError, validate_problem
from .documents import (
    METHOD_INFO,
    PARAM_INFO,
    ProblemDocument,
    ReversalRequest,
    SweepRequest,
    comparison_to_dict,
    document_to_problem,
    issues_to_list,
    result_to_dict,
    reversal_to_dict,
    sweep_to_dict,
)
from .methods import run_method

log = logging.getLogger("refrank.server")


def default_ui_dir() -> str | None:
    """Locate bundled UI assets: $MCDM_UI_DIR, or frontend/dist nearby."""
    env = os.environ.get("MCDM_UI_DIR")
    if env:
        return env if Path(env).is_dir() else None
    for base in (Path.cwd(), Path(__file__).resolve().parents[2]):
        candidate = base / "frontend" / "dist"
        if candidate.is_dir():
            return str(candidate)
    return None


def create_app(ui_dir: str | None = None) -> FastAPI:
    app = FastAPI(title="refrank", version=__version__)

    @app.exception_handler(ValidationError)
    async def _validation_error(request: Request, exc: ValidationError):
        return JSONResponse(status_code=400, content={"errors": issues_to_list(exc.issues)})

    @app.get("/api/v1/methods")
    def list_methods():
        return {"methods": METHOD_INFO, "params": PARAM_INFO}

    @app.post("/api/v1/rank")
    def rank(doc: ProblemDocument):
        problem, params, methods = document_to_problem(doc)
        results, failures = {}, {}
        for method in methods:
            try:
                results[method.value] = result_to_dict(run_method(problem, method, params))
            except ValidationError as exc:
                failures[method.value] = issues_to_list(exc.issues)
        if not results:
            issues = [issue for group in failures.values() for issue in group]
            return JSONResponse(status_code=400, content={"errors": issues})
        log.info("ranked %d alternatives with %d method(s)", problem.m, len(results))
        return {
            "alternatives": list(problem.alternatives),
            "results": results,
            "failures": failures,
        }

    @app.post("/api/v1/compare")
    def compare(doc: ProblemDocument):
        problem, params, methods = document_to_problem(doc)
        report = compare_methods(problem, methods, params)
        if not report.methods:
            issues = [i.to_dict() for group in report.failures.values() for i in group]
            return JSONResponse(status_code=400, content={"errors": issues})
        return comparison_to_dict(report)

    @app.post("/api/v1/reversal")
    def reversal(req: ReversalRequest):
        problem, params, methods = document_to_problem(req)
        reports = rank_reversal_probe(problem, methods, params, drops=req.drop)
        return {"reports": [reversal_to_dict(r) for r in reports]}

    @app.post("/api/v1/sweep")
    def sweep(req: SweepRequest):
        problem, params, methods = document_to_problem(req)
        if len(methods) != 1:
            raise ValidationError.single(
                "SweepGridInvalid", "sweep requires exactly one method"
            )
        validate_problem(problem, methods)
        result = sensitivity_sweep(
            problem,
            methods[0],
            params,
            param=req.sweep.param,
            values=req.sweep.values,
            weight_samples=req.sweep.weights,
        )
        return sweep_to_dict(result)

    if ui_dir is None:
        ui_dir = default_ui_dir()
    if ui_dir:
        log.info("serving UI assets from %s", ui_dir)
        app.mount("/", StaticFiles(directory=ui_dir, html=True), name="ui")
    return app


def serve_http(port: int = 8000, bind: str = "127.0.0.1", ui_dir: str | None = None) -> None:
    """Run the service with uvicorn (blocks until interrupted)."""
    import uvicorn

    uvicorn.run(create_app(ui_dir=ui_dir), host=bind, port=port)

"""refrank: reference-type multi-criteria decision analysis.

Nine ranking methods (TOPSIS, GRA, VIKOR, EDAS, MABAC, CODAS, PIV, MARCOS,
PROBID) over a shared decision-problem model, with cross-method comparison,
rank-reversal probing, sensitivity sweeps, a CLI, and an HTTP service.
"""

__version__ = "0.1.0"

from .core import (
    ALL_METHODS,
    DEFAULT_PARAMS,
    CriterionSpec,
    DecisionProblem,
    Direction,
    GraVariant,
    Method,
    MethodParams,
    MethodResult,
    Orientation,
    ParseError,
    ValidationError,
    ValidationIssue,
    rank_from_scores,
    validate_problem,
)
from .methods import (
    codas,
    edas,
    gra,
    mabac,
    marcos,
    piv,
    probid,
    run_method,
    topsis,
    vikor,
)
from .analysis import (
    ComparisonReport,
    ReversalReport,
    SweepResult,
    compare_methods,
    rank_reversal_probe,
    sensitivity_sweep,
)

__all__ = [
    "ALL_METHODS",
    "DEFAULT_PARAMS",
    "ComparisonReport",
    "CriterionSpec",
    "DecisionProblem",
    "Direction",
    "GraVariant",
    "Method",
    "MethodParams",
    "MethodResult",
    "Orientation",
    "ParseError",
    "ReversalReport",
    "SweepResult",
    "ValidationError",
    "ValidationIssue",
    "compare_methods",
    "codas",
    "edas",
    "gra",
    "mabac",
    "marcos",
    "piv",
    "probid",
    "rank_from_scores",
    "rank_reversal_probe",
    "run_method",
    "sensitivity_sweep",
    "topsis",
    "validate_problem",
    "vikor",
]

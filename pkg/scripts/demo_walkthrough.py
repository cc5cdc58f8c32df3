"""Run all nine methods on the bundled 5x3 sample problem and print the
score/rank tables plus the cross-method comparison.

Usage: python scripts/demo_walkthrough.py
"""

from __future__ import annotations

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "tests"))

from fixtures import demo_problem  # noqa: E402

from refrank.analysis import compare_methods  # noqa: E402
from refrank.core import Method, Orientation, ranking_order  # noqa: E402
from refrank.methods import run_method  # noqa: E402


def main() -> None:
    problem = demo_problem()
    print("sample problem:")
    header = f"{'':<6}" + "".join(
        f"{c.name} ({c.direction.value}, w={c.weight})".rjust(22) for c in problem.criteria
    )
    print(header)
    for label, row in zip(problem.alternatives, problem.values):
        print(f"{label:<6}" + "".join(f"{v:>22.3f}" for v in row))

    print("\nper-method scores (ranks in parentheses):")
    print(f"{'method':<8}" + "".join(f"{a:>14}" for a in problem.alternatives))
    for method in Method:
        res = run_method(problem, method)
        cells = "".join(
            f"{res.scores[i]:>9.4f} ({res.ranks[i]})" for i in range(problem.m)
        )
        print(f"{method.value:<8}{cells}")

    report = compare_methods(problem)
    print("\ntop choice per method:")
    for method in report.methods:
        print(f"  {method.value:<8} -> {report.top_choices[method]}")

    vikor = run_method(problem, Method.VIKOR)
    print(f"\nvikor compromise set: {', '.join(vikor.diagnostics['compromise_set'])}")
    order = ranking_order(vikor.scores, Orientation.LOWER_BETTER)
    print("vikor ranking:", " > ".join(problem.alternatives[i] for i in order))


if __name__ == "__main__":
    main()

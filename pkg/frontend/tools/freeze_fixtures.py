"""Freeze service responses into frontend test fixtures.

Captures real /api/v1/rank responses (via the in-process test client) for
the bundled sample problem and for exclusion scenarios, plus the reversal
probe's flip report, so the UI's display and flip logic is tested against
actual engine output without a running server.

Run from the repo root: python frontend/tools/freeze_fixtures.py
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np
from fastapi.testclient import TestClient

from refrank.analysis import rank_reversal_probe
from refrank.core import CriterionSpec, DecisionProblem, Direction, Method
from refrank.documents import reversal_to_dict
from refrank.server import create_app

FIXTURES = Path(__file__).resolve().parent.parent / "tests" / "fixtures"

SAMPLE_DOC = {
    "alternatives": ["A1", "A2", "A3", "A4", "A5"],
    "criteria": [
        {"name": "C1", "direction": "max", "weight": 0.25},
        {"name": "C2", "direction": "min", "weight": 0.4},
        {"name": "C3", "direction": "max", "weight": 0.35},
    ],
    "values": [
        [0.185, 2.33, 454],
        [0.317, 1.08, 298],
        [0.555, 6.45, 174],
        [0.731, 8.88, 849],
        [0.948, 7.39, 517],
    ],
    "methods": "all",
    "params": {"gamma": 0.5, "zeta": 0.5, "tau": 0.02, "gra_variant": "unweighted"},
}


def doc_to_problem(doc: dict) -> DecisionProblem:
    return DecisionProblem(
        tuple(doc["alternatives"]),
        tuple(
            CriterionSpec(c["name"], Direction(c["direction"]), c["weight"])
            for c in doc["criteria"]
        ),
        doc["values"],
    )


def drop(doc: dict, label: str) -> dict:
    keep = [i for i, a in enumerate(doc["alternatives"]) if a != label]
    return {
        **doc,
        "alternatives": [doc["alternatives"][i] for i in keep],
        "values": [doc["values"][i] for i in keep],
    }


def find_flip_case(client: TestClient) -> tuple[dict, str]:
    """Seeded search for a problem where removing one row flips pairs."""
    rng = np.random.default_rng(424242)
    while True:
        m = int(rng.integers(4, 7))
        n = int(rng.integers(2, 5))
        doc = {
            "alternatives": [f"A{i}" for i in range(1, m + 1)],
            "criteria": [
                {
                    "name": f"C{j}",
                    "direction": str(rng.choice(["max", "min"])),
                    "weight": None,
                }
                for j in range(1, n + 1)
            ],
            "values": rng.uniform(1.0, 100.0, size=(m, n)).round(3).tolist(),
            "methods": "all",
            "params": SAMPLE_DOC["params"],
        }
        raw = rng.uniform(0.1, 1.0, size=n)
        for c, w in zip(doc["criteria"], raw / raw.sum()):
            c["weight"] = float(w)
        problem = doc_to_problem(doc)
        for label in doc["alternatives"]:
            reports = rank_reversal_probe(problem, tuple(Method), drops=[label])
            flips = reports[0].flips
            if sum(len(pairs) for pairs in flips.values()) >= 2:
                return doc, label


def main() -> None:
    FIXTURES.mkdir(parents=True, exist_ok=True)
    client = TestClient(create_app(ui_dir=None))

    def rank(doc: dict) -> dict:
        resp = client.post("/api/v1/rank", json=doc)
        assert resp.status_code == 200, resp.text
        return resp.json()

    default_response = rank(SAMPLE_DOC)
    (FIXTURES / "rank_default.json").write_text(
        json.dumps({"request": SAMPLE_DOC, "response": default_response}, indent=2)
    )

    reduced_doc = drop(SAMPLE_DOC, "A3")
    (FIXTURES / "rank_drop_a3.json").write_text(
        json.dumps({"request": reduced_doc, "response": rank(reduced_doc)}, indent=2)
    )

    probe = rank_reversal_probe(doc_to_problem(SAMPLE_DOC), tuple(Method), drops=["A3"])
    (FIXTURES / "probe_drop_a3.json").write_text(
        json.dumps(reversal_to_dict(probe[0]), indent=2)
    )

    flip_doc, flip_label = find_flip_case(client)
    flip_reduced = drop(flip_doc, flip_label)
    probe = rank_reversal_probe(doc_to_problem(flip_doc), tuple(Method), drops=[flip_label])
    (FIXTURES / "flip_case.json").write_text(json.dumps({
        "dropped": flip_label,
        "base": {"request": flip_doc, "response": rank(flip_doc)},
        "reduced": {"request": flip_reduced, "response": rank(flip_reduced)},
        "probe": reversal_to_dict(probe[0]),
    }, indent=2))

    display = {
        mid: [f"{score:.4f}" for score in result["scores"]]
        for mid, result in default_response["results"].items()
    }
    (FIXTURES / "expected_display.json").write_text(json.dumps(display, indent=2))

    methods = client.get("/api/v1/methods").json()
    (FIXTURES / "methods.json").write_text(json.dumps(methods, indent=2))
    print(f"wrote fixtures to {FIXTURES}")
    print(f"flip case drops {flip_label}; flips:",
          {m: len(p) for m, p in probe[0].flips.items() if p})


if __name__ == "__main__":
    main()

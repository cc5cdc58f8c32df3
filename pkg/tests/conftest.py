import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))

import pytest

from fixtures import (
    demo_problem,
    ex_large_problem,
    ex_medium_problem,
    ex_small_problem,
    ex_wide_problem,
)

DATA_DIR = Path(__file__).resolve().parent / "data"


@pytest.fixture
def demo():
    return demo_problem()


@pytest.fixture
def ex_small():
    return ex_small_problem()


@pytest.fixture
def ex_medium():
    return ex_medium_problem()


@pytest.fixture
def ex_wide():
    return ex_wide_problem()


@pytest.fixture
def ex_large():
    return ex_large_problem()


@pytest.fixture
def sample_csv_path():
    return DATA_DIR / "sample.csv"


@pytest.fixture
def sample_json_path():
    return DATA_DIR / "sample.json"

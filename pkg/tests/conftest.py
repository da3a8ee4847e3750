from pathlib import Path

import pytest

from src.config import Budgets
from src.tools.graphs import load_graph

FIXTURES = Path(__file__).parent / "fixtures" / "graphs"


@pytest.fixture
def fixture_path():
    def _get(name: str) -> Path:
        return FIXTURES / name
    return _get


@pytest.fixture
def load_fixture():
    def _load(name: str):
        return load_graph(FIXTURES / name)
    return _load


@pytest.fixture
def tight_budgets():
    return Budgets(product_cap=1)

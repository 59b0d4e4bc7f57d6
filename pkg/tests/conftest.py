import pytest

from eicycle.core import Hypergraph
from tables import TABLES

# Filled by test_acceptance; printed once at the end of the run.
ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def example24() -> Hypergraph:
    return Hypergraph(24, tuple(TABLES[24]))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

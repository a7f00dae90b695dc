import sys
from pathlib import Path

import pytest

from gpoly.graph import parse_graph6, read_graph6_lines

sys.path.insert(0, str(Path(__file__).parent))

FIXTURES = Path(__file__).parent / "fixtures"

ACCEPTANCE_LINES: list[str] = []


def fixture_records(name):
    with open(FIXTURES / name) as fh:
        return [rec for _, rec in read_graph6_lines(fh)]


def load_graphs(name):
    return [parse_graph6(rec) for rec in fixture_records(name)]


def all_graphs(max_n, min_n=0):
    return [g for n in range(min_n, max_n + 1) for g in load_graphs(f"all_n{n}.g6")]


@pytest.fixture(scope="session")
def corpus_upto6():
    return all_graphs(6)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

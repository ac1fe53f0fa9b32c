from pathlib import Path

import pytest

from tgk.enumeration import enumerate_bruteforce
from tgk.groupoid import parse_table

from helpers import all_graphs

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture(scope="session")
def fixtures_dir():
    return FIXTURES


@pytest.fixture(scope="session")
def k23_table():
    return parse_table((FIXTURES / "k23_example.table").read_text())


@pytest.fixture(scope="session")
def diamond_table():
    return parse_table((FIXTURES / "diamond_tcm.table").read_text())


@pytest.fixture(scope="session")
def small_travel_groupoids():
    """Every travel groupoid of order <= 5 on every labelled graph."""
    out = []
    for n in range(1, 6):
        for G in all_graphs(n):
            out.extend(enumerate_bruteforce(G))
    return out


_criteria = {}


def pytest_runtest_logreport(report):
    props = dict(report.user_properties)
    if "criterion" not in props:
        return
    label = props["criterion"]
    if report.when == "call" or report.failed:
        if _criteria.get(label) != "FAIL":
            _criteria[label] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_criteria, key=lambda s: int(s.split(":")[0])):
        terminalreporter.write_line(f"{_criteria[label]} criterion {label}")

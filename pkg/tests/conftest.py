import sys


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)


import pytest

from graphvar.graph import parse_graph

K4_EAR_TEXT = "1 2\n2 3\n3 4\n4 5\n1 3\n1 4\n2 4\n3 5\n"


@pytest.fixture
def k4_ear():
    """K4 on 1..4 plus a fifth vertex joined to 3 and 4."""
    return parse_graph(K4_EAR_TEXT)

import pytest

from _support import ACCEPTANCE_LINES
from dagjunction.testkit import fixtures


@pytest.fixture
def fx():
    return fixtures()


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

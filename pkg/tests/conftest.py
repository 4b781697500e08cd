from pathlib import Path

import pytest

from snortcgt.families import witness_position

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture
def fixtures():
    return FIXTURES


@pytest.fixture
def witness():
    return witness_position()


def pytest_terminal_summary(terminalreporter):
    from _report import RESULTS
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(RESULTS):
        terminalreporter.write_line(RESULTS[num])

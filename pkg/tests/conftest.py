import pytest

from projboard.board import board
from projboard.walk import Walk


@pytest.fixture
def ha33():
    """The all-north 3x3 path from (0,2) to (1,0)."""
    return Walk(board(3, 3), (0, 2), "NNNNNENN")


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)

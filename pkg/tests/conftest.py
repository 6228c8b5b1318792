import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from seifert4.seifert import SeifertData  # noqa: E402

ACCEPTANCE_LINES = []


@pytest.fixture
def hempel_pair():
    M = SeifertData.make(2, [(5, 1, 0), (5, 4, 0)], (-1, 0))
    N = SeifertData.make(2, [(5, 2, 0), (5, 3, 0)], (-1, 0))
    return M, N


@pytest.fixture
def distinct_pair():
    M = SeifertData.make(2, [(7, 1, 0), (7, 1, 0), (7, 5, 0)], (-1, 0))
    N = SeifertData.make(2, [(7, 1, 0), (7, 2, 0), (7, 4, 0)], (-1, 0))
    return M, N


@pytest.fixture
def rigid_manifold():
    return SeifertData.make(2, [(3, 1, 1), (3, 1, 1)], (0, 0))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

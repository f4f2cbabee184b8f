import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from hbx.catalog import catalog as _catalog  # noqa: E402

STRUCTURES = Path(__file__).resolve().parents[1] / "src" / "hbx" / "data" / "structures"


@pytest.fixture(scope="session")
def cat():
    return _catalog()


@pytest.fixture(scope="session")
def structures():
    return STRUCTURES


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import LINES
    except ImportError:
        return
    if LINES:
        terminalreporter.section("acceptance criteria")
        for line in LINES:
            terminalreporter.write_line(line)

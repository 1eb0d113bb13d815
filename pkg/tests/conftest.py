import contextlib
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_RESULTS = []


@pytest.fixture
def criterion():
    @contextlib.contextmanager
    def record(number, text):
        try:
            yield
        except BaseException:
            _RESULTS.append((number, "FAIL", text))
            raise
        _RESULTS.append((number, "PASS", text))
    return record


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, status, text in sorted(_RESULTS):
        terminalreporter.write_line(f"[{status}] criterion {number}: {text}")

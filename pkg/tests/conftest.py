"""Shared fixtures; also collects the acceptance checklist lines so they
print once at the end of the session regardless of output capture."""

import pytest

_CRITERIA_LINES = []


@pytest.fixture
def record_criterion():
    """Callable that registers one pass/fail summary line."""

    def _record(line):
        _CRITERIA_LINES.append(line)

    return _record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _CRITERIA_LINES:
        return
    terminalreporter.section("acceptance checklist")
    for line in _CRITERIA_LINES:
        terminalreporter.write_line(line)

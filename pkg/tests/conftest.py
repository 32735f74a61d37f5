"""Shared fixtures: the acceptance report collector.

Acceptance tests print one pass/fail line per criterion; the collected
lines are echoed again in a terminal summary section so they stay visible
when pytest captures stdout.
"""

import pytest

_ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def acceptance_report():
    return _ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

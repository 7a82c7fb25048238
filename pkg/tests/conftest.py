"""Session fixtures and the acceptance-criteria summary block."""

import re

import pytest

from surfgroup.group_core import GroupContext


@pytest.fixture(scope="session")
def ctx2():
    return GroupContext(2)


@pytest.fixture(scope="session")
def ctx3():
    return GroupContext(3)


@pytest.fixture(scope="session")
def ctx4():
    return GroupContext(4)


_CRITERION = re.compile(r"test_acceptance\.py::test_criterion_(\d+)")


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One PASS/FAIL line per acceptance criterion, with the call duration."""
    rows = {}
    for key, reports in terminalreporter.stats.items():
        for rep in reports:
            m = _CRITERION.search(getattr(rep, "nodeid", ""))
            if m is None:
                continue
            num = int(m.group(1))
            outcome, duration = rows.get(num, ("PASS", 0.0))
            if key in ("failed", "error", "skipped"):
                outcome = "FAIL"
            if getattr(rep, "when", "call") == "call":
                duration = getattr(rep, "duration", 0.0)
            rows[num] = (outcome, duration)
    if not rows:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for num in sorted(rows):
        outcome, duration = rows[num]
        terminalreporter.write_line(f"criterion {num:2d}: {outcome} ({duration:.1f}s)")

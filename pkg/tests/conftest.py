import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_ACCEPTANCE = []


@pytest.fixture
def criterion(request):
    """Record a PASS/FAIL line for an acceptance criterion."""
    def record(label):
        _ACCEPTANCE.append((label, request.node))
    return record


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item._acceptance_passed = rep.passed


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label, node in _ACCEPTANCE:
        passed = getattr(node, "_acceptance_passed", False)
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {label}")

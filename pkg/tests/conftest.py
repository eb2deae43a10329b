from __future__ import annotations

from functools import lru_cache

import pytest

from relu_landscape.reduced_flow.solver import solve_family

FAMILY_NAMES = ("identity", "typeA", "typeII", "typeI", "typeM_II", "typeM_I", "typeN_II")

_criteria: dict[int, tuple[str, str]] = {}


@lru_cache(maxsize=None)
def family_point(name: str, d: float):
    """Exact family point, shared across test modules (solves continue down from d=64)."""
    return solve_family(name, d)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion reported in the summary")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    n, title = mark.args
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _criteria[n] = (title, "PASS" if report.passed else "FAIL")


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        title, verdict = _criteria[n]
        terminalreporter.write_line(f"criterion {n:2d}: {verdict}  {title}")

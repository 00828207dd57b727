import random

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "repo", derandomize=True, deadline=None, max_examples=40,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("repo")


@pytest.fixture
def rng():
    return random.Random(20261015)


CRITERIA: dict = {}


@pytest.fixture
def criterion(request):
    """Record the outcome of an acceptance criterion under its number."""
    number = request.node.get_closest_marker("criterion").args[0]
    yield
    report = getattr(request.node, "call_report", None)
    CRITERIA[number] = bool(report and report.passed)
    print(f"criterion {number}: {'PASS' if CRITERIA[number] else 'FAIL'}")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.call_report = rep


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


def pytest_terminal_summary(terminalreporter):
    if CRITERIA:
        terminalreporter.section("acceptance criteria")
        for n in sorted(CRITERIA):
            terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if CRITERIA[n] else 'FAIL'}")

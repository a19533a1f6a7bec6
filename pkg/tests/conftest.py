from __future__ import annotations

import pytest


def pytest_addoption(parser):
    parser.addoption("--slow", action="store_true", default=False, help="run the hours-long three-peg checks")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: hours-long; only runs with --slow")
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")
    config._criteria = []


def pytest_collection_modifyitems(config, items):
    if config.getoption("--slow"):
        return
    skip = pytest.mark.skip(reason="needs --slow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if report.when != "call" and not (report.when == "setup" and not report.passed):
        return
    number, title = marker.args
    callspec = getattr(item, "callspec", None)
    if callspec is not None:
        title = f"{title} [{callspec.id}]"
    status = "SKIP" if report.skipped else ("PASS" if report.passed else "FAIL")
    item.config._criteria.append((number, title, status, report.duration))


def pytest_terminal_summary(terminalreporter, config):
    rows = sorted(getattr(config, "_criteria", []))
    if not rows:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, status, seconds in rows:
        terminalreporter.write_line(f"{status}  criterion {number}: {title} ({seconds:.2f} s)")

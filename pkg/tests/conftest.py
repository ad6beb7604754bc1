import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_CRITERIA = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    mark = _CRITERIA.get(report.nodeid)
    if mark is None:
        return
    number, title, outcomes = mark
    outcomes.append(report.passed)


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("criterion")
        if m is not None:
            _CRITERIA[item.nodeid] = (m.args[0], m.args[1], [])


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    by_number = {}
    for number, title, outcomes in _CRITERIA.values():
        entry = by_number.setdefault(number, [title, [], 0])
        entry[1].extend(outcomes)
        entry[2] += 1
    terminalreporter.section("acceptance criteria")
    for number in sorted(by_number):
        title, outcomes, expected = by_number[number]
        if not outcomes:
            status = "NOT RUN"
        elif not all(outcomes):
            status = "FAIL"
        elif len(outcomes) < expected:
            status = "PARTIAL"
        else:
            status = "PASS"
        terminalreporter.write_line(f"{status}  {number}. {title}")


@pytest.fixture
def rng():
    import numpy as np

    return np.random.default_rng(20261016)

from __future__ import annotations

from collections import OrderedDict
from pathlib import Path

import pytest

from semdisco.app import Engine
from semdisco.config import DATA_DIR, AppConfig

# criterion number -> [title, outcomes]
_CRITERIA: "OrderedDict[int, list]" = OrderedDict()


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion covered by the test")


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark is not None:
            number, title = mark.args
            _CRITERIA.setdefault(number, [title, []])


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    if report.when == "call" or (report.when == "setup" and not report.passed):
        _CRITERIA[mark.args[0]][1].append(report.passed)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        title, outcomes = _CRITERIA[number]
        if not outcomes:
            status = "NOT RUN"
        else:
            status = "PASS" if all(outcomes) else "FAIL"
        terminalreporter.write_line(f"[{status}] criterion {number}: {title}")


@pytest.fixture(scope="session")
def data_dir() -> Path:
    return DATA_DIR


@pytest.fixture(scope="session")
def engine() -> Engine:
    return Engine.from_config(AppConfig.load())


KANIS_TWEET = ("Launched Jennifer Kanis for Melbourne Campaign today. Outcomes instead of ineffective self indulgent "
        "commentary. Vote Labor in Melbourne.")
OVERINGTON_TWEET = ("Thoughts and prayers with Karen Overington's family today. Karen was true Labor, a true friend and will be "
         "truly missed by all of us.")

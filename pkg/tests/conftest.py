from pathlib import Path

import pytest

FIXTURES = Path(__file__).parent / "fixtures"

BITCOIN = [
    ("BTC.com", 18.2), ("AntPool", 14.7), ("F2Pool", 12.6), ("SlushPool", 10.1),
    ("BTC.TOP", 7.9), ("ViaBTC", 7.9), ("DPOOL", 4.1), ("BitFury", 2.3),
    ("BitClub Network", 2.3), ("Bitcoin.com", 1.0),
]
ETHEREUM = [
    ("Ethermine", 28.2), ("Sparkpool", 21.4), ("Nanopool", 12.6), ("F2Pool_2", 12.4),
    ("MiningPoolHub_1", 5.6), ("DwarfPool_1", 1.9), ("PandaMiner", 1.8), ("firepool", 1.6),
    ("Address_1", 1.4), ("MinerallPool", 1.1),
]


@pytest.fixture
def fixtures() -> Path:
    return FIXTURES


_criteria: dict[int, list] = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    marker = getattr(report, "criterion", None)
    if marker is None:
        return
    number, text = marker
    entry = _criteria.setdefault(number, [text, True])
    entry[1] = entry[1] and report.passed


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is not None:
        report.criterion = (mark.args[0], mark.args[1])


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        text, ok = _criteria[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {text}")

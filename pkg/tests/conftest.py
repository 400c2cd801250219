from pathlib import Path

import pytest

GOLDEN = Path(__file__).parent / "golden"

_acceptance_lines = []


def read_golden(name):
    return [[int(v) for v in line.split(",")] for line in (GOLDEN / f"{name}.csv").read_text().splitlines()]


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker and rep.when == "call":
        status = "PASS" if rep.passed else "FAIL"
        _acceptance_lines.append(f"{status}  criterion {marker.args[0]}: {marker.args[1]}")


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_acceptance_lines, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)

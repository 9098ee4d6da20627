import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from _fixtures import corpus  # noqa: E402

_ACCEPTANCE: list[tuple[str, str, str]] = []


@pytest.fixture(scope="session")
def small_corpus():
    return corpus()


def pytest_runtest_logreport(report):
    if report.when != "call" or "test_acceptance" not in report.nodeid:
        return
    detail = dict(report.user_properties).get("detail", "")
    name = report.nodeid.split("::")[-1]
    _ACCEPTANCE.append((name, report.outcome.upper(), detail))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome, detail in sorted(_ACCEPTANCE):
        line = f"{outcome:<6} {name}"
        if detail:
            line += f"  ({detail})"
        terminalreporter.write_line(line)

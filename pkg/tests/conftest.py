import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from coble.scenarios import run_scenario, pencil_surface  # noqa: E402
from coble.surface import contract  # noqa: E402


@pytest.fixture(scope="session")
def pencil_report():
    """Raw pencil report; copy it before downgrading."""
    return run_scenario("section4")


_criteria: dict[int, tuple[str, str]] = {}


@pytest.fixture(scope="session")
def pencil():
    return pencil_surface()


@pytest.fixture(scope="session")
def pencil_x(pencil):
    return contract(pencil)


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    for key, value in report.user_properties:
        if key == "criterion":
            num, desc = value
            _criteria[num] = (desc, "PASS" if report.passed else "FAIL")


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_criteria):
        desc, status = _criteria[num]
        terminalreporter.write_line(f"criterion {num:2d}: {status}  {desc}")

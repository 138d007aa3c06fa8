import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from uuvplan.harness import bundled_scenario  # noqa: E402

_ACCEPTANCE = []


@pytest.fixture
def criterion():
    """Record a one-line verdict for the acceptance summary."""
    def record(number, title, ok, detail=""):
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}"
        if detail:
            line += f" ({detail})"
        _ACCEPTANCE.append(line)
        print(line)
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE, key=lambda s: int(s.split("criterion ")[1].split(":")[0])):
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def static2d():
    return bundled_scenario("2d_static")


@pytest.fixture(scope="session")
def helix3d():
    return bundled_scenario("3d_helix")

from pathlib import Path

import pytest
from hypothesis import settings

# Kernel JIT loading and corpus sweeps make per-example timing meaningless.
settings.register_profile("hamspec", deadline=None)
settings.load_profile("hamspec")

FIXTURES = Path(__file__).parent / "fixtures"

# Filled by test_acceptance.py, echoed in the terminal summary.
ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def small_g6() -> Path:
    return FIXTURES / "small.g6"


@pytest.fixture(scope="session")
def acceptance_log() -> list[str]:
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)

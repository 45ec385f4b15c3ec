import pytest

from qbax.registry import run_suite

# One full registry run shared by the acceptance tests (and anything else
# that only needs to read results).  Criterion 8 makes its own second run.
_ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def full_report():
    return run_suite(seed=0)


@pytest.fixture(scope="session")
def acceptance_log():
    return _ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

import pytest

import acceptance_log
from fixture_algebras import ALL, GP22, GP33, KRON, LOOP


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if acceptance_log.LINES:
        terminalreporter.section("acceptance criteria")
        for line in acceptance_log.LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def gp22():
    return GP22


@pytest.fixture(scope="session")
def gp33():
    return GP33


@pytest.fixture(scope="session")
def kron():
    return KRON


@pytest.fixture(scope="session")
def loop():
    return LOOP


@pytest.fixture(scope="session")
def all_fixtures():
    return dict(ALL)

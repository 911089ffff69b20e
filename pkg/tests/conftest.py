import pytest

from gvkit import example26
from gvkit.wcert import QuotRing


@pytest.fixture(scope="session")
def ex26():
    return example26.ideals("grevlex")


@pytest.fixture(scope="session")
def ex26_lex():
    return example26.ideals("lex")


@pytest.fixture(scope="session")
def P(ex26):
    return ex26["I"].ring


@pytest.fixture(scope="session")
def R26(ex26):
    return QuotRing(ex26["I"])


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

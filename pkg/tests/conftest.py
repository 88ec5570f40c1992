import pytest

from radtilt.catalog import builtin


@pytest.fixture(scope="session")
def eje1a():
    return builtin("eje1a")


@pytest.fixture(scope="session")
def eje1b():
    return builtin("eje1b")


@pytest.fixture(scope="session")
def aprsix():
    return builtin("aprsix")


@pytest.fixture(scope="session")
def a4():
    return builtin("a4cx")


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)

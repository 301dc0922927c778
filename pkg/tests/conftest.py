import pytest

from copwin import named_graph


@pytest.fixture(scope="session")
def h7():
    return named_graph("H7")


@pytest.fixture(scope="session")
def fig2():
    return named_graph("fig2")


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)

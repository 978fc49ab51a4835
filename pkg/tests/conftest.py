import pytest

from helpers import example2, octahedron


@pytest.fixture
def ex2():
    return example2(2)


@pytest.fixture
def octa():
    return octahedron(2)


def pytest_terminal_summary(terminalreporter):
    from helpers import ACCEPTANCE_RESULTS

    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE_RESULTS):
        terminalreporter.write_line(ACCEPTANCE_RESULTS[n])

import pytest

from jacsplit.fields import make_field


@pytest.fixture
def F9():
    return make_field(3, 2)


@pytest.fixture
def F8():
    return make_field(2, 3)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)

import pytest

from lifeinfo import paper_example2, paper_weibull2


@pytest.fixture
def weibull6():
    return paper_weibull2(6)


@pytest.fixture
def example2():
    return paper_example2()


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)

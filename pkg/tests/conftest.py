import pytest

from cnls2d import make_params


@pytest.fixture
def focusing():
    return make_params(1.0, -1.0)


@pytest.fixture
def defocusing():
    return make_params(1.0, 1.0)


#: one line per acceptance criterion, filled in by test_acceptance
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)

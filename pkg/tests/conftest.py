import pytest

from hecke_graphs.finite_field import FieldSpec

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(params=[2, 3, 4, 5], ids=lambda q: f"q{q}")
def field(request):
    return FieldSpec.from_q(request.param)


@pytest.fixture
def f2():
    return FieldSpec.from_q(2)


@pytest.fixture
def f3():
    return FieldSpec.from_q(3)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

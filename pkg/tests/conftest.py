import pytest

from nearvec.scalar_group import dickson, gf
from nearvec.space import make_space


@pytest.fixture(scope="session")
def v5():
    """GF(5)^2 with the cube twist on the second coordinate."""
    return make_space(gf(5), (1, 3))


@pytest.fixture(scope="session")
def v5id():
    return make_space(gf(5), (1, 1))


@pytest.fixture(scope="session")
def v7():
    return make_space(gf(7), (1, 5))


@pytest.fixture(scope="session")
def d3():
    """The order-9 Dickson near-field acting on itself."""
    return make_space(dickson(3), (1,))


@pytest.fixture(scope="session")
def v7cube():
    """GF(7)^3 with exponents (1,1,5): a non-scalar set whose independent part fails to generate."""
    return make_space(gf(7), (1, 1, 5))


@pytest.fixture(scope="session")
def fixture_spaces(v5, v5id, v7, d3):
    return [v5, v5id, v7, d3]


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

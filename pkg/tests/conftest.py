import numpy as np
import pytest

MUS = (1.001, 1.01, 1.1, 2.0, 10.0)


def right_vs(mu, n=40):
    return [float(v) for v in mu * (1.0 + np.geomspace(1e-2, 1e2, n))]


def left_vs(n=40):
    return [float(v) for v in np.geomspace(1e-4, 0.999, n)]


def grid_cases():
    """The 400-case (mu, v, side) grid: 40 v-points per region for each mu."""
    cases = []
    for mu in MUS:
        cases += [(mu, v, "right") for v in right_vs(mu)]
        cases += [(mu, v, "left") for v in left_vs()]
    return cases


@pytest.fixture(scope="session")
def grid():
    return grid_cases()


# one line per acceptance criterion, shown in the terminal summary
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)

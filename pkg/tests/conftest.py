import numpy as np
import pytest

# z^8 + 0.2 z^7 - 0.1 z^6 - 0.3 z^5 - 0.1 z^3 + 0.2 z^2 - 0.3 z + 0.1
FIG1 = np.array([0.1, -0.3, 0.2, -0.1, 0.0, -0.3, -0.1, 0.2, 1.0])
Z2P1 = np.array([1.0, 0.0, 1.0])


@pytest.fixture
def fig1():
    return FIG1.copy()


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[n])

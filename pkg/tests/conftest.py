import math

import numpy as np
import pytest

SQ3 = math.sqrt(3.0)


@pytest.fixture
def equilateral():
    return np.array([[0.0, 0.0], [1.0, 0.0], [0.5, SQ3 / 2]])


@pytest.fixture
def rng():
    return np.random.default_rng(20261019)


_ACCEPTANCE_LINES = []


@pytest.fixture
def acceptance_lines():
    return _ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE_LINES):
            terminalreporter.write_line(line)

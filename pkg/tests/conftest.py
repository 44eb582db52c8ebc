import math

import pytest

from casimir_swing import ModeIndex, three_mode_omega


@pytest.fixture(scope="session")
def omega_res() -> float:
    return three_mode_omega()


@pytest.fixture(scope="session")
def lam() -> float:
    # growth rate of the fundamental trio, sqrt(sqrt(2)*pi^2/3)
    return math.sqrt(math.sqrt(2.0) * math.pi**2 / 3.0)


@pytest.fixture(scope="session")
def trio() -> list[ModeIndex]:
    return [ModeIndex(1, 1, 1), ModeIndex(1, 2, 1), ModeIndex(2, 1, 1)]

import numpy as np
import pytest
from _testutil import random_feasible

from gtilde.geometry import PointGn, phi_supnorm, pi_hat
from gtilde.linalg import Mat2
from gtilde.oracles import GridSpec
from gtilde.schwarz import SchwarzInstance


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(0x5EED)


@pytest.fixture
def small_grid() -> GridSpec:
    """A coarse grid keeping sampling checks fast."""
    return GridSpec(interior=600, angular=90, radial=8)


@pytest.fixture
def j3_point() -> PointGn:
    """``pi_hat`` of a small matrix: ``(0.3, 0.12, 0.0015)`` in J_3."""
    return pi_hat(Mat2(0.1, 0.05, 0.05, 0.04), 3)


@pytest.fixture
def j3_lam0(j3_point: PointGn) -> complex:
    return complex(1.2 * phi_supnorm(1, j3_point))


@pytest.fixture
def feasible_instances(rng: np.random.Generator) -> list[SchwarzInstance]:
    out = []
    for k in range(60):
        y, lam0, j = random_feasible(rng, 2 + k % 7)
        out.append(SchwarzInstance(lam0, y, j))
    return out

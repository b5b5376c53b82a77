import numpy as np
import pytest

from gtilde._errors import ConfigError
from gtilde.geometry import PointGn, in_gtilde, phi, phi_supnorm, symmetrize
from gtilde.linalg import Mat2, op_norm
from gtilde.mu import mu_diag
from gtilde.oracles import (
    GridSpec,
    dense_op_norm,
    membership_torus_sampling,
    mu_grid,
    supnorm_sampling,
)


def test_grid_counts():
    grid = GridSpec(interior=50, angular=12, radial=3)
    assert grid.disc().shape == (50,)
    assert np.all(np.abs(grid.disc()) < 1)
    assert np.allclose(np.abs(grid.circle(0.5)), 0.5)
    assert grid.verification_points().shape == (62,)


@pytest.mark.parametrize(
    "kwargs",
    [{"interior": 0}, {"angular": -1}, {"radial": 0}, {"boundary_radius": 1.0}],
)
def test_grid_rejects(kwargs):
    with pytest.raises(ConfigError):
        GridSpec(**kwargs)


def test_grid_seed():
    a = GridSpec(interior=40).disc()
    assert np.array_equal(a, GridSpec(interior=40).disc())
    assert not np.array_equal(a, GridSpec(interior=40, seed=1).disc())


@pytest.mark.parametrize("j", [1, 2])
def test_supnorm_sampling(j, j3_point):
    exact = phi_supnorm(j, j3_point)
    sampled = supnorm_sampling(lambda z: phi(j, z, j3_point))
    assert sampled <= exact + 1e-12
    assert sampled == pytest.approx(exact, rel=1e-3)


def test_supnorm_sampling_vectorized(small_grid):
    value = supnorm_sampling(lambda z: 0.5 * z**3, small_grid, vectorized=True)
    assert value == pytest.approx(0.5)


def test_membership_sampling_agrees(rng, small_grid):
    for n in (2, 3, 4, 5):
        for _ in range(5):
            radii = rng.uniform(0, 0.8, n)
            zs = radii * np.exp(2j * np.pi * rng.uniform(size=n))
            y = symmetrize(zs)
            assert in_gtilde(y).inside
            assert membership_torus_sampling(y, small_grid)


@pytest.mark.parametrize(
    "y",
    [
        PointGn(2, (1.5,), 0),
        PointGn(3, (0, 0), 1.2),
        PointGn(3, (3.5, 0), 0),
        PointGn(2, (0.5,), 1.01),
    ],
)
def test_membership_sampling_outside(y, small_grid):
    assert not in_gtilde(y).inside
    assert not membership_torus_sampling(y, small_grid)


def test_membership_sampling_workers(small_grid, j3_point):
    assert membership_torus_sampling(j3_point, small_grid, workers=2)
    outside = j3_point.scaled(8)
    assert membership_torus_sampling(outside, small_grid, workers=2) is False


def test_dense_op_norm(rng):
    for _ in range(20):
        a = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
        M = Mat2.from_array(a)
        assert dense_op_norm(M) == pytest.approx(op_norm(M), rel=1e-12)
        assert dense_op_norm(a) == pytest.approx(op_norm(M), rel=1e-12)


@pytest.mark.parametrize(
    "B",
    [
        Mat2(0.3, 0.2, 0.1, 0.4),
        Mat2(0.5j, -0.4, 0.3, 0.1),
        Mat2(-0.2, 0.6, 0.6, 0.2 + 0.1j),
    ],
)
def test_mu_grid_matches_bisection(B):
    grid = GridSpec(angular=180, radial=20)
    assert mu_grid(B, grid) == pytest.approx(mu_diag(B).value, abs=1e-6)


def test_mu_grid_random(rng):
    worst = 0.0
    for _ in range(200):
        a = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
        B = Mat2.from_array(a)
        worst = max(worst, abs(mu_grid(B) - mu_diag(B).value))
    assert worst < 1e-4


def test_mu_grid_special_cases(small_grid):
    # triangular: mu is the largest diagonal modulus
    assert mu_grid(Mat2(0.5, 0.3, 0, 0.2), small_grid) == pytest.approx(0.5)
    assert mu_grid(Mat2(0, 1, 0, 0.3), small_grid) == pytest.approx(0.3)
    assert mu_grid(Mat2.zero(), small_grid) == 0.0

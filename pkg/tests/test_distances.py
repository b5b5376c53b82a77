import math

import numpy as np
import pytest

from gtilde._errors import NotInterior, OutsideDisc
from gtilde.distances import (
    ExtremalRotation,
    caratheodory_candidates,
    dist_origin,
    hyperbolic_distance,
)
from gtilde.geometry import PointGn, in_gtilde, pi_hat, schwarz_bound, symmetrize
from gtilde.linalg import Mat2


def test_hyperbolic_distance():
    assert hyperbolic_distance(0, 0) == 0.0
    assert hyperbolic_distance(0, 0.5) == pytest.approx(math.atanh(0.5))
    a, b = 0.3 - 0.2j, -0.5j
    assert hyperbolic_distance(a, b) == pytest.approx(hyperbolic_distance(b, a))

    # invariant under disc automorphisms
    def m(z: complex) -> complex:
        return (0.4j - z) / (1 + 0.4j * z)

    assert hyperbolic_distance(m(a), m(b)) == pytest.approx(hyperbolic_distance(a, b))


@pytest.mark.parametrize("pair", [(1, 0), (0, -1.5j)])
def test_hyperbolic_distance_outside(pair):
    with pytest.raises(OutsideDisc):
        hyperbolic_distance(*pair)


def test_origin():
    report = dist_origin(PointGn.origin(4))
    assert (report.lower, report.upper, report.equal) == (0.0, 0.0, True)


@pytest.mark.parametrize(
    "y",
    [pi_hat(Mat2(0.1, 0.05, 0.05, 0.04), 3), pi_hat(Mat2(0.2, 0.1j, -0.05, 0.1), 5)],
)
def test_jn_distances_agree(y):
    report = dist_origin(y)
    bound, arg = schwarz_bound(y)
    assert report.lower == pytest.approx(math.atanh(bound))
    assert report.argmax_j == arg
    assert report.equal
    assert report.upper == pytest.approx(report.lower, abs=1e-8)
    assert report.target_residual <= 1e-8
    assert report.interpolant is not None
    data = report.to_json()
    assert data["kind"] == "distance"
    assert data["gap"] is None


@pytest.mark.parametrize("p", [0.4, 0.3j, -0.6])
def test_g2_diagonal_target(p):
    y = PointGn(2, (0,), p)
    report = dist_origin(y)
    assert report.lower == pytest.approx(math.atanh(abs(p)))
    assert report.equal
    assert report.upper == pytest.approx(report.lower, abs=1e-8)
    assert report.gap is None
    assert report.construction == "rotation"
    rot = report.interpolant
    assert isinstance(rot, ExtremalRotation)
    assert rot(report.lam0).max_abs_diff(y) < 1e-12
    assert rot(0) == PointGn.origin(2)
    for lam in (0.5, -0.9j, 0.3 + 0.6j):
        assert in_gtilde(rot(lam)).inside
    assert report.to_json()["construction"] == "rotation"


def test_diagonal_target_higher_n():
    report = dist_origin(PointGn(5, (0, 0, 0, 0), 0.25j))
    assert report.equal
    assert report.lam0 == pytest.approx(0.25)
    assert report.target_residual < 1e-12


def test_ordering_gap():
    y = pi_hat(Mat2(0.04, 0.05, 0.05, 0.1), 3)
    assert abs(y.coord(2)) > abs(y.coord(1))
    report = dist_origin(y)
    assert report.lower > 0
    assert report.upper is None
    assert not report.equal
    assert report.gap == "ordering"
    assert report.construction is None


def test_outside_jn():
    y = symmetrize([0.5, -0.3j, 0.2 + 0.1j, 0.4])
    report = dist_origin(y)
    assert report.upper is None
    assert not report.equal
    assert report.gap == "jn"
    assert report.lower > 0


def test_not_interior():
    with pytest.raises(NotInterior):
        dist_origin(PointGn(2, (1.5,), 0))


def test_candidates_below_lower(j3_point):
    cands = caratheodory_candidates(j3_point)
    assert cands.shape == (2, 36)
    lower = dist_origin(j3_point).lower
    assert cands.max() <= lower + 1e-12
    assert cands.max() == pytest.approx(lower, rel=5e-2)
    omegas = np.array([1, -1j])
    assert caratheodory_candidates(j3_point, omegas).shape == (2, 2)


@pytest.mark.slow
def test_jn_sweep(rng):
    from _testutil import random_feasible

    for k in range(50):
        y, _, _ = random_feasible(rng, 2 + k % 4)
        report = dist_origin(y)
        assert report.equal, (y, report)
        assert caratheodory_candidates(y).max() <= report.lower + 1e-12

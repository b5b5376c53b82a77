import numpy as np
import pytest

from gtilde._errors import (
    DuplicateNodes,
    HypothesisViolated,
    NodeNotInBall,
    NotInterior,
    OutsideDisc,
)
from gtilde.geometry import PointGn, pi_hat, pi_map, schwarz_bound, symmetrize
from gtilde.interpolation import build_interpolant_jn
from gtilde.linalg import Mat2
from gtilde.mu import (
    lift_to_mu_ball,
    mu_closure_check,
    mu_diag,
    mu_full,
    mu_membership_check,
    mu_realization,
    mu_realization_jn,
    mu_scalar,
    singularity_residual,
    structured_np_necessary,
)
from gtilde.oracles import GridSpec

B_SMALL = Mat2(0.1, 0.05, 0.05, 0.04)


def test_mu_diag_values():
    assert mu_diag(Mat2.diag(0.5, -0.25)).value == 0.5
    assert mu_diag(Mat2(0, 1, 0, 0)).value == 0.0
    assert mu_diag(Mat2.zero()).value == 0.0
    assert mu_diag(Mat2(0.5, 0.5, 0.5, 0.5)).value == pytest.approx(1, abs=1e-9)


def test_mu_bounds(rng):
    for _ in range(30):
        a = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
        B = Mat2.from_array(a)
        result = mu_diag(B)
        assert mu_scalar(B) <= result.value + 1e-8
        assert result.value <= mu_full(B) + 1e-8
        if result.witness is not None:
            z, w = result.witness
            assert singularity_residual(B, z, w) < 1e-8
            assert max(abs(z), abs(w)) <= 1 / result.value + 1e-6


def test_mu_homogeneous():
    B = Mat2(0.3, 0.2j, -0.1, 0.4)
    assert mu_diag(B * 2).value == pytest.approx(2 * mu_diag(B).value, rel=1e-8)


def test_mu_json():
    data = mu_diag(Mat2(0.3, 0.2, 0.1, 0.4)).to_json()
    assert data["kind"] == "mu"
    assert len(data["witness"]) == 2


@pytest.mark.parametrize(
    "y",
    [
        symmetrize([0.5, -0.3j, 0.2 + 0.1j, 0.4]),
        symmetrize([0.6, 0.1, -0.5, 0.3j, 0.2]),
        pi_hat(B_SMALL, 3),
    ],
)
def test_realization(y):
    matrices = mu_realization(y)
    assert len(matrices) == y.n // 2
    assert pi_map(matrices, y.n).max_abs_diff(y) < 1e-12
    assert all(mu_diag(B).value < 1 for B in matrices)
    assert mu_membership_check(y)
    assert mu_closure_check(y)


def test_realization_outside():
    y = PointGn(2, (1.5,), 0)
    assert not mu_membership_check(y)
    assert not mu_closure_check(y)
    with pytest.raises(NotInterior):
        mu_realization(y)


def test_closure_boundary():
    y = PointGn(2, (1,), 0)
    assert mu_closure_check(y)
    with pytest.raises(NotInterior):
        mu_realization(y)


def test_realization_jn(j3_point):
    B = mu_realization_jn(j3_point)
    assert pi_hat(B, 3).max_abs_diff(j3_point) < 1e-12
    assert mu_diag(B).value < 1
    with pytest.raises(HypothesisViolated):
        mu_realization_jn(symmetrize([0.5, -0.3j, 0.2 + 0.1j, 0.4]))


def test_lift(j3_point, j3_lam0):
    psi = build_interpolant_jn(j3_point, j3_lam0)
    lifted = lift_to_mu_ball(psi, 3, grid=GridSpec(interior=200))
    assert [f.j for f in lifted] == [1]
    for lam in (0, 0.4j, -0.7 + 0.1j, 0.9):
        F = lifted[0](lam)
        assert F.det() == pytest.approx(psi(lam).q, abs=1e-12)
        assert mu_diag(F).value < 1


def test_lift_leaves_domain():
    with pytest.raises(NotInterior) as info:
        lift_to_mu_ball(lambda lam: PointGn(2, (1.5,), 0), 2, grid=GridSpec(10))
    assert "lam" in info.value.context


def test_pick_two_nodes():
    bound, arg = schwarz_bound(pi_hat(B_SMALL, 3))
    report = structured_np_necessary([(0, Mat2.zero()), (0.5, B_SMALL)], 3)
    assert report.schwarz_bound == pytest.approx(bound)
    assert report.argmax_j == arg
    assert report.necessary
    assert report.data[1][1] == pi_hat(B_SMALL, 3)
    assert report.to_json()["kind"] == "pick"

    report = structured_np_necessary([(0, Mat2.zero()), (bound / 2, B_SMALL)], 3)
    assert report.necessary is False


def test_pick_no_verdict():
    nodes = [(0.1, B_SMALL), (0.5, Mat2.diag(0.2, 0.1))]
    report = structured_np_necessary(nodes, 4)
    assert report.necessary is None
    assert report.notes
    nodes = [(0, Mat2.zero()), (0.3, B_SMALL), (-0.5j, Mat2.diag(0.2, 0.1))]
    report = structured_np_necessary(nodes, 4)
    assert report.schwarz_bound is None
    assert len(report.mu_values) == 3


@pytest.mark.parametrize(
    "nodes, exc",
    [
        ([(0, Mat2.zero()), (1, B_SMALL)], OutsideDisc),
        ([(0, Mat2.zero()), (0.5, Mat2.diag(1.2, 0))], NodeNotInBall),
        ([(0.5, Mat2.zero()), (0.5, B_SMALL)], DuplicateNodes),
    ],
)
def test_pick_errors(nodes, exc):
    with pytest.raises(exc):
        structured_np_necessary(nodes, 3)


def test_singularity_residual():
    B = Mat2.diag(0.5, 0.25)
    assert singularity_residual(B, 2, 0) == pytest.approx(0)
    assert singularity_residual(B, 0, 0) == 1
    assert np.isclose(singularity_residual(B, 0, 4), 0)


@pytest.mark.slow
def test_membership_equivalence(rng):
    from gtilde.geometry import binom, in_gtilde

    checked = 0
    while checked < 500:
        n = int(rng.integers(2, 6))
        scale = np.array([binom(n, k) for k in range(1, n)] + [1]) * 1.1
        radii = scale * np.sqrt(rng.uniform(size=n))
        coords = radii * np.exp(2j * np.pi * rng.uniform(size=n))
        y = PointGn.from_coords(list(coords))
        report = in_gtilde(y)
        if abs(report.worst_margin) <= 1e-6:
            continue
        assert mu_membership_check(y) == report.inside, y
        checked += 1

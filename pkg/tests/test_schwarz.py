import numpy as np
import pytest
from _testutil import random_feasible

from gtilde._errors import (
    HypothesisViolated,
    NotInterior,
    NuOutOfRange,
    OutsideDisc,
)
from gtilde.geometry import PointGn, phi_supnorm
from gtilde.linalg import Mat2, k_form, op_norm
from gtilde.schwarz import (
    HYPOTHESES,
    SchwarzInstance,
    blaschke_b,
    build_q0,
    choose_alpha,
    compute_schwarz_data,
    det_one_minus_zstarz,
    failed_hypotheses,
    hypothesis_slacks,
    kappa_closed_form,
    kappa_factors,
    q0_residual,
    r_x_gap,
    r_x_gap_closed_form,
    schwarz_k_matrix,
    z_matrix,
)


@pytest.fixture
def instance(j3_point, j3_lam0) -> SchwarzInstance:
    return SchwarzInstance(j3_lam0, j3_point, 1)


def test_hypotheses_hold(instance):
    slacks = hypothesis_slacks(instance.lam0, instance.y0, 1)
    assert tuple(slacks) == HYPOTHESES
    assert failed_hypotheses(slacks) == []
    assert instance.h0 == pytest.approx(0.0225)
    assert instance.w**2 == pytest.approx(instance.h0 / (9 * instance.lam0))


def test_instance_rejections(j3_point, j3_lam0):
    with pytest.raises(OutsideDisc):
        SchwarzInstance(0, j3_point, 1)
    with pytest.raises(OutsideDisc):
        SchwarzInstance(1.0, j3_point, 1)
    with pytest.raises(IndexError):
        SchwarzInstance(j3_lam0, j3_point, 3)
    with pytest.raises(NotInterior):
        SchwarzInstance(0.5, PointGn(2, (2.0,), 0), 1)

    with pytest.raises(HypothesisViolated) as info:
        SchwarzInstance(0.5 * phi_supnorm(1, j3_point), j3_point, 1)
    assert info.value.context["hypothesis"] == "schwarz"
    assert info.value.context["slack"] < 0

    swapped = PointGn(3, (0.12, 0.3), 0.0015)
    with pytest.raises(HypothesisViolated) as info:
        SchwarzInstance(0.9, swapped, 1)
    assert info.value.context["hypothesis"] == "ordering"

    degenerate = PointGn(3, (0.3, 0.12), 0.3 * 0.12 / 9)
    with pytest.raises(HypothesisViolated) as info:
        SchwarzInstance(0.9, degenerate, 1)
    assert info.value.context["hypothesis"] == "nondegenerate"


def test_z_matrix_determinant(instance):
    for nu in (0.5, 1.0, 3.0):
        Z = z_matrix(instance, nu)
        assert Z.det() == pytest.approx(instance.q / instance.lam0)
        direct = (Mat2.identity() - Z.H @ Z).det().real
        assert det_one_minus_zstarz(instance, nu) == pytest.approx(direct, abs=1e-12)
    with pytest.raises(NuOutOfRange):
        z_matrix(instance, 0)


def test_contraction_window(feasible_instances):
    for inst in feasible_instances:
        data = compute_schwarz_data(inst)
        assert 0 < data.theta < 1 < data.vartheta
        assert data.theta * data.vartheta == pytest.approx(1.0)
        assert data.default_nu() == 1.0 and data.contains(1.0)
        for nu2 in np.geomspace(data.theta / 2, 2 * data.vartheta, 100):
            if min(abs(nu2 - data.theta), abs(nu2 - data.vartheta)) < 1e-9 * nu2:
                continue
            nu = float(np.sqrt(nu2))
            inside = op_norm(z_matrix(inst, nu)) < 1
            assert inside == data.contains(nu)


def test_middle_pair(rng):
    for n in (4, 6):
        y, lam0, j = random_feasible(rng, n, j=n // 2)
        inst = SchwarzInstance(lam0, y, j)
        assert inst.yj == inst.ynj
        data = compute_schwarz_data(inst)
        assert data.x_j == pytest.approx(data.x_nj)
        nu = data.default_nu()
        assert op_norm(z_matrix(inst, nu)) < 1
        alpha = choose_alpha(inst, nu, data)
        q0 = build_q0(inst, nu, alpha)
        assert q0_residual(inst, nu, alpha, q0) < 1e-10


def test_kappa_closed_form_matches_direct(feasible_instances):
    for inst in feasible_instances:
        data = compute_schwarz_data(inst)
        for nu2 in np.geomspace(data.theta, data.vartheta, 7)[1:-1]:
            nu = float(np.sqrt(nu2))
            dk, det = kappa_closed_form(inst, nu, data)
            direct = schwarz_k_matrix(inst, nu, data) * det_one_minus_zstarz(
                inst, nu
            )
            scale = max(1.0, max(abs(x) for x in direct.entries()))
            assert dk.max_abs_diff(direct) < 1e-9 * scale
            assert det < 0
            assert dk.det().real == pytest.approx(det, rel=1e-7, abs=1e-12)


def test_kappa_normalization(instance):
    nu = compute_schwarz_data(instance).default_nu()
    norm = kappa_factors(instance, nu).determinant()
    raw = kappa_factors(instance, nu, normalized=False).determinant()
    assert raw == pytest.approx(instance.c**4 * norm)


def test_r_x_gap(feasible_instances):
    for inst in feasible_instances:
        gap = r_x_gap(inst)
        assert gap > 0
        assert gap == pytest.approx(r_x_gap_closed_form(inst), rel=1e-8)


def test_window_membership(instance):
    data = compute_schwarz_data(instance)
    assert data.default_nu() == 1.0
    data.require(1.0)
    with pytest.raises(NuOutOfRange):
        data.require(np.sqrt(data.vartheta) * 1.01)
    with pytest.raises(NuOutOfRange):
        kappa_closed_form(instance, np.sqrt(data.theta) / 2)


def test_alpha_and_q0(feasible_instances):
    for inst in feasible_instances:
        data = compute_schwarz_data(inst)
        nu = data.default_nu()
        alpha = choose_alpha(inst, nu, data)
        assert alpha.norm() == pytest.approx(1.0)
        K = schwarz_k_matrix(inst, nu, data)
        assert k_form(K, alpha) <= 1e-12
        q0 = build_q0(inst, nu, alpha)
        assert op_norm(q0) <= 1 + 1e-9
        assert q0_residual(inst, nu, alpha, q0) < 1e-10


def test_blaschke_factor():
    lam0 = 0.3 + 0.2j
    assert blaschke_b(lam0, 0) == pytest.approx(lam0)
    assert blaschke_b(lam0, lam0) == 0
    circle = np.exp(1j * np.linspace(0, 2 * np.pi, 64))
    np.testing.assert_allclose(np.abs(blaschke_b(lam0, circle)), 1.0)

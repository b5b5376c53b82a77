import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from gtilde._errors import (
    DeterminantMismatch,
    DimensionTooSmall,
    LengthMismatch,
    ParseError,
    PoleHit,
    PoleOnDisc,
    QOnBoundary,
)
from gtilde.geometry import (
    PointGn,
    beta_coeffs,
    gtilde_margin_batch,
    in_gamma_tilde,
    in_gtilde,
    in_jn,
    jn_embed,
    pair_indices,
    phi,
    phi_circle_image,
    phi_supnorm,
    pi_hat,
    pi_map,
    satisfies_jn_relations,
    schwarz_bound,
    schwarz_necessary,
    symmetrize,
)
from gtilde.linalg import Mat2

disc_points = st.builds(
    lambda r, t: r * np.exp(1j * t),
    st.floats(0, 0.95),
    st.floats(0, 2 * np.pi),
)


def test_point_validation():
    with pytest.raises(DimensionTooSmall):
        PointGn(1, ())
    with pytest.raises(LengthMismatch):
        PointGn(3, (0.1,), 0)
    with pytest.raises(TypeError):
        PointGn(2.0, (0.1,), 0)
    p = PointGn(3, (0.3, 0.12), 0.0015)
    assert p.coords() == (0.3, 0.12, 0.0015)
    assert p.coord(3) == 0.0015
    with pytest.raises(IndexError):
        p.coord(4)
    assert PointGn.from_coords(p.coords()) == p
    assert list(pair_indices(5)) == [1, 2]


def test_point_json():
    p = PointGn(3, (0.3 + 0.1j, 0.12), -0.0015j)
    assert PointGn.from_json(p.to_json()) == p
    with pytest.raises(ParseError):
        PointGn.from_json({"n": 3, "y": [[0, 0]], "q": [0, 0]})
    with pytest.raises(ParseError):
        PointGn.from_json({"n": "3", "y": [], "q": [0, 0]})


def test_beta_and_membership():
    p = PointGn(2, (1.0,), 0.25)
    assert beta_coeffs(p) == [0.8 + 0j]
    report = in_gtilde(p)
    assert report.inside
    assert report.margins[0] == pytest.approx(0.4)
    assert report.worst_margin == pytest.approx(0.4)

    assert in_gtilde(PointGn.origin(6)).inside
    outside = in_gtilde(PointGn(2, (2.0,), 0))
    assert not outside.inside
    assert outside.margins[0] == pytest.approx(-2.0)


def test_q_on_boundary():
    p = PointGn(2, (0,), 1.0)
    report = in_gtilde(p)
    assert not report.inside
    assert report.margins == ()
    with pytest.raises(QOnBoundary):
        beta_coeffs(p)


@given(st.lists(disc_points, min_size=2, max_size=6))
def test_symmetrized_polydisc_is_inside(zs):
    assert in_gtilde(symmetrize(zs)).inside


def test_symmetrize():
    assert symmetrize([0.5, 0.5]) == PointGn(2, (1.0,), 0.25)


def test_margin_batch_matches_scalar(rng):
    n = 4
    coords = 0.8 * (rng.normal(size=(50, n)) + 1j * rng.normal(size=(50, n)))
    coords[:, -1] *= 0.5
    batch = gtilde_margin_batch(n, coords)
    for row, value in zip(coords, batch):
        report = in_gtilde(PointGn.from_coords(list(row)))
        if report.margins:
            assert value == pytest.approx(report.worst_margin, abs=1e-12)
        assert (value > 0) == report.inside


def test_closure_membership():
    # s = 1, p = 0 is the image of (1, 0): on the boundary
    edge = PointGn(2, (1.0,), 0)
    assert in_gamma_tilde(edge)
    assert not in_gtilde(edge).inside
    assert not in_gamma_tilde(PointGn(2, (2.0,), 0))
    assert in_gamma_tilde(PointGn(3, (0.3, 0.12), 0.0015))


def test_jn_embedding_and_relations():
    p = jn_embed(0.4, 0.2, 0.1, 4)
    assert p.y[1] == pytest.approx(0.45)
    assert satisfies_jn_relations(p)
    assert in_jn(p)
    assert not satisfies_jn_relations(PointGn(4, (0.4, 0.1, 0.2), 0.1))
    with pytest.raises(DimensionTooSmall):
        jn_embed(0.1, 0.1, 0, 2)


def test_pi_hat_lands_in_jn():
    B = Mat2(0.1, 0.05, 0.05, 0.04)
    assert pi_hat(B, 3).max_abs_diff(PointGn(3, (0.3, 0.12), 0.0015)) < 1e-15
    for n in range(3, 9):
        y = pi_hat(B, n)
        assert satisfies_jn_relations(y)
        assert in_jn(y)


def test_pi_map_checks():
    A, B = Mat2(0.1, 0, 0, 0.2), Mat2(0.4, 0.1, 0, 0.05)
    with pytest.raises(LengthMismatch):
        pi_map([A], 4)
    with pytest.raises(DeterminantMismatch):
        pi_map([A, Mat2(0.1, 0, 0, 0.3)], 4)
    y = pi_map([A, B], 4)
    assert y.q == pytest.approx(0.02)
    assert y.coord(2) == pytest.approx(6 * (0.4 + 0.05) / 2)


def test_phi_values():
    assert phi(1, 1, PointGn(3, (0, 0), 0.5)) == -0.5
    with pytest.raises(PoleHit):
        phi(1, 1, PointGn(3, (0, 3.0), 0))
    with pytest.raises(IndexError):
        phi(3, 0, PointGn(3, (0, 0), 0))


def test_phi_supnorm_closed_form(j3_point):
    thetas = np.linspace(0, 2 * np.pi, 4096, endpoint=False)
    for j in (1, 2):
        sampled = max(abs(phi(j, np.exp(1j * t), j3_point)) for t in thetas)
        exact = phi_supnorm(j, j3_point)
        assert sampled <= exact + 1e-12
        assert exact - sampled < 1e-5
        circle = phi_circle_image(j, j3_point)
        assert abs(circle.center) + circle.radius == pytest.approx(exact)


def test_phi_supnorm_pole():
    with pytest.raises(PoleOnDisc):
        phi_supnorm(1, PointGn(3, (0, 3.0), 0))


def test_schwarz_bound(j3_point):
    bound, arg = schwarz_bound(j3_point)
    assert arg == 1
    assert bound == pytest.approx(0.92196 / 8.9856)
    assert schwarz_necessary(j3_point, 0.2)
    assert not schwarz_necessary(j3_point, 0.1)
    assert schwarz_bound(PointGn.origin(4)) == (0.0, 1)

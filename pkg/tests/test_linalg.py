import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from gtilde._errors import NotContraction, NotHermitian, OutsideDisc, ZeroAlpha
from gtilde.linalg import (
    Mat2,
    Vec2,
    condition_number,
    hermitian_min_eig,
    hermitian_power,
    k_form,
    k_matrix,
    mobius,
    mobius_batch,
    op_norm,
    op_norm_batch,
    require_contraction,
    singular_values,
    spectral_radius,
    uv_vectors,
)

entries = st.complex_numbers(max_magnitude=2.0, allow_nan=False, allow_infinity=False)
matrices = st.builds(Mat2, entries, entries, entries, entries)


def _contraction(rng: np.random.Generator, norm: float = 0.7) -> Mat2:
    a = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    return Mat2.from_array(norm * a / np.linalg.norm(a, 2))


@given(matrices)
def test_op_norm_matches_svd(M):
    expected = np.linalg.norm(M.to_array(), 2)
    assert op_norm(M) == pytest.approx(expected, rel=1e-9, abs=1e-12)


@given(matrices)
def test_singular_values(M):
    s = np.linalg.svd(M.to_array(), compute_uv=False)
    got = singular_values(M)
    assert got[0] == pytest.approx(s[0], rel=1e-9, abs=1e-12)
    assert got[1] == pytest.approx(s[1], rel=1e-7, abs=1e-9)


def test_mat2_algebra():
    A = Mat2(1, 2j, -1, 0.5)
    B = Mat2.diag(2, -1)
    np.testing.assert_allclose((A @ B).to_array(), A.to_array() @ B.to_array())
    assert (A @ A.inv()).allclose(Mat2.identity())
    assert A.H.H == A
    assert (A.adj() @ A).allclose(Mat2.identity() * A.det())
    assert (A @ Vec2(1, 1)) == Vec2(1 + 2j, -0.5)
    assert Mat2.outer(Vec2(1, 0), Vec2(0, 1j)) == Mat2(0, -1j, 0, 0)
    assert Mat2.from_columns(Vec2(1, 2), Vec2(3, 4)) == Mat2(1, 3, 2, 4)
    assert condition_number(Mat2(1, 0, 0, 0)) == math.inf
    assert spectral_radius(Mat2(0, 1, 0, 0)) == 0


def test_mat2_json():
    A = Mat2(1, 2j, -1, 0.5)
    assert Mat2.from_json(A.to_json()) == A
    assert Mat2.from_json([[[1, 0], [0, 0]], [[0, 0], [1, 0]]]) == Mat2.identity()


def test_hermitian_helpers():
    H = Mat2(2, 1j, -1j, 2)
    lam, v = hermitian_min_eig(H)
    assert lam == pytest.approx(1.0)
    assert (H @ v - v * lam).norm() < 1e-12
    assert v.c1.imag == 0 and v.c1.real > 0
    root = hermitian_power(H, 0.5)
    assert (root @ root).allclose(H, atol=1e-12)
    with pytest.raises(NotHermitian):
        hermitian_min_eig(Mat2(1, 1, 0, 1))


def test_require_contraction():
    assert require_contraction(Mat2.diag(0.5, 0.1)) == pytest.approx(0.5)
    with pytest.raises(NotContraction):
        require_contraction(Mat2.identity())


def test_mobius_sends_z_to_zero_and_is_an_automorphism(rng):
    Z = _contraction(rng)
    assert mobius(Z, Z).allclose(Mat2.zero(), atol=1e-12)
    for _ in range(20):
        X = _contraction(rng, norm=rng.uniform(0, 0.99))
        assert op_norm(mobius(Z, X)) < 1
    # the boundary is preserved
    U = Mat2.diag(1j, -1)
    assert op_norm(mobius(Z, U)) == pytest.approx(1.0)


def test_mobius_inverse(rng):
    Z = _contraction(rng)
    X = _contraction(rng, norm=0.4)
    # M_{-Z} inverts M_Z
    assert mobius(-Z, mobius(Z, X)).allclose(X, atol=1e-10)


def test_mobius_batch_matches_scalar(rng):
    Z = _contraction(rng)
    stack = np.stack([_contraction(rng, 0.5).to_array() for _ in range(8)])
    out = mobius_batch(Z, stack)
    for k in range(8):
        expected = mobius(Z, Mat2.from_array(stack[k])).to_array()
        np.testing.assert_allclose(out[k], expected, atol=1e-12)
    np.testing.assert_allclose(
        op_norm_batch(stack), [np.linalg.norm(s, 2) for s in stack], rtol=1e-12
    )


def test_uv_vectors_characterize_vanishing_corner(rng):
    Z = _contraction(rng)
    alpha = Vec2(0.6, 0.8j)
    u, v = uv_vectors(Z, alpha)
    # any X with X* u = v has [M_{-Z}(X)]_22 = 0
    X = Mat2.outer(u, v) / u.norm2()
    assert (X.H @ u - v).norm() < 1e-12
    if op_norm(X) < 1:
        assert abs(mobius(-Z, X).a22) < 1e-10
    with pytest.raises(ZeroAlpha):
        uv_vectors(Z, Vec2())


def test_k_form_identity(rng):
    for _ in range(25):
        Z = _contraction(rng, norm=rng.uniform(0.05, 0.95))
        rho = rng.uniform(0, 0.99)
        alpha = Vec2(*(rng.normal(size=2) + 1j * rng.normal(size=2)))
        u, v = uv_vectors(Z, alpha)
        K = k_matrix(Z, rho)
        assert K.is_hermitian()
        expected = v.norm2() - rho**2 * u.norm2()
        assert k_form(K, alpha) == pytest.approx(expected, rel=1e-9, abs=1e-11)


def test_k_matrix_domain():
    with pytest.raises(OutsideDisc):
        k_matrix(Mat2.zero(), 1.0)
    with pytest.raises(NotContraction):
        k_matrix(Mat2.identity(), 0.5)

"""Matricial Möbius transforms of the 2x2 unit ball and their test matrices."""

from __future__ import annotations

from typing import TYPE_CHECKING

import numpy as np

from gtilde._errors import NotContraction, OutsideDisc, SingularResolvent, ZeroAlpha
from gtilde.utils import resolve

from ._mat2 import Mat2, Vec2, condition_number, hermitian_power, op_norm

if TYPE_CHECKING:
    from gtilde.utils import Tolerances

_I = Mat2.identity()


def require_contraction(Z: Mat2, name: str = "Z") -> float:
    """Return ``op_norm(Z)``, raising NotContraction unless it is below one."""
    norm = op_norm(Z)
    if not norm < 1:
        raise NotContraction(
            f"{name} must be a strict contraction, got ||{name}|| = {norm!r}",
            norm=norm,
        )
    return norm


def defect_roots(Z: Mat2, tol: Tolerances | None = None) -> tuple[Mat2, Mat2, Mat2]:
    """``((1-ZZ*)^(-1/2), (1-Z*Z)^(1/2), (1-Z*Z)^(-1/2))`` by spectral calculus."""
    zzs = _I - Z @ Z.H
    zsz = _I - Z.H @ Z
    return (
        hermitian_power(zzs, -0.5, tol),
        hermitian_power(zsz, 0.5, tol),
        hermitian_power(zsz, -0.5, tol),
    )


def mobius(Z: Mat2, X: Mat2, tol: Tolerances | None = None) -> Mat2:
    """The unit ball automorphism ``M_Z`` sending ``Z`` to zero.

    ``M_Z(X) = (1-ZZ*)^(-1/2) (X-Z) (1-Z*X)^(-1) (1-Z*Z)^(1/2)``.

    Parameters
    ----------
    Z : Mat2
        A strict contraction; ``M_Z`` sends `Z` to the zero matrix.
    X : Mat2
        A contraction.
    tol : Tolerances, optional
        Thresholds for the contraction and singularity checks.

    Raises
    ------
    NotContraction
        If ``||Z|| >= 1`` or ``||X|| > 1``.
    SingularResolvent
        If ``1 - Z*X`` is numerically singular.

    Examples
    --------
    >>> Z = Mat2(0.1, 0.2j, 0, -0.3)
    >>> mobius(Z, Z).allclose(Mat2.zero())
    True
    """
    tol = resolve(tol)
    require_contraction(Z)
    xnorm = op_norm(X)
    if xnorm > 1 + tol.schur_slack:
        raise NotContraction(
            f"X must be a contraction, got ||X|| = {xnorm!r}", norm=xnorm
        )
    resolvent = _I - Z.H @ X
    cond = condition_number(resolvent)
    if not cond < tol.singular_cond:
        raise SingularResolvent(
            f"1 - Z*X is numerically singular (condition number {cond:.3g})",
            cond=cond,
        )
    left, right, _ = defect_roots(Z, tol)
    return left @ (X - Z) @ resolvent.inv(tol) @ right


def uv_vectors(
    Z: Mat2, alpha: Vec2, tol: Tolerances | None = None
) -> tuple[Vec2, Vec2]:
    """The pair ``u_Z(alpha)``, ``v_Z(alpha)``.

    ``u = (1-ZZ*)^(-1/2)(alpha_1 Z e1 + alpha_2 e2)`` and
    ``v = -(1-Z*Z)^(-1/2)(alpha_1 e1 + alpha_2 Z* e2)``.

    For any contraction ``X``, ``[M_{-Z}(X)]_22 = 0`` exactly when
    ``X* u = v`` for some nonzero alpha.

    Raises
    ------
    ZeroAlpha
        If ``alpha == 0``.
    NotContraction
        If ``||Z|| >= 1``.
    """
    if alpha.is_zero():
        raise ZeroAlpha("alpha must be nonzero")
    require_contraction(Z)
    left, _, right_inv = defect_roots(Z, tol)
    a1, a2 = alpha
    u = left @ (Z.col(1) * a1 + Vec2(0, a2))
    v = -(right_inv @ (Vec2(a1, 0) + Z.H.col(2) * a2))
    return u, v


def k_matrix(Z: Mat2, rho: float) -> Mat2:
    """The test matrix ``K_Z(rho)``.

    Entries are ``[(1 - rho^2 Z*Z)(1-Z*Z)^-1]_11``,
    ``(1-rho^2)[(1-ZZ*)^-1 Z]_21``, ``(1-rho^2)[Z*(1-ZZ*)^-1]_12`` and
    ``[(ZZ* - rho^2)(1-ZZ*)^-1]_22``.  The result is Hermitian, and
    :func:`k_form` of it is ``||v_Z(a)||^2 - rho^2 ||u_Z(a)||^2``.

    Raises
    ------
    NotContraction
        If ``||Z|| >= 1``.
    OutsideDisc
        Unless ``0 <= rho < 1``.
    """
    require_contraction(Z)
    if not 0 <= rho < 1:
        raise OutsideDisc(f"rho must satisfy 0 <= rho < 1, got {rho!r}", rho=rho)
    r2 = rho * rho
    zsz, zzs = Z.H @ Z, Z @ Z.H
    a_inv = (_I - zsz).inv()
    b_inv = (_I - zzs).inv()
    k11 = ((_I - zsz * r2) @ a_inv).a11
    k12 = (1 - r2) * (b_inv @ Z).a21
    k21 = (1 - r2) * (Z.H @ b_inv).a12
    k22 = ((zzs - _I * r2) @ b_inv).a22
    return Mat2(k11.real, k12, k21, k22.real)


def k_form(K: Mat2, alpha: Vec2) -> float:
    """The quadratic form ``alpha^T K conj(alpha)``.

    For ``K = k_matrix(Z, rho)`` this equals
    ``||v_Z(alpha)||^2 - rho^2 ||u_Z(alpha)||^2``.
    """
    a1, a2 = alpha
    value = (
        K.a11 * abs(a1) ** 2
        + K.a12 * a1 * a2.conjugate()
        + K.a21 * a2 * a1.conjugate()
        + K.a22 * abs(a2) ** 2
    )
    return float(value.real)


# ---------------------------------------------------------------- batches


def op_norm_batch(A: np.ndarray) -> np.ndarray:
    """Operator norms of a stack of 2x2 matrices, shape ``(N, 2, 2)``."""
    r1 = np.abs(A[:, 0, 0]) ** 2 + np.abs(A[:, 0, 1]) ** 2
    r2 = np.abs(A[:, 1, 0]) ** 2 + np.abs(A[:, 1, 1]) ** 2
    c = A[:, 0, 0] * A[:, 1, 0].conj() + A[:, 0, 1] * A[:, 1, 1].conj()
    gap = np.hypot(r1 - r2, 2 * np.abs(c))
    return np.sqrt((r1 + r2 + gap) / 2)


def mobius_batch(
    Z: Mat2, X: np.ndarray, tol: Tolerances | None = None
) -> np.ndarray:
    """:func:`mobius` applied to a stack of matrices ``X`` of shape ``(N, 2, 2)``."""
    tol = resolve(tol)
    require_contraction(Z)
    if X.size and float(op_norm_batch(X).max()) > 1 + tol.schur_slack:
        raise NotContraction("X must be a contraction at every sample")
    left, right, _ = (m.to_array() for m in defect_roots(Z, tol))
    z = Z.to_array()
    resolvent = np.eye(2) - z.conj().T @ X
    det = np.linalg.det(resolvent)
    if X.size and float(np.abs(det).min()) == 0:
        raise SingularResolvent("1 - Z*X is singular at some sample")
    adj = np.empty_like(resolvent)
    adj[:, 0, 0] = resolvent[:, 1, 1]
    adj[:, 1, 1] = resolvent[:, 0, 0]
    adj[:, 0, 1] = -resolvent[:, 0, 1]
    adj[:, 1, 0] = -resolvent[:, 1, 0]
    inv = adj / det[:, None, None]
    return left @ (X - z) @ inv @ right

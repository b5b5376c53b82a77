"""Selection of the Schur parameters: alpha, ``Q(0)`` and the Blaschke factor."""

from __future__ import annotations

import logging
from typing import TYPE_CHECKING, TypeVar

import numpy as np

from gtilde._errors import QNotContractive, ZeroU
from gtilde.linalg import Mat2, Vec2, hermitian_min_eig, k_form, k_matrix, op_norm
from gtilde.linalg import uv_vectors as _uv_vectors
from gtilde.utils import resolve

from ._instance import SchwarzData, SchwarzInstance, compute_schwarz_data
from ._matrices import z_matrix

if TYPE_CHECKING:
    from gtilde.utils import Tolerances

logger = logging.getLogger(__name__)

_Lam = TypeVar("_Lam", complex, np.ndarray)


def blaschke_b(lam0: complex, lam: _Lam) -> _Lam:
    """``B(lam) = (lam0 - lam) / (1 - conj(lam0) lam)``; accepts arrays.

    ``B(0) = lam0``, ``B(lam0) = 0`` and ``|B| = 1`` on the unit circle.

    Examples
    --------
    >>> blaschke_b(0.5, 0.5)
    0j
    """
    b = complex(lam0)
    return (b - lam) / (1 - b.conjugate() * lam)


def schwarz_k_matrix(
    inst: SchwarzInstance, nu: float, data: SchwarzData | None = None
) -> Mat2:
    """``K_Z(|lam0|)`` for ``Z = z_matrix(inst, nu)``, checking the window."""
    data = compute_schwarz_data(inst) if data is None else data
    data.require(nu)
    return k_matrix(z_matrix(inst, nu), inst.rho)


def nonpositive_direction(K: Mat2, tol: Tolerances | None = None) -> Vec2:
    """Conjugated unit eigenvector of the smallest eigenvalue of Hermitian ``K``.

    Examples
    --------
    >>> abs(nonpositive_direction(Mat2.diag(1, -2)).c2)
    1.0
    """
    eig, vec = hermitian_min_eig(K, tol)
    alpha = vec.conj()
    logger.debug("alpha=%r with smallest eigenvalue %g", alpha, eig)
    return alpha


def choose_alpha(
    inst: SchwarzInstance,
    nu: float,
    data: SchwarzData | None = None,
    tol: Tolerances | None = None,
) -> Vec2:
    """A unit vector with ``k_form(K, alpha) <= 0``.

    ``alpha`` is the conjugate of the eigenvector of the smallest eigenvalue
    of ``K = K_Z(|lam0|)``, so ``k_form(K, alpha)`` equals that eigenvalue,
    which is negative throughout the window because ``det K < 0``.

    Raises
    ------
    NuOutOfRange
        Unless ``theta < nu^2 < vartheta``.
    """
    return nonpositive_direction(schwarz_k_matrix(inst, nu, data), tol)


def build_q0(
    inst: SchwarzInstance,
    nu: float,
    alpha: Vec2,
    tol: Tolerances | None = None,
) -> Mat2:
    """The rank one Schur parameter ``Q0 = u v* / (lam0 ||u||^2)``.

    It solves ``Q0* conj(lam0) u = v`` with ``u, v = uv_vectors(Z, alpha)``,
    and ``||Q0|| = ||v|| / (|lam0| ||u||) <= 1`` exactly when
    ``k_form(K, alpha) <= 0``.

    Raises
    ------
    ZeroU
        If ``u`` vanishes.
    QNotContractive
        If ``||Q0|| > 1`` beyond ``tol.schur_slack``.
    """
    tol = resolve(tol)
    Z = z_matrix(inst, nu)
    u, v = _uv_vectors(Z, alpha, tol)
    norm_u2 = u.norm2()
    if norm_u2 == 0:
        raise ZeroU("u_Z(alpha) vanishes; no Q(0) solves the constraint")
    q0 = Mat2.outer(u, v) / (inst.lam0 * norm_u2)
    norm = op_norm(q0)
    if norm > 1 + tol.schur_slack:
        K = k_matrix(Z, inst.rho)
        raise QNotContractive(
            f"||Q(0)|| = {norm!r} exceeds one",
            norm=norm,
            k_form=k_form(K, alpha),
        )
    return q0


def q0_residual(inst: SchwarzInstance, nu: float, alpha: Vec2, q0: Mat2) -> float:
    """``||Q0* conj(lam0) u - v||`` for the constraint vectors of ``alpha``."""
    u, v = _uv_vectors(z_matrix(inst, nu), alpha)
    return (q0.H @ u * inst.lam0.conjugate() - v).norm()

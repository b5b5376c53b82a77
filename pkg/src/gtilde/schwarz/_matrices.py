from __future__ import annotations

from typing import NamedTuple

from gtilde._errors import NuOutOfRange
from gtilde.linalg import Mat2

from ._instance import SchwarzData, SchwarzInstance, compute_schwarz_data


def _check_nu(nu: float) -> None:
    if not nu > 0:
        raise NuOutOfRange(f"nu must be positive, got {nu!r}", nu=nu)


def z_matrix(inst: SchwarzInstance, nu: float) -> Mat2:
    """``[[y_j / (C lam0), nu w], [w / nu, y_{n-j} / C]]``.

    Its determinant is ``q / lam0`` for every ``nu``.
    """
    _check_nu(nu)
    c, w = inst.c, inst.w
    return Mat2(inst.yj / (c * inst.lam0), nu * w, w / nu, inst.ynj / c)


def det_one_minus_zstarz(inst: SchwarzInstance, nu: float) -> float:
    """``det(1 - Z*Z)`` for ``Z = z_matrix(inst, nu)``, in closed form."""
    _check_nu(nu)
    c2, rho = inst.c**2, inst.rho
    p = abs(inst.yj) ** 2 / c2
    qd = abs(inst.ynj) ** 2 / c2
    m = abs(inst.q) ** 2
    s = abs(inst.h0) / c2
    return 1 - p / rho**2 - qd + m / rho**2 - (s / rho) * (nu**2 + 1 / nu**2)


class KappaFactors(NamedTuple):
    """``l`` and ``k_j >= k_{n-j}`` with ``det = -(l - k_j)(l - k_{n-j})``."""

    l: float  # noqa: E741
    k_j: float
    k_nj: float

    def determinant(self) -> float:
        return -(self.l - self.k_j) * (self.l - self.k_nj)


def kappa_factors(
    inst: SchwarzInstance,
    nu: float,
    data: SchwarzData | None = None,
    *,
    normalized: bool = True,
) -> KappaFactors:
    """Scalars ``l = s (nu^2 + 1/nu^2)``, ``k_j = s X_j`` and ``k_{n-j} = s X_{n-j}``.

    With ``normalized=True`` (default) ``s = |h0| / C^2`` and the product
    gives ``det(K det(1 - Z*Z))``; with ``normalized=False`` ``s = |h0|`` and
    the product is ``C^4`` times larger.
    """
    _check_nu(nu)
    data = compute_schwarz_data(inst) if data is None else data
    s = abs(inst.h0) if not normalized else abs(inst.h0) / inst.c**2
    return KappaFactors(s * (nu**2 + 1 / nu**2), s * data.x_j, s * data.x_nj)


def kappa_closed_form(
    inst: SchwarzInstance, nu: float, data: SchwarzData | None = None
) -> tuple[Mat2, float]:
    """``K_Z(|lam0|) det(1 - Z*Z)`` in closed form, and its determinant.

    Entries, with ``rho = |lam0|``, ``s = |h0| / C^2``, ``P = |y_j|^2 / C^2``,
    ``Q = |y_{n-j}|^2 / C^2`` and ``m = |q|^2``::

        (1,1)  1 - P - Q + m - s (rho / nu^2 + nu^2 / rho)
        (1,2)  (1 - rho^2) (w / nu + (q / lam0) nu conj(w))
        (2,1)  conj of (1,2)
        (2,2)  -rho^2 + P + Q - m / rho^2 + s (rho nu^2 + 1 / (rho nu^2))

    The determinant is returned as ``-(l - k_j)(l - k_{n-j})``, which is
    negative throughout the window.

    Raises
    ------
    NuOutOfRange
        Unless ``theta < nu^2 < vartheta``.
    """
    data = compute_schwarz_data(inst) if data is None else data
    data.require(nu)
    c2, rho, w = inst.c**2, inst.rho, inst.w
    p = abs(inst.yj) ** 2 / c2
    qd = abs(inst.ynj) ** 2 / c2
    m = abs(inst.q) ** 2
    s = abs(inst.h0) / c2
    n2 = nu * nu
    k11 = 1 - p - qd + m - s * (rho / n2 + n2 / rho)
    k12 = (1 - rho**2) * (w / nu + (inst.q / inst.lam0) * nu * w.conjugate())
    k22 = -(rho**2) + p + qd - m / rho**2 + s * (rho * n2 + 1 / (rho * n2))
    dk = Mat2(k11, k12, k12.conjugate(), k22)
    return dk, kappa_factors(inst, nu, data).determinant()


def r_x_gap(inst: SchwarzInstance, data: SchwarzData | None = None) -> float:
    """``R_j + 1/R_j - X_{n-j}``, positive on every valid instance."""
    data = compute_schwarz_data(inst) if data is None else data
    return data.r_j + 1 / data.r_j - data.x_nj


def r_x_gap_closed_form(inst: SchwarzInstance) -> float:
    """``C^2 |y_j - conj(y_{n-j}) q|^2 / (rho (C^2 - |y_{n-j}|^2) |h0|)``."""
    c2 = inst.c**2
    num = c2 * abs(inst.yj - inst.ynj.conjugate() * inst.q) ** 2
    return num / (inst.rho * (c2 - abs(inst.ynj) ** 2) * abs(inst.h0))

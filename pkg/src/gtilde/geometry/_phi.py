"""The linear fractional maps ``Phi_j`` and their sup norms over the disc."""

from __future__ import annotations

import math
from typing import TYPE_CHECKING

from gtilde._errors import PoleHit, PoleOnDisc
from gtilde.utils import Circle, bidisc_zero_within, resolve

from ._point import PointGn, binom, pair_indices

if TYPE_CHECKING:
    from gtilde.utils import Tolerances

#: Radii approaching the unit circle used by :func:`in_gamma_tilde`.
GAMMA_RADII = (0.9, 0.99, 0.999, 0.9999)


def _check_index(j: int, y: PointGn) -> None:
    if not 1 <= j <= y.n - 1:
        raise IndexError(f"Index j must be in 1..{y.n - 1}, got {j!r}")


def phi(j: int, z: complex, y: PointGn, tol: Tolerances | None = None) -> complex:
    """``Phi_j(z, y) = (C q z - y_j) / (y_{n-j} z - C)`` with ``C = C(n, j)``.

    Raises
    ------
    PoleHit
        If ``|y_{n-j} z - C| < tol.pole``.

    Examples
    --------
    >>> phi(1, 1, PointGn(3, (0, 0), 0.5))
    (-0.5+0j)
    """
    tol = resolve(tol)
    _check_index(j, y)
    c = binom(y.n, j)
    den = y.coord(y.n - j) * z - c
    if abs(den) < tol.pole:
        raise PoleHit(
            f"Phi_{j} has a pole at z={z!r} (|denominator| = {abs(den):.3g})",
            j=j,
            denominator=abs(den),
        )
    return complex((c * y.q * z - y.coord(j)) / den)


def _pole_guard(j: int, y: PointGn) -> tuple[int, float]:
    c = binom(y.n, j)
    denom = c * c - abs(y.coord(y.n - j)) ** 2
    if not denom > 0:
        raise PoleOnDisc(
            f"Phi_{j} has a pole in the closed disc: "
            f"|y_{y.n - j}| = {abs(y.coord(y.n - j))!r} >= C(n, j) = {c}",
            j=j,
            abs_y=abs(y.coord(y.n - j)),
            binom=c,
        )
    return c, denom


def phi_supnorm(j: int, y: PointGn) -> float:
    """Sup of ``|Phi_j(z, y)|`` over the closed unit disc, in closed form.

    ``(C |y_j - conj(y_{n-j}) q| + |y_j y_{n-j} - C^2 q|) / (C^2 - |y_{n-j}|^2)``.

    Raises
    ------
    PoleOnDisc
        If ``|y_{n-j}| >= C(n, j)``.
    """
    _check_index(j, y)
    c, denom = _pole_guard(j, y)
    yj, ynj, q = y.coord(j), y.coord(y.n - j), y.q
    return (c * abs(yj - ynj.conjugate() * q) + abs(yj * ynj - c * c * q)) / denom


def phi_circle_image(j: int, y: PointGn) -> Circle:
    """Image of the unit circle under ``Phi_j(., y)``.

    For ``w -> (A w + B) / (C w + D)`` the image of ``|w| = 1`` has center
    ``(B conj(D) - A conj(C)) / (|D|^2 - |C|^2)`` and radius
    ``|AD - BC| / ||D|^2 - |C|^2|``; with the pole outside the closed disc
    the sup modulus is ``|center| + radius``.
    """
    _check_index(j, y)
    c, _ = _pole_guard(j, y)
    a, b = c * y.q, -y.coord(j)
    cc, d = y.coord(y.n - j), complex(-c)
    gap = abs(d) ** 2 - abs(cc) ** 2
    center = (b * d.conjugate() - a * cc.conjugate()) / gap
    radius = abs(a * d - b * cc) / abs(gap)
    return Circle(complex(center), float(radius))


def schwarz_bound(y: PointGn) -> tuple[float, int]:
    """``max_j phi_supnorm(j, y)`` over ``j = 1 ... n-1`` and the maximizing ``j``.

    A holomorphic ``psi`` from the disc with ``psi(0) = 0`` and
    ``psi(lambda) = y`` can only exist when ``|lambda|`` reaches this value.
    """
    best, arg = -math.inf, 1
    for j in range(1, y.n):
        value = phi_supnorm(j, y)
        if value > best:
            best, arg = value, j
    return best, arg


def schwarz_necessary(y: PointGn, lam: complex) -> bool:
    """Whether ``|lam| >= schwarz_bound(y)``."""
    return abs(lam) >= schwarz_bound(y)[0]


def in_gamma_tilde(y: PointGn) -> bool:
    """Closure membership by non-vanishing of the pair polynomials.

    The point belongs to the closure when, for every pair ``j``,
    ``C - y_j z - y_{n-j} w + C q z w`` has no zero in the open bidisc.  The
    open bidisc is exhausted by the radii in :data:`GAMMA_RADII`.

    Examples
    --------
    >>> in_gamma_tilde(PointGn.origin(4))
    True
    """
    for j in pair_indices(y.n):
        c = binom(y.n, j)
        a, b = y.coord(j) / c, y.coord(y.n - j) / c
        if any(bidisc_zero_within(a, b, y.q, t) for t in GAMMA_RADII):
            return False
    return True


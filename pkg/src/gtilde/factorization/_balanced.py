"""Balanced inner-outer splitting ``h = f g`` of polynomials vanishing at 0."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import TYPE_CHECKING, Any

import numpy as np

from gtilde._errors import (
    FactorizationFailed,
    PoleOnDisc,
    RootOnOriginMissing,
    ZeroPolynomial,
)
from gtilde.utils import encode_complex, resolve

from ._poly import PolyC, poly_roots

if TYPE_CHECKING:
    from gtilde.utils import Tolerances

logger = logging.getLogger(__name__)

_CHECK_TOL = 1e-8


def blaschke_factor(a: complex, lam: Any) -> Any:
    """``(lam - a) / (1 - conj(a) lam)``, unimodular on the unit circle."""
    a = complex(a)
    return (lam - a) / (1 - a.conjugate() * lam)


def _interior_grid() -> np.ndarray:
    r = np.linspace(0.05, 0.95, 10)
    t = np.linspace(0, 2 * np.pi, 20, endpoint=False)
    return (r[:, None] * np.exp(1j * t[None, :])).ravel()


def _circle_grid(n: int = 360) -> np.ndarray:
    return np.exp(2j * np.pi * np.arange(n) / n)


@dataclass(frozen=True)
class BalancedFactors:
    """Factors with ``f g = h / d^2``, ``|f| = |g|`` on the circle and ``g(0) = 0``.

    ``f = prod b_{a_i} O^(1/2) / d`` and ``g = lam O^(1/2) / d`` where ``a_i``
    are the roots inside the disc other than one root at the origin, ``d``
    the optional divisor, and ``O^(1/2)`` the analytic square root of the
    outer part

        ``sqrt(lead) prod sqrt(-r_k) sqrt(1 - lam / r_k) prod sqrt(1 - conj(a_i) lam)``

    over the outside roots ``r_k``, each factor on its principal branch.
    """

    lead: complex
    inside: tuple[complex, ...]
    outside: tuple[complex, ...]
    divisor: PolyC | None = None

    def outer_sqrt(self, lam: Any) -> Any:
        """The analytic square root of the outer part, divided by ``d``."""
        lam = np.asarray(lam, dtype=complex)
        out = np.full(lam.shape, np.sqrt(complex(self.lead)), dtype=complex)
        for r in self.outside:
            out = out * np.sqrt(-r) * np.sqrt(1 - lam / r)
        for a in self.inside:
            out = out * np.sqrt(1 - np.conj(a) * lam)
        if self.divisor is not None:
            out = out / self.divisor(lam)
        return out if out.ndim else complex(out)

    def inner(self, lam: Any) -> Any:
        lam = np.asarray(lam, dtype=complex)
        out = np.ones(lam.shape, dtype=complex)
        for a in self.inside:
            out = out * blaschke_factor(a, lam)
        return out if out.ndim else complex(out)

    def f(self, lam: Any) -> Any:
        return self.inner(lam) * self.outer_sqrt(lam)

    def g(self, lam: Any) -> Any:
        return lam * self.outer_sqrt(lam)

    def check(self, h: PolyC) -> dict[str, float]:
        """Residuals of the product identity, modulus balance and ``g(0)``.

        Product errors are measured on a 200 point interior grid relative to
        ``max(1, max |h / d^2|)``; modulus errors on 360 circle points
        relative to ``max(1, max |g|)``.
        """
        grid = _interior_grid()
        target = h(grid)
        if self.divisor is not None:
            target = target / self.divisor(grid) ** 2
        product = np.asarray(self.f(grid)) * np.asarray(self.g(grid))
        circle = _circle_grid()
        fc, gc = np.abs(self.f(circle)), np.abs(self.g(circle))
        return {
            "product": float(
                np.max(np.abs(product - target)) / max(1.0, np.max(np.abs(target)))
            ),
            "modulus": float(np.max(np.abs(fc - gc)) / max(1.0, np.max(gc))),
            "g0": abs(self.g(0j)),
        }

    def to_json(self) -> dict[str, Any]:
        return {
            "lead": encode_complex(self.lead),
            "inside": [encode_complex(a) for a in self.inside],
            "outside": [encode_complex(r) for r in self.outside],
            "divisor": None if self.divisor is None else self.divisor.to_json(),
        }


def balanced_factorize(
    h: PolyC,
    divisor: PolyC | None = None,
    tol: Tolerances | None = None,
) -> BalancedFactors:
    """Split ``h / divisor^2`` into ``f g`` with ``|f| = |g|`` on the unit circle.

    Parameters
    ----------
    h : PolyC
        Polynomial with ``h(0) = 0``.
    divisor : PolyC, optional
        Polynomial without zeros on the closed disc.
    tol : Tolerances, optional
        Root classification (``boundary_band``) and trimming thresholds.
        Roots within ``boundary_band`` of the circle count as outside.

    Raises
    ------
    ZeroPolynomial
        If ``h`` vanishes identically.
    RootOnOriginMissing
        If ``h(0) != 0``.
    FactorizationFailed
        If the factors miss the product or balance checks by more than 1e-8.

    Examples
    --------
    >>> fac = balanced_factorize(PolyC([0, 1]))
    >>> fac.f(0.5), fac.g(0.5)
    ((1+0j), (0.5+0j))
    """
    tol = resolve(tol)
    if h.is_zero():
        raise ZeroPolynomial("Cannot factorize the zero polynomial")
    coeffs = h.to_array()
    scale = float(np.max(np.abs(coeffs)))
    if abs(coeffs[0]) > tol.root_trim * scale:
        raise RootOnOriginMissing(
            f"h(0) = {coeffs[0]!r} must vanish", value=abs(coeffs[0])
        )
    if divisor is not None and divisor.degree > 0:
        nearest = min(abs(r) for r in poly_roots(divisor, tol))
        if not nearest > 1:
            raise PoleOnDisc(
                f"Divisor vanishes on the closed disc (root modulus {nearest!r})",
                root_modulus=nearest,
            )
    roots = sorted(poly_roots(h, tol), key=abs)
    # the smallest root is the deflated zero at the origin
    rest = roots[1:]
    inside = tuple(a for a in rest if abs(a) < 1 - tol.boundary_band)
    outside = tuple(r for r in rest if abs(r) >= 1 - tol.boundary_band)
    fac = BalancedFactors(h.lead, inside, outside, divisor)
    residuals = fac.check(h)
    logger.debug("balanced factorization residuals %r", residuals)
    worst = max(residuals.values())
    if not worst <= _CHECK_TOL:
        raise FactorizationFailed(
            f"Balanced factorization misses its checks by {worst:.3g}", **residuals
        )
    return fac

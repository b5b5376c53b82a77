"""Recover the factors ``F_j`` of an interpolant from its coordinates."""

from __future__ import annotations

import cmath
import logging
from collections.abc import Sequence
from dataclasses import dataclass, replace
from typing import TYPE_CHECKING, Any, Union

import numpy as np

from gtilde._errors import (
    DegenerateTarget,
    HypothesisViolated,
    NotInterior,
    NotSchur,
)
from gtilde.factorization import BalancedFactors, PolyC, balanced_factorize
from gtilde.geometry import PointGn, binom, in_gtilde, pair_indices
from gtilde.linalg import Mat2, op_norm_batch
from gtilde.oracles import GridSpec
from gtilde.schwarz import (
    SchwarzInstance,
    compute_schwarz_data,
    failed_hypotheses,
    hypothesis_slacks,
    z_matrix,
)
from gtilde.utils import encode_complex, resolve

from ._interpolant import Interpolant
from ._rational import RationalCoordinates, rational_coordinates

if TYPE_CHECKING:
    from gtilde.utils import Tolerances

logger = logging.getLogger(__name__)

Coordinates = Union[Interpolant, RationalCoordinates, Sequence[PolyC]]


@dataclass(frozen=True)
class CharacterizedFactor:
    """``F_j = [[psi_j / C, u f], [g / u, psi_{n-j} / C]]`` for one pair.

    ``f`` and ``g`` come from the balanced factorization of
    ``psi_j psi_{n-j} / C^2 - psi_n``; the unimodular ``u`` rotates them so
    that ``nu = u f(lam0) / w`` is positive.
    """

    coords: RationalCoordinates
    j: int
    factors: BalancedFactors
    u: complex
    nu: float
    node_value: Mat2
    z_error: float | None
    in_window: bool
    hypotheses_failed: tuple[str, ...]
    max_norm_circle: float
    max_norm_interior: float
    det_residual: float

    @property
    def c(self) -> int:
        return binom(self.coords.n, self.j)

    @property
    def schur_ok(self) -> bool:
        return self.max_norm_circle <= 1 + 1e-9 and self.max_norm_interior < 1

    def batch(self, lams: np.ndarray) -> np.ndarray:
        """``F_j`` at every point of `lams`, shape ``(N, 2, 2)``."""
        lams = np.asarray(lams, dtype=complex).ravel()
        n, c = self.coords.n, self.c
        out = np.empty((lams.size, 2, 2), dtype=complex)
        out[:, 0, 0] = self.coords.coordinate(self.j, lams) / c
        out[:, 0, 1] = self.u * self.factors.f(lams)
        out[:, 1, 0] = self.factors.g(lams) / self.u
        out[:, 1, 1] = self.coords.coordinate(n - self.j, lams) / c
        return out

    def matrix(self, lam: complex) -> Mat2:
        return Mat2.from_array(self.batch(np.array([lam]))[0])

    def to_json(self) -> dict[str, Any]:
        return {
            "j": self.j,
            "factorization": self.factors.to_json(),
            "u": encode_complex(self.u),
            "nu": self.nu,
            "G_lam0": self.node_value.to_json(),
            "z_error": self.z_error,
            "in_window": self.in_window,
            "hypotheses_failed": list(self.hypotheses_failed),
            "max_norm_circle": self.max_norm_circle,
            "max_norm_interior": self.max_norm_interior,
            "det_residual": self.det_residual,
            "schur": self.schur_ok,
        }


@dataclass(frozen=True)
class Characterization:
    """Per-pair factors recovered from ``psi`` together with ``psi(lam0)``."""

    lam0: complex
    target: PointGn
    factors: tuple[CharacterizedFactor, ...]

    @property
    def passed(self) -> bool:
        return all(f.schur_ok and f.in_window for f in self.factors)

    def to_json(self) -> dict[str, Any]:
        return {
            "kind": "characterization",
            "lam0": encode_complex(self.lam0),
            "target": self.target.to_json(),
            "factors": [f.to_json() for f in self.factors],
            "passed": self.passed,
        }


def _as_rational(coords: Coordinates) -> RationalCoordinates:
    if isinstance(coords, Interpolant):
        return rational_coordinates(coords)
    if isinstance(coords, RationalCoordinates):
        return coords
    return RationalCoordinates(tuple(coords), PolyC([1]))


def _node_data(
    lam0: complex, y0: PointGn, j: int, nu: float, tol: Tolerances
) -> tuple[Mat2 | None, bool, tuple[str, ...]]:
    """Expected ``Z_{nu,j}``, window membership and the failed hypotheses."""
    failed = failed_hypotheses(hypothesis_slacks(lam0, y0, j, tol), tol)
    if failed:
        return None, False, tuple(failed)
    inst = SchwarzInstance(lam0, y0, j)
    try:
        data = compute_schwarz_data(inst)
    except HypothesisViolated:
        return z_matrix(inst, nu), False, ("schwarz",)
    return z_matrix(inst, nu), data.contains(nu), ()


def characterize(
    coords: Coordinates,
    lam0: complex,
    *,
    grid: GridSpec | None = None,
    strict: bool = False,
    tol: Tolerances | None = None,
) -> Characterization:
    """Factor an interpolant through the pairs ``(j, n-j)``.

    For each ``j = 1 ... [n/2]`` the function
    ``h_j = psi_j psi_{n-j} / C^2 - psi_n`` is split as ``f_j g_j`` with
    :func:`~gtilde.factorization.balanced_factorize`, so that
    ``det F_j = psi_n``.  The rescaled ``G_j(lam) = F_j(lam) diag(1/lam, 1)``
    is compared with ``z_matrix`` at ``nu = |f_j(lam0) / w_j|``.

    Parameters
    ----------
    coords : Interpolant, RationalCoordinates or sequence of PolyC
        The map ``psi``; plain polynomial coordinates have denominator 1.
    lam0 : complex
        Node at which ``psi`` hits its target.
    grid : GridSpec, optional
        Samples for the norm checks: ``grid.interior`` disc points and
        ``grid.angular`` points on the unit circle.
    strict : bool
        Raise instead of reporting when a factor fails its checks.
    tol : Tolerances, optional
        Numeric thresholds.

    Raises
    ------
    DegenerateTarget
        If ``psi`` is constant, ``psi(0)`` is not the origin, or some
        ``h_j`` vanishes identically or at ``lam0``.
    NotInterior
        If ``psi(lam0)`` is not an interior point.
    FactorizationFailed
        If a balanced factorization misses its checks.
    NotSchur
        With ``strict=True``, if a factor exceeds norm one on the samples.
    HypothesisViolated
        With ``strict=True``, if a pair fails its hypotheses at ``lam0``.
    """
    tol = resolve(tol)
    grid = GridSpec() if grid is None else grid
    lam0 = complex(lam0)
    rc = _as_rational(coords)
    if rc.is_constant():
        raise DegenerateTarget("A constant map has constant factors")
    n = rc.n
    at_zero = rc(0j).max_abs_diff(PointGn.origin(n))
    if at_zero > tol.endpoint:
        raise DegenerateTarget(f"psi(0) is not the origin (off by {at_zero:.3g})")
    y0 = rc(lam0)
    if not in_gtilde(y0, tol).inside:
        raise NotInterior(f"psi(lam0) = {y0!r} is not an interior point")

    inside = grid.disc()
    circle = grid.circle(1.0)
    qn = rc.coordinate(n, inside)
    divisor = rc.denominator if rc.denominator.degree > 0 else None
    results = []
    for j in pair_indices(n):
        c = binom(n, j)
        h = rc.numerators[j - 1] * rc.numerators[n - j - 1] / (c * c)
        h = h - rc.numerators[n - 1] * rc.denominator
        if h.is_zero():
            raise DegenerateTarget(f"h_{j} vanishes identically", j=j)
        fac = balanced_factorize(h, divisor, tol)
        h0 = y0.coord(j) * y0.coord(n - j) - c * c * y0.q
        if not abs(h0) > tol.pole:
            raise DegenerateTarget(f"h_{j}(lam0) vanishes", j=j)
        w = cmath.sqrt(h0 / (c * c * lam0))
        ratio = fac.f(lam0) / w
        nu = abs(ratio)
        u = nu / ratio
        expected, in_window, failed = _node_data(lam0, y0, j, nu, tol)
        draft = CharacterizedFactor(
            rc, j, fac, u, nu, Mat2.zero(), None, in_window, failed, 0.0, 0.0, 0.0
        )
        node = draft.matrix(lam0) @ Mat2.diag(1 / lam0, 1)
        mats = draft.batch(inside)
        result = replace(
            draft,
            node_value=node,
            z_error=None if expected is None else node.max_abs_diff(expected),
            max_norm_circle=float(op_norm_batch(draft.batch(circle)).max()),
            max_norm_interior=float(op_norm_batch(mats).max()),
            det_residual=float(np.abs(np.linalg.det(mats) - qn).max()),
        )
        logger.debug(
            "pair %d: nu=%.6g window=%s norms %.6g / %.6g",
            j, nu, in_window, result.max_norm_circle, result.max_norm_interior,
        )  # fmt: skip
        if not result.schur_ok:
            worst = max(result.max_norm_circle, result.max_norm_interior)
            msg = f"Recovered factor for j={j} leaves the unit ball (norm {worst!r})"
            if strict:
                raise NotSchur(msg, j=j, norm=worst)
            logger.warning(msg)
        if failed:
            if strict:
                raise HypothesisViolated(
                    f"Hypothesis {failed[0]!r} fails for j={j} at lam0",
                    hypothesis=failed[0],
                    j=j,
                )
            logger.warning("pair %d fails hypotheses %s at lam0", j, list(failed))
        results.append(result)
    return Characterization(lam0, y0, tuple(results))

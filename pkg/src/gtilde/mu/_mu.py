"""The structured singular value for the 2x2 diagonal structure.

``mu(B)`` is the reciprocal of the smallest ``t`` such that
``det(I - B diag(z, w)) = 1 - b11 z - b22 w + det(B) z w`` has a zero with
``|z|, |w| <= t``; it is 0 when no such zero exists.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import TYPE_CHECKING, Any

from gtilde.linalg import Mat2, op_norm, spectral_radius
from gtilde.utils import (
    bidisc_witness,
    bidisc_zero_within,
    encode_complex,
    resolve,
)

if TYPE_CHECKING:
    from gtilde.utils import Tolerances

logger = logging.getLogger(__name__)

#: Largest allowed ``|det(I - B diag(z, w))|`` at a reported witness.
WITNESS_RESIDUAL = 1e-8


def singularity_residual(B: Mat2, z: complex, w: complex) -> float:
    """``|1 - b11 z - b22 w + det(B) z w|``."""
    return abs(1 - B.a11 * z - B.a22 * w + B.det() * z * w)


@dataclass(frozen=True)
class MuResult:
    """Value of ``mu`` with an optional singular ``diag(z, w)``.

    When present, the witness has ``max(|z|, |w|)`` at most ``1 / value`` up
    to the bisection width and makes ``I - B diag(z, w)`` singular.
    """

    value: float
    witness: tuple[complex, complex] | None = None
    iterations: int = 0

    def to_json(self) -> dict[str, Any]:
        witness = None
        if self.witness is not None:
            witness = [encode_complex(x) for x in self.witness]
        return {
            "kind": "mu",
            "value": self.value,
            "witness": witness,
            "iterations": self.iterations,
        }


def mu_diag(B: Mat2, tol: Tolerances | None = None) -> MuResult:
    """Structured singular value of `B` for diagonal perturbations.

    Bisects ``t = 1 / mu`` on the monotone predicate "``1 - b11 z - b22 w +
    det(B) z w`` vanishes on the closed ``t``-bidisc" (see
    :func:`~gtilde.utils.bidisc_zero_within`).  The upper end of the bracket
    starts at ``1 / ||B||`` and doubles until the predicate holds; if it never
    does up to ``tol.mu_infinity`` the result is ``mu = 0``.

    Examples
    --------
    >>> mu_diag(Mat2.diag(0.5, -0.25)).value
    0.5
    >>> mu_diag(Mat2(0, 1, 0, 0)).value
    0.0
    """
    tol = resolve(tol)
    a, b, d = B.a11, B.a22, B.det()
    if a == 0 and b == 0 and d == 0:
        return MuResult(0.0)
    norm = op_norm(B)
    lo, hi = 0.0, 1 / norm
    steps = 0
    while not bidisc_zero_within(a, b, d, hi):
        lo, hi = hi, 2 * hi
        steps += 1
        if hi > tol.mu_infinity:
            logger.debug("no singular diagonal up to t=%g, mu = 0", tol.mu_infinity)
            return MuResult(0.0, None, steps)
    while hi - lo > tol.bisection:
        mid = (lo + hi) / 2
        if bidisc_zero_within(a, b, d, mid):
            hi = mid
        else:
            lo = mid
        steps += 1
    z, w = bidisc_witness(a, b, d, hi)
    witness: tuple[complex, complex] | None = (z, w)
    residual = singularity_residual(B, z, w)
    if not residual < WITNESS_RESIDUAL:
        logger.debug("dropping witness with residual %.3g", residual)
        witness = None
    logger.debug("mu bisection finished after %d steps at t=%.17g", steps, hi)
    return MuResult(_snap(1 / hi, B), witness, steps)


def _snap(value: float, B: Mat2) -> float:
    # triangular inputs factor as (1 - b11 z)(1 - b22 w)
    if B.a12 == 0 or B.a21 == 0:
        return max(abs(B.a11), abs(B.a22))
    return value


def mu_full(B: Mat2) -> float:
    """``mu`` for full 2x2 perturbations, i.e. the operator norm."""
    return op_norm(B)


def mu_scalar(B: Mat2) -> float:
    """``mu`` for scalar perturbations, i.e. the spectral radius."""
    return spectral_radius(B)

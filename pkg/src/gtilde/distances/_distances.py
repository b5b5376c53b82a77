"""Invariant distances from the origin."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Any

import numpy as np

from gtilde._errors import HypothesisViolated, NotInterior, OutsideDisc
from gtilde.geometry import (
    PointGn,
    in_gtilde,
    phi,
    satisfies_jn_relations,
    schwarz_bound,
)
from gtilde.interpolation import Interpolant, build_interpolant_jn, eval_interpolant
from gtilde.utils import encode_complex, resolve

if TYPE_CHECKING:
    from gtilde.utils import Tolerances

logger = logging.getLogger(__name__)

#: Relative enlargement of the node when the extremal value is not strict.
RELAXATION = 1e-9
#: Largest gap between the bounds still reported as equal.
EQUALITY_TOL = 1e-8


def hyperbolic_distance(a: complex, b: complex) -> float:
    """``atanh |(a - b) / (1 - conj(b) a)|`` on the unit disc.

    Raises
    ------
    OutsideDisc
        If either point is outside the open disc.

    Examples
    --------
    >>> hyperbolic_distance(0, 0)
    0.0
    """
    a, b = complex(a), complex(b)
    for z in (a, b):
        if not abs(z) < 1:
            raise OutsideDisc(f"Point {z!r} is outside the open disc", point=z)
    return math.atanh(abs((a - b) / (1 - b.conjugate() * a)))


def caratheodory_candidates(
    y: PointGn, omegas: np.ndarray | None = None
) -> np.ndarray:
    """``atanh |Phi_j(omega, y)|`` for ``j = 1 ... n-1`` (rows) over `omegas`.

    Each ``Phi_j(omega, .)`` maps the domain into the disc and the origin to
    0, so every entry is a lower bound for the Caratheodory distance.  The
    default `omegas` are 36 equally spaced points of the unit circle.
    """
    if omegas is None:
        omegas = np.exp(2j * np.pi * np.arange(36) / 36)
    out = np.empty((y.n - 1, len(omegas)))
    for j in range(1, y.n):
        for k, omega in enumerate(omegas):
            out[j - 1, k] = math.atanh(abs(phi(j, complex(omega), y)))
    return out


@dataclass(frozen=True)
class ExtremalRotation:
    """``lam -> (0, ..., 0, lam * unit)``, the extremal map onto ``(0, ..., 0, q)``.

    Every pair of such a target has ``y_j = y_{n-j} = 0``, so no strict
    contraction reaches it at the extremal node ``|q|`` and the factor
    constructions do not apply.
    """

    n: int
    unit: complex

    def __call__(self, lam: complex) -> PointGn:
        lam = complex(lam)
        if not abs(lam) < 1:
            raise OutsideDisc(f"lam must lie in the open unit disc, got {lam!r}")
        return PointGn(self.n, (0j,) * (self.n - 1), lam * self.unit)

    def to_json(self) -> dict[str, Any]:
        return {"kind": "rotation", "n": self.n, "unit": encode_complex(self.unit)}


@dataclass(frozen=True)
class DistanceReport:
    """Caratheodory lower bound and, when constructible, a Lempert upper bound.

    ``upper`` comes from an interpolant hitting ``y`` at ``lam0``; ``relaxed``
    records that ``lam0`` was enlarged by :data:`RELAXATION` to make the
    construction hypotheses strict.  ``gap`` names the hypothesis that
    blocked the construction.  Targets ``(0, ..., 0, q)`` carry an
    :class:`ExtremalRotation` in place of the interpolant.
    """

    lower: float
    upper: float | None
    equal: bool
    argmax_j: int
    lam0: complex | None = None
    relaxed: bool = False
    target_residual: float | None = None
    gap: str | None = None
    interpolant: Interpolant | ExtremalRotation | None = field(
        default=None, compare=False, repr=False
    )

    @property
    def construction(self) -> str | None:
        if isinstance(self.interpolant, ExtremalRotation):
            return "rotation"
        return None if self.interpolant is None else self.interpolant.construction

    def to_json(self) -> dict[str, Any]:
        return {
            "kind": "distance",
            "lower": self.lower,
            "upper": self.upper,
            "equal": self.equal,
            "argmax_j": self.argmax_j,
            "lam0": None if self.lam0 is None else encode_complex(self.lam0),
            "relaxed": self.relaxed,
            "target_residual": self.target_residual,
            "gap": self.gap,
            "construction": self.construction,
        }


def _construct(
    y: PointGn, bound: float, tol: Tolerances
) -> tuple[Interpolant, complex, bool]:
    lam0 = complex(bound)
    try:
        return build_interpolant_jn(y, lam0, tol=tol), lam0, False
    except HypothesisViolated as e:
        if e.context.get("hypothesis") != "schwarz":
            raise
    lam0 = complex(bound * (1 + RELAXATION))
    logger.info("relaxing lam0 from %.17g to %.17g", bound, lam0.real)
    return build_interpolant_jn(y, lam0, tol=tol), lam0, True


def _rotation_report(
    y: PointGn, lower: float, arg: int, tol: Tolerances
) -> DistanceReport:
    lam0 = complex(abs(y.q))
    rot = ExtremalRotation(y.n, y.q / abs(y.q))
    residual = rot(lam0).max_abs_diff(y)
    upper = hyperbolic_distance(0, lam0)
    equal = residual <= tol.endpoint and abs(upper - lower) < EQUALITY_TOL
    return DistanceReport(
        lower, upper, equal, arg, lam0, False, residual, interpolant=rot
    )


def dist_origin(y: PointGn, tol: Tolerances | None = None) -> DistanceReport:
    """Distances between the origin and `y`.

    ``lower = max_j atanh(phi_supnorm(j, y))`` over ``j = 1 ... n-1`` is the
    Caratheodory bound.  For ``y`` in J_n the interpolant of
    :func:`~gtilde.interpolation.build_interpolant_jn` at
    ``lam0 = tanh(lower)`` gives ``upper = atanh |lam0|``, and the two agree.
    Targets ``(0, ..., 0, q)`` are reached by :class:`ExtremalRotation` at
    ``lam0 = |q|``.
    Outside J_n, or when a construction hypothesis fails, ``upper`` is None.

    Raises
    ------
    NotInterior
        If `y` is not an interior point.
    """
    tol = resolve(tol)
    report = in_gtilde(y, tol)
    if not report.inside:
        raise NotInterior(f"Point {y!r} is not interior", margin=report.worst_margin)
    bound, arg = schwarz_bound(y)
    lower = math.atanh(bound)
    if bound == 0:
        # only the origin itself has a zero bound
        return DistanceReport(0.0, 0.0, True, arg)
    if not satisfies_jn_relations(y):
        return DistanceReport(lower, None, False, arg, gap="jn")
    if not any(y.y):
        return _rotation_report(y, lower, arg, tol)
    try:
        psi, lam0, relaxed = _construct(y, bound, tol)
    except HypothesisViolated as e:
        gap = e.context.get("hypothesis", e.code)
        logger.info("no construction for the upper bound: %s", e)
        return DistanceReport(lower, None, False, arg, gap=gap)
    residual = eval_interpolant(psi, lam0, tol).max_abs_diff(y)
    upper = hyperbolic_distance(0, lam0)
    equal = residual <= tol.endpoint and abs(upper - lower) < EQUALITY_TOL
    return DistanceReport(
        lower, upper, equal, arg, lam0, relaxed, residual, interpolant=psi
    )

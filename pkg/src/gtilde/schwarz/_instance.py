"""Two-point Schwarz data: the target, its hypotheses and the derived scalars."""

from __future__ import annotations

import cmath
import logging
import math
from dataclasses import dataclass
from functools import cached_property
from typing import TYPE_CHECKING, Any

from gtilde._errors import HypothesisViolated, NotInterior, NuOutOfRange, OutsideDisc
from gtilde.geometry import PointGn, binom, in_gtilde, phi_supnorm
from gtilde.utils import encode_complex, resolve

if TYPE_CHECKING:
    from gtilde.utils import Tolerances

logger = logging.getLogger(__name__)

#: Hypothesis names, in the order they are checked.
HYPOTHESES = ("interior", "nondegenerate", "ordering", "schwarz")


def hypothesis_slacks(
    lam0: complex, y0: PointGn, j: int, tol: Tolerances | None = None
) -> dict[str, float]:
    """Measured slack of every hypothesis for the pair ``(j, n-j)``.

    A hypothesis holds when its slack is positive (``ordering`` also admits
    zero).  Keys are those of :data:`HYPOTHESES`:

    ``interior``
        Worst interior membership margin of ``y0``.
    ``nondegenerate``
        ``|y_j y_{n-j} - C^2 q| / C^2``.
    ``ordering``
        ``|y_j| - |y_{n-j}|``.
    ``schwarz``
        ``|lam0| - phi_supnorm(j, y0)``; ``-inf`` when ``Phi_j`` has a pole on
        the closed disc.
    """
    tol = resolve(tol)
    c = binom(y0.n, j)
    yj, ynj = y0.coord(j), y0.coord(y0.n - j)
    report = in_gtilde(y0, tol)
    slacks = {
        "interior": report.worst_margin,
        "nondegenerate": abs(yj * ynj - c * c * y0.q) / (c * c),
        "ordering": abs(yj) - abs(ynj),
    }
    denom = c * c - abs(ynj) ** 2
    slacks["schwarz"] = abs(lam0) - phi_supnorm(j, y0) if denom > 0 else -math.inf
    return slacks


def failed_hypotheses(
    slacks: dict[str, float], tol: Tolerances | None = None
) -> list[str]:
    """Names of the hypotheses whose slack does not clear its threshold."""
    tol = resolve(tol)
    failed = []
    if not slacks["interior"] > tol.margin:
        failed.append("interior")
    if not slacks["nondegenerate"] > tol.pole:
        failed.append("nondegenerate")
    if slacks["ordering"] < 0:
        failed.append("ordering")
    if not slacks["schwarz"] > 0:
        failed.append("schwarz")
    return failed


@dataclass(frozen=True)
class SchwarzInstance:
    """A target ``y0`` reached at ``lam0``, seen through the pair ``(j, n-j)``.

    Parameters
    ----------
    lam0 : complex
        The interpolation node, ``0 < |lam0| < 1``.
    y0 : PointGn
        Interior target point.
    j : int
        Pair index in ``1 ... n-1``.

    Raises
    ------
    OutsideDisc
        If ``lam0`` is zero or outside the open disc.
    NotInterior
        If ``y0`` is not an interior point.
    HypothesisViolated
        If ``y_j y_{n-j} = C^2 q``, ``|y_{n-j}| > |y_j|`` or
        ``phi_supnorm(j, y0) >= |lam0|``; ``context`` names the hypothesis
        and its slack.
    """

    lam0: complex
    y0: PointGn
    j: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "lam0", complex(self.lam0))
        if not 0 < abs(self.lam0) < 1:
            raise OutsideDisc(
                f"lam0 must satisfy 0 < |lam0| < 1, got {self.lam0!r}",
                abs_lam0=abs(self.lam0),
            )
        if not 1 <= self.j <= self.y0.n - 1:
            raise IndexError(f"Index j must be in 1..{self.y0.n - 1}, got {self.j!r}")
        slacks = hypothesis_slacks(self.lam0, self.y0, self.j)
        failed = failed_hypotheses(slacks)
        if "interior" in failed:
            raise NotInterior(
                f"Target {self.y0!r} is not an interior point",
                margin=slacks["interior"],
            )
        if failed:
            name = failed[0]
            raise HypothesisViolated(
                f"Hypothesis {name!r} fails for j={self.j} "
                f"(slack {slacks[name]!r})",
                hypothesis=name,
                j=self.j,
                slack=slacks[name],
            )

    @property
    def c(self) -> int:
        return binom(self.y0.n, self.j)

    @property
    def rho(self) -> float:
        return abs(self.lam0)

    @property
    def yj(self) -> complex:
        return self.y0.coord(self.j)

    @property
    def ynj(self) -> complex:
        return self.y0.coord(self.y0.n - self.j)

    @property
    def q(self) -> complex:
        return self.y0.q

    @property
    def h0(self) -> complex:
        """``y_j y_{n-j} - C^2 q``."""
        return self.yj * self.ynj - self.c**2 * self.q

    @cached_property
    def w(self) -> complex:
        """Principal square root of ``h0 / (C^2 lam0)``."""
        return cmath.sqrt(self.h0 / (self.c**2 * self.lam0))

    def to_json(self) -> dict[str, Any]:
        return {"lam0": encode_complex(self.lam0), "y0": self.y0.to_json(), "j": self.j}


@dataclass(frozen=True)
class SchwarzData:
    """Scalars attached to a :class:`SchwarzInstance`.

    ``theta`` and ``vartheta`` are the roots of ``z^2 - x_nj z + 1``; the
    window ``theta < nu^2 < vartheta`` is exactly where ``z_matrix`` is a
    strict contraction.
    """

    w: complex
    x_j: float
    x_nj: float
    r_j: float
    theta: float
    vartheta: float

    def contains(self, nu: float) -> bool:
        """Whether ``nu^2`` lies in the open window."""
        return nu > 0 and self.theta < nu * nu < self.vartheta

    def require(self, nu: float) -> None:
        if not self.contains(nu):
            raise NuOutOfRange(
                f"nu^2 = {nu * nu!r} is outside ({self.theta!r}, {self.vartheta!r})",
                nu=nu,
                theta=self.theta,
                vartheta=self.vartheta,
            )

    def default_nu(self) -> float:
        """1, the geometric midpoint of the window since ``theta vartheta = 1``."""
        return 1.0

    def to_json(self) -> dict[str, Any]:
        return {
            "w": encode_complex(self.w),
            "x_j": self.x_j,
            "x_nj": self.x_nj,
            "r_j": self.r_j,
            "theta": self.theta,
            "vartheta": self.vartheta,
        }


def compute_schwarz_data(inst: SchwarzInstance) -> SchwarzData:
    """Derive ``w``, ``X_j``, ``X_{n-j}``, ``R_j`` and the window roots.

    With ``rho = |lam0|``, ``s = |h0| / C^2``, ``P = |y_j|^2 / C^2`` and
    ``Q = |y_{n-j}|^2 / C^2``::

        X_{n-j} = (rho / s) (1 - P / rho^2 - Q + |q|^2 / rho^2)
        X_j     = (rho / s) (1 - P - Q / rho^2 + |q|^2 / rho^2)
        R_j     = rho (C^2 - |y_{n-j}|^2) / |h0|

    Raises
    ------
    HypothesisViolated
        If ``X_{n-j} <= 2``, which the instance hypotheses exclude up to
        rounding.
    """
    c2 = inst.c**2
    rho = inst.rho
    s = abs(inst.h0) / c2
    p = abs(inst.yj) ** 2 / c2
    qd = abs(inst.ynj) ** 2 / c2
    m = abs(inst.q) ** 2
    x_nj = (rho / s) * (1 - p / rho**2 - qd + m / rho**2)
    x_j = (rho / s) * (1 - p - qd / rho**2 + m / rho**2)
    r_j = rho * (c2 - abs(inst.ynj) ** 2) / abs(inst.h0)
    if not x_nj > 2:
        raise HypothesisViolated(
            f"X_(n-j) = {x_nj!r} must exceed 2",
            hypothesis="schwarz",
            j=inst.j,
            slack=x_nj - 2,
        )
    # larger root first; the smaller one as its reciprocal avoids cancellation
    vartheta = (x_nj + math.sqrt(x_nj * x_nj - 4)) / 2
    theta = 1 / vartheta
    logger.debug(
        "Schwarz data j=%d: X_j=%g X_nj=%g R=%g window=(%g, %g)",
        inst.j, x_j, x_nj, r_j, theta, vartheta,
    )  # fmt: skip
    return SchwarzData(inst.w, x_j, x_nj, r_j, theta, vartheta)

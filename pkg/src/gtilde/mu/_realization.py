"""Matrices of small structured singular value realizing points, and lifts."""

from __future__ import annotations

import cmath
import logging
from dataclasses import dataclass
from typing import TYPE_CHECKING, Callable

import numpy as np

from gtilde._errors import HypothesisViolated, NotInterior
from gtilde.geometry import (
    PointGn,
    binom,
    gtilde_margin_batch,
    in_gtilde,
    pair_indices,
    satisfies_jn_relations,
)
from gtilde.linalg import Mat2
from gtilde.oracles import GridSpec
from gtilde.utils import resolve

from ._mu import mu_diag

if TYPE_CHECKING:
    from gtilde.utils import Tolerances

logger = logging.getLogger(__name__)

#: Samples used by :func:`lift_to_mu_ball` to check the map stays interior.
LIFT_GRID = GridSpec(interior=1_000)


def _pair_matrix(y: PointGn, j: int) -> Mat2:
    c = binom(y.n, j)
    yj, ynj = y.coord(j), y.coord(y.n - j)
    w = cmath.sqrt(yj * ynj - c * c * y.q) / c
    return Mat2(yj / c, w, w, ynj / c)


def _jn_matrix(y: PointGn) -> Mat2:
    n = y.n
    y1, yn1 = y.coord(1), y.coord(n - 1)
    w = cmath.sqrt(y1 * yn1 - n * n * y.q) / n
    return Mat2(y1 / n, w, w, yn1 / n)


def _require_interior(y: PointGn, tol: Tolerances | None) -> None:
    report = in_gtilde(y, tol)
    if not report.inside:
        raise NotInterior(f"Point {y!r} is not interior", margin=report.worst_margin)


def mu_realization(y: PointGn, tol: Tolerances | None = None) -> list[Mat2]:
    """``B_j = [[y_j / C, w_j], [w_j, y_{n-j} / C]]`` for ``j = 1 ... [n/2]``.

    ``w_j`` is the principal root of ``(y_j y_{n-j} - C^2 q) / C^2``, so every
    ``det B_j = q`` and ``pi_map`` of the list returns `y`.

    Raises
    ------
    NotInterior
        If `y` is not an interior point.
    """
    _require_interior(y, tol)
    return [_pair_matrix(y, j) for j in pair_indices(y.n)]


def mu_realization_jn(y: PointGn, tol: Tolerances | None = None) -> Mat2:
    """The single matrix ``[[y_1 / n, w], [w, y_{n-1} / n]]`` with ``pi_hat = y``.

    Raises
    ------
    HypothesisViolated
        If `y` does not satisfy the J_n relations.
    NotInterior
        If `y` is not an interior point.
    """
    if not satisfies_jn_relations(y):
        raise HypothesisViolated(
            "Target does not satisfy the J_n proportionality relations",
            hypothesis="jn",
        )
    _require_interior(y, tol)
    return _jn_matrix(y)


def mu_membership_check(y: PointGn, tol: Tolerances | None = None) -> bool:
    """Membership through the realization: every ``mu(B_j) < 1``.

    Points in J_n are also tested with the single matrix of
    :func:`mu_realization_jn`; both tests must pass.
    """
    tol = resolve(tol)
    values = [mu_diag(_pair_matrix(y, j), tol).value for j in pair_indices(y.n)]
    inside = all(v < 1 for v in values)
    if satisfies_jn_relations(y):
        single = mu_diag(_jn_matrix(y), tol).value < 1
        if single != inside:
            logger.warning("single-matrix and per-pair mu tests disagree for %r", y)
        inside = inside and single
    return inside


def mu_closure_check(y: PointGn, tol: Tolerances | None = None) -> bool:
    """Closure membership: every ``mu(B_j) <= 1`` up to ``tol.margin``."""
    tol = resolve(tol)
    return all(
        mu_diag(_pair_matrix(y, j), tol).value <= 1 + tol.margin
        for j in pair_indices(y.n)
    )


@dataclass(frozen=True)
class LiftedFactor:
    """``F_j(lam) = [[phi_j / C, phi_j phi_{n-j} / C^2 - q], [1, phi_{n-j} / C]]``.

    ``det F_j = q`` and ``det(I - F_j diag(z, w))`` is the ``j``-th pair
    polynomial divided by ``C``, so ``mu(F_j(lam)) < 1`` wherever ``phi`` is
    interior.
    """

    phi: Callable[[complex], PointGn]
    j: int

    def __call__(self, lam: complex) -> Mat2:
        y = self.phi(lam)
        c = binom(y.n, self.j)
        yj, ynj = y.coord(self.j), y.coord(y.n - self.j)
        return Mat2(yj / c, yj * ynj / (c * c) - y.q, 1, ynj / c)


def lift_to_mu_ball(
    phi: Callable[[complex], PointGn],
    n: int,
    *,
    grid: GridSpec | None = None,
    tol: Tolerances | None = None,
) -> list[LiftedFactor]:
    """Lift an analytic map into the domain to matrix functions of ``mu < 1``.

    Parameters
    ----------
    phi : callable
        ``lam -> PointGn``; an :class:`~gtilde.interpolation.Interpolant` or
        :class:`~gtilde.interpolation.RationalCoordinates` works directly.
    n : int
        Dimension of the points returned by `phi`.
    grid : GridSpec, optional
        Disc samples on which `phi` must stay interior, by default 1000
        quasi-random points.
    tol : Tolerances, optional
        Membership margin.

    Raises
    ------
    NotInterior
        If ``phi`` leaves the interior at a sample point; ``context["lam"]``
        is that point.
    """
    tol = resolve(tol)
    grid = LIFT_GRID if grid is None else grid
    lams = grid.disc()
    coords = np.array([phi(complex(lam)).coords() for lam in lams], dtype=complex)
    margins = gtilde_margin_batch(n, coords)
    k = int(np.argmin(margins))
    if not margins[k] > tol.margin:
        raise NotInterior(
            f"Map leaves the interior at lam={complex(lams[k])!r}",
            lam=complex(lams[k]),
            margin=float(margins[k]),
        )
    return [LiftedFactor(phi, j) for j in pair_indices(n)]

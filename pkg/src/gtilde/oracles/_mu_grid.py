"""Brute-force structured singular value and operator norm."""

from __future__ import annotations

import logging
from typing import TYPE_CHECKING, Any

import numpy as np

from gtilde.linalg import Mat2
from gtilde.utils import circle_min_modulus, resolve

from ._grid import GridSpec

if TYPE_CHECKING:
    from gtilde.utils import Tolerances

logger = logging.getLogger(__name__)

_MAX_HALVINGS = 80


def dense_op_norm(M: Mat2 | Any) -> float:
    """Largest singular value from a dense SVD."""
    arr = M.to_array() if isinstance(M, Mat2) else np.asarray(M, dtype=complex)
    return float(np.linalg.svd(arr, compute_uv=False)[0])


def _hits(b11: complex, b22: complex, det: complex, t: float) -> bool:
    # z(w) = (1 - b22 w) / (b11 - det w) has its least modulus over |w| <= t on
    # the circle |w| = t unless its zero 1 / b22 lies inside
    if b22 != 0 and abs(1 / b22) <= t:
        return True
    return circle_min_modulus(-b22, 1.0, -det, b11, t) <= t


def mu_grid(
    B: Mat2, grid: GridSpec | None = None, tol: Tolerances | None = None
) -> float:
    """Structured singular value of `B` by scanning bidiscs of growing radius.

    At a radius ``t`` the unique ``z`` with ``1 - b11 z - b22 w + det(B) z w = 0``
    is a Mobius function of ``w``; the level triggers when its least modulus
    over ``|w| <= t``, taken on the continuous circle ``|w| = t``, is at most
    ``t``.  Levels are scanned on a geometric ladder of ``grid.radial`` rungs
    from ``1 / ||B||`` to ``tol.mu_infinity`` and the first triggering rung is
    refined by bisection.  Returns ``1 / t``, or 0 when no level triggers.
    """
    tol = resolve(tol)
    grid = GridSpec() if grid is None else grid
    b11, b22, det = B.a11, B.a22, B.det()
    if B.a12 == 0 or B.a21 == 0:
        # g factors as (1 - b11 z)(1 - b22 w)
        return max(abs(b11), abs(b22))
    norm = dense_op_norm(B)
    levels = np.geomspace(1 / norm, tol.mu_infinity, max(grid.radial, 2))
    for k, t in enumerate(levels):
        if _hits(b11, b22, det, t):
            break
    else:
        logger.debug("no singularity up to t=%g", tol.mu_infinity)
        return 0.0
    lo, hi = (levels[k - 1] if k else 0.0), float(t)
    for _ in range(_MAX_HALVINGS):
        if hi - lo <= tol.bisection * max(1.0, hi):
            break
        mid = (lo + hi) / 2
        if _hits(b11, b22, det, mid):
            hi = mid
        else:
            lo = mid
    return 1 / hi

"""Sampling baselines for sup norms and membership."""

from __future__ import annotations

from typing import TYPE_CHECKING, Callable

import numpy as np

from gtilde.geometry import PointGn, binom, pair_indices
from gtilde.utils import map_chunks

from ._grid import GridSpec

if TYPE_CHECKING:
    from numpy.typing import ArrayLike


def supnorm_sampling(
    f: Callable[[ArrayLike], ArrayLike],
    grid: GridSpec | None = None,
    *,
    vectorized: bool = False,
) -> float:
    """Largest ``|f|`` over ``grid.angular`` equally spaced unit-circle points.

    Underestimates the supremum of a Lipschitz ``f`` by ``O(1/N)``.  With
    ``vectorized=True`` `f` is called once on the whole array of samples.

    Examples
    --------
    >>> round(supnorm_sampling(lambda z: z), 12)
    1.0
    """
    grid = GridSpec() if grid is None else grid
    zs = grid.circle(1.0)
    if vectorized:
        values = np.asarray(f(zs), dtype=complex)
    else:
        values = np.array([complex(f(complex(z))) for z in zs])
    return float(np.abs(values).max())


def _pair_min_modulus(
    c: int, a: complex, b: complex, q: complex, ws: np.ndarray
) -> np.ndarray:
    """``|z(w)|`` where ``z(w)`` solves ``C - a z - b w + C q z w = 0``."""
    den = a - c * q * ws
    num = c - b * ws
    with np.errstate(divide="ignore", invalid="ignore"):
        z = np.abs(num / den)
    # 0/0: every z solves the equation at this w
    z[(den == 0) & (num == 0)] = 0.0
    return z


def membership_torus_sampling(
    y: PointGn, grid: GridSpec | None = None, *, workers: int | None = None
) -> bool:
    """Brute-force membership: no sampled zero of the pair polynomials.

    For every pair ``j`` and every sampled ``w`` (``grid.interior`` points of
    the open disc plus the circle of radius ``grid.boundary_radius``), the
    unique ``z`` with ``C - y_j z - y_{n-j} w + C q z w = 0`` is solved for
    exactly; ``y`` is reported inside when every such ``z`` lies outside the
    open unit disc.

    The test is one sided: zeros closer to the torus than the sampling
    resolution go unnoticed, so points just outside may be reported inside.
    """
    grid = GridSpec() if grid is None else grid
    ws = grid.verification_points()
    n = y.n
    for j in pair_indices(n):
        c = binom(n, j)
        a, b = y.coord(j), y.coord(n - j)
        if a == 0 and y.q == 0:
            # the equation no longer involves z
            if b != 0 and abs(c / b) < 1:
                return False
            continue
        mins = map_chunks(
            lambda chunk: _pair_min_modulus(c, a, b, y.q, chunk),  # noqa: B023
            ws,
            workers=workers,
        )
        if float(mins.min()) < 1:
            return False
    return True

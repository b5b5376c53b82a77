"""The maps from tuples of 2x2 matrices onto the extended symmetrized polydisc."""

from __future__ import annotations

from typing import TYPE_CHECKING

from gtilde._errors import DeterminantMismatch, DimensionTooSmall, LengthMismatch

from ._point import PointGn, binom, in_gtilde

if TYPE_CHECKING:
    from collections.abc import Sequence

    from gtilde.linalg import Mat2
    from gtilde.utils import Tolerances

_RELATION_TOL = 1e-12
_DET_TOL = 1e-12


def _jn_coords(y1: complex, yn1: complex, n: int) -> list[complex]:
    """Coordinates ``y_1 ... y_{n-1}`` of the J_n point over ``(y_1, y_{n-1})``."""
    y = [0j] * (n - 1)
    y[0], y[n - 2] = complex(y1), complex(yn1)
    half = n // 2
    last = half if n % 2 else half - 1
    for j in range(2, last + 1):
        c = binom(n, j)
        y[j - 1] = c / n * y1
        y[n - j - 1] = c / n * yn1
    if n % 2 == 0 and n > 2:
        y[half - 1] = binom(n, half) * (y1 + yn1) / (2 * n)
    return y


def jn_embed(y1: complex, yn1: complex, q: complex, n: int) -> PointGn:
    """The unique point of J_n with first, last-but-one and last coordinates given.

    Examples
    --------
    >>> abs(jn_embed(0.4, 0.2, 0.1, 4).y[1] - 0.45) < 1e-15
    True
    """
    if n < 3:
        raise DimensionTooSmall(f"J_n requires n >= 3, got {n!r}", n=n)
    return PointGn(n, tuple(_jn_coords(y1, yn1, n)), q)


def satisfies_jn_relations(y: PointGn) -> bool:
    """Whether the proportionality relations defining J_n hold (to 1e-12)."""
    expected = _jn_coords(y.coord(1), y.coord(y.n - 1), y.n)
    return all(
        abs(a - b) <= _RELATION_TOL * (1 + abs(b)) for a, b in zip(y.y, expected)
    )


def in_jn(y: PointGn, tol: Tolerances | None = None) -> bool:
    """Interior membership in the subset J_n.

    For ``n <= 3`` the relations are vacuous and this is :func:`in_gtilde`.
    """
    return satisfies_jn_relations(y) and in_gtilde(y, tol).inside


def pi_map(matrices: Sequence[Mat2], n: int, det_tol: float = _DET_TOL) -> PointGn:
    """Assemble ``[n/2]`` matrices with a common determinant into a point.

    Pair ``j`` reads ``y_j = C(n, j) [B_j]_11`` and ``y_{n-j} = C(n, j) [B_j]_22``;
    for even ``n`` the middle coordinate is ``C(n, n/2) ([B]_11 + [B]_22) / 2``.
    The last coordinate is the common determinant.

    Raises
    ------
    LengthMismatch
        If the number of matrices is not ``[n/2]``.
    DeterminantMismatch
        If two determinants differ by more than `det_tol` (1e-12).
    """
    if n < 2:
        raise DimensionTooSmall(f"n must be >= 2, got {n!r}", n=n)
    half = n // 2
    if len(matrices) != half:
        raise LengthMismatch(
            f"Expected {half} matrices for n={n}, got {len(matrices)}",
            expected=half,
            got=len(matrices),
        )
    q = matrices[0].det()
    for i, B in enumerate(matrices[1:], start=2):
        if abs(B.det() - q) > det_tol:
            raise DeterminantMismatch(
                f"det B_{i} = {B.det()!r} differs from det B_1 = {q!r}",
                index=i,
                difference=abs(B.det() - q),
            )
    y = [0j] * (n - 1)
    for j, B in enumerate(matrices, start=1):
        c = binom(n, j)
        if 2 * j == n:
            y[j - 1] = c * (B.a11 + B.a22) / 2
        else:
            y[j - 1] = c * B.a11
            y[n - j - 1] = c * B.a22
    return PointGn(n, tuple(y), q)


def pi_hat(B: Mat2, n: int) -> PointGn:
    """``pi_map`` of ``[n/2]`` copies of one matrix; its image is J_n.

    Examples
    --------
    >>> from gtilde.linalg import Mat2
    >>> pi_hat(Mat2.zero(), 5) == PointGn.origin(5)
    True
    """
    return pi_map([B] * (n // 2), n)

"""Exact rational form of interpolants with polynomial Schur parameters."""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Any

import numpy as np

from gtilde._errors import DegenerateTarget, LengthMismatch, ParseError
from gtilde.factorization import PolyC
from gtilde.geometry import PointGn, binom, pair_indices
from gtilde.linalg import Mat2, defect_roots
from gtilde.utils import require

from ._schur import ConstantSchur, PolynomialSchur

if TYPE_CHECKING:
    from ._interpolant import Interpolant

# 2x2 matrices of polynomials, row-major
PolyMat = tuple[PolyC, PolyC, PolyC, PolyC]

_LAMBDA = PolyC([0, 1])


def _const(M: Mat2) -> PolyMat:
    a, b, c, d = (PolyC([e]) for e in M.entries())
    return (a, b, c, d)


def _mul(A: PolyMat, B: PolyMat) -> PolyMat:
    return (
        A[0] * B[0] + A[1] * B[2],
        A[0] * B[1] + A[1] * B[3],
        A[2] * B[0] + A[3] * B[2],
        A[2] * B[1] + A[3] * B[3],
    )


def _add(A: PolyMat, B: PolyMat) -> PolyMat:
    return (A[0] + B[0], A[1] + B[1], A[2] + B[2], A[3] + B[3])


def _scale(A: PolyMat, p: PolyC) -> PolyMat:
    return (A[0] * p, A[1] * p, A[2] * p, A[3] * p)


def _adj(A: PolyMat) -> PolyMat:
    return (A[3], -A[1], -A[2], A[0])


def _det(A: PolyMat) -> PolyC:
    return A[0] * A[3] - A[1] * A[2]


@dataclass(frozen=True)
class RationalCoordinates:
    """``psi_k = N_k / D`` for ``k = 1 ... n``; the last numerator is ``q``'s.

    ``D`` has no zero on the closed disc.
    """

    numerators: tuple[PolyC, ...]
    denominator: PolyC

    def __post_init__(self) -> None:
        object.__setattr__(self, "numerators", tuple(self.numerators))
        if len(self.numerators) < 2:
            raise LengthMismatch("Need at least two coordinate numerators")

    @property
    def n(self) -> int:
        return len(self.numerators)

    def coordinate(self, k: int, lam: Any) -> Any:
        """``psi_k(lam)`` (1-based ``k``)."""
        return self.numerators[k - 1](lam) / self.denominator(lam)

    def __call__(self, lam: complex) -> PointGn:
        d = self.denominator(lam)
        return PointGn.from_coords([p(lam) / d for p in self.numerators])

    def is_constant(self) -> bool:
        degrees = [p.degree for p in (*self.numerators, self.denominator)]
        return max(degrees) == 0

    def to_json(self) -> dict[str, Any]:
        return {
            "kind": "rational",
            "numerators": [p.to_json() for p in self.numerators],
            "denominator": self.denominator.to_json(),
        }

    @classmethod
    def from_json(cls, data: Any, path: str = "$") -> RationalCoordinates:
        raw = require(data, "numerators", path)
        if not isinstance(raw, list):
            raise ParseError(f"Expected a list at {path}.numerators", path=path)
        nums = tuple(
            PolyC.from_json(p, f"{path}.numerators[{i}]") for i, p in enumerate(raw)
        )
        den = data.get("denominator")
        denominator = PolyC([1]) if den is None else PolyC.from_json(den, path)
        try:
            return cls(nums, denominator)
        except LengthMismatch as e:
            raise ParseError(f"Invalid rational map at {path}: {e}", path=path) from e


def _schur_polys(psi: Interpolant) -> PolyMat:
    Q = psi.factors[0].Q
    if isinstance(Q, ConstantSchur):
        return _const(Q.q0)
    if isinstance(Q, PolynomialSchur):
        return Q.entry_polys()
    raise DegenerateTarget(
        f"Rational coordinates need a constant or polynomial Q, got {Q.kind!r}"
    )


def rational_coordinates(psi: Interpolant) -> RationalCoordinates:
    """Numerators and common denominator of an interpolant with polynomial ``Q``.

    With ``X_n = (lam0 - lam) Q`` and ``delta = 1 - conj(lam0) lam``::

        G = S1 (X_n + delta Z) adj(delta + Z* X_n) S2 / D,
        D = det(delta + Z* X_n),   psi_n = lam det(X_n + delta Z) / D

    where ``S1 = (1 - ZZ*)^(-1/2)`` and ``S2 = (1 - Z*Z)^(1/2)``.  ``D`` is
    normalized to ``D(0) = 1``.

    Raises
    ------
    DegenerateTarget
        If the factors differ between pairs or ``Q`` is a callable.
    """
    if not psi.shared:
        raise DegenerateTarget("Rational coordinates need a single shared factor")
    fac = psi.factors[0]
    Z, lam0 = fac.Z, fac.lam0
    xn = _scale(_schur_polys(psi), PolyC([lam0, -1]))
    delta = PolyC([1, -lam0.conjugate()])
    s1, s2, _ = defect_roots(Z)
    top = _add(xn, _scale(_const(Z), delta))
    resolvent = _add(_scale(_const(Mat2.identity()), delta), _mul(_const(Z.H), xn))
    den = _det(resolvent)
    g = _mul(_mul(_mul(_const(s1), top), _adj(resolvent)), _const(s2))
    f11, f22 = _LAMBDA * g[0], g[3]
    n = psi.n
    nums: list[PolyC] = [PolyC([0])] * n
    for j in pair_indices(n):
        c = binom(n, j)
        if 2 * j == n:
            nums[j - 1] = (f11 + f22) * (c / 2)
        else:
            nums[j - 1] = f11 * c
            nums[n - j - 1] = f22 * c
    nums[n - 1] = _LAMBDA * _det(top)
    scale = den(0j)
    if not np.isfinite(scale) or scale == 0:
        raise DegenerateTarget("Denominator vanishes at the origin")
    return RationalCoordinates(tuple(p / scale for p in nums), den / scale)

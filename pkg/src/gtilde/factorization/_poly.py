from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import TYPE_CHECKING, Any, Union, overload

import numpy as np
from numpy.polynomial import polynomial as P

from gtilde._errors import NoConvergence, ParseError, ZeroPolynomial
from gtilde.utils import decode_complex_list, encode_complex, resolve

if TYPE_CHECKING:
    from collections.abc import Iterable, Sequence

    from gtilde.utils import Tolerances

logger = logging.getLogger(__name__)

_TRIM = 1e-14


def _trim(coeffs: np.ndarray, rel: float = _TRIM) -> np.ndarray:
    scale = float(np.max(np.abs(coeffs))) if coeffs.size else 0.0
    if scale == 0:
        return np.zeros(1, dtype=complex)
    keep = np.nonzero(np.abs(coeffs) > rel * scale)[0]
    return coeffs[: keep[-1] + 1]


@dataclass(frozen=True)
class PolyC:
    """A complex polynomial ``c_0 + c_1 x + ... + c_d x^d`` (ascending order).

    Trailing coefficients below ``1e-14`` times the largest one are trimmed,
    so the leading coefficient is nonzero unless the polynomial is zero.

    Examples
    --------
    >>> p = PolyC([0, 0, 1])
    >>> p.degree, p(2)
    (2, (4+0j))
    """

    coeffs: tuple[complex, ...]

    def __post_init__(self) -> None:
        arr = np.asarray(self.coeffs, dtype=complex).ravel()
        object.__setattr__(self, "coeffs", tuple(complex(c) for c in _trim(arr)))

    @classmethod
    def from_roots(cls, roots: Iterable[complex], lead: complex = 1) -> PolyC:
        """``lead * prod(x - r)``."""
        roots = list(roots)
        if not roots:
            return cls([lead])
        return cls(lead * P.polyfromroots(np.asarray(roots, dtype=complex)))

    @classmethod
    def monomial(cls, k: int, c: complex = 1) -> PolyC:
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> complex:
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return self.coeffs == (0j,)

    def to_array(self) -> np.ndarray:
        return np.array(self.coeffs, dtype=complex)

    @overload
    def __call__(self, x: complex) -> complex: ...
    @overload
    def __call__(self, x: np.ndarray) -> np.ndarray: ...
    def __call__(self, x: complex | np.ndarray) -> complex | np.ndarray:
        value = P.polyval(x, self.to_array())
        return complex(value) if np.ndim(value) == 0 else value

    def derivative(self) -> PolyC:
        if self.degree == 0:
            return PolyC([0])
        return PolyC(P.polyder(self.to_array()))

    def __add__(self, other: PolyLike) -> PolyC:
        return PolyC(P.polyadd(self.to_array(), _as_array(other)))

    __radd__ = __add__

    def __sub__(self, other: PolyLike) -> PolyC:
        return PolyC(P.polysub(self.to_array(), _as_array(other)))

    def __rsub__(self, other: PolyLike) -> PolyC:
        return PolyC(P.polysub(_as_array(other), self.to_array()))

    def __neg__(self) -> PolyC:
        return PolyC(-self.to_array())

    def __mul__(self, other: PolyLike) -> PolyC:
        return PolyC(P.polymul(self.to_array(), _as_array(other)))

    __rmul__ = __mul__

    def __truediv__(self, s: complex) -> PolyC:
        return PolyC(self.to_array() / s)

    def max_abs_diff(self, other: PolyC) -> float:
        return float(np.max(np.abs(P.polysub(self.to_array(), other.to_array()))))

    def to_json(self) -> list[list[float]]:
        return [encode_complex(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Any, path: str = "$") -> PolyC:
        coeffs = decode_complex_list(data, path)
        if not coeffs:
            raise ParseError(f"Empty coefficient list at {path}", path=path)
        return cls(coeffs)


PolyLike = Union[PolyC, complex, float, int]


def _as_array(p: PolyLike) -> np.ndarray:
    if isinstance(p, PolyC):
        return p.to_array()
    return np.array([complex(p)])


def _residual_scale(coeffs: np.ndarray, z: np.ndarray) -> np.ndarray:
    # sum_k |c_k| |z|^k
    return P.polyval(np.abs(z), np.abs(coeffs))


def poly_roots(
    p: PolyC | Sequence[complex], tol: Tolerances | None = None
) -> list[complex]:
    """All roots of ``p`` with multiplicity.

    Zero roots are deflated exactly; the others are seeded by companion
    matrix eigenvalues and polished by Aberth simultaneous iteration until
    ``|p(z)| <= tol.root_residual * sum_k |c_k| |z|^k`` at every root.

    Raises
    ------
    ZeroPolynomial
        If ``p`` is identically zero.
    NoConvergence
        If the polish does not meet its target within ``tol.root_max_iter``
        sweeps.

    Examples
    --------
    >>> sorted(round(r.real, 12) for r in poly_roots(PolyC([-1, 0, 1])))
    [-1.0, 1.0]
    """
    tol = resolve(tol)
    p = p if isinstance(p, PolyC) else PolyC(p)
    if p.is_zero():
        raise ZeroPolynomial("Cannot find the roots of the zero polynomial")
    coeffs = p.to_array()
    scale = float(np.max(np.abs(coeffs)))
    nz = 0
    while nz < len(coeffs) - 1 and abs(coeffs[nz]) <= tol.root_trim * scale:
        nz += 1
    zeros = [0j] * nz
    reduced = coeffs[nz:]
    if len(reduced) == 1:
        return zeros
    z = P.polyroots(reduced).astype(complex)
    deriv = P.polyder(reduced)
    for it in range(int(tol.root_max_iter)):
        value = P.polyval(z, reduced)
        done = np.abs(value) <= tol.root_residual * _residual_scale(reduced, z)
        if done.all():
            logger.debug("roots polished after %d sweeps", it)
            return zeros + [complex(r) for r in z]
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = value / P.polyval(z, deriv)
            diff = z[:, None] - z[None, :]
            np.fill_diagonal(diff, np.inf)
            repulsion = np.sum(1 / diff, axis=1)
            step = ratio / (1 - ratio * repulsion)
        step = np.where(done | ~np.isfinite(step), 0, step)
        z = z - step
    raise NoConvergence(
        f"Root polish did not converge in {tol.root_max_iter} iterations",
        degree=p.degree,
    )

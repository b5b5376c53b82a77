from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import TYPE_CHECKING, Any, Union, overload

import numpy as np

from gtilde._errors import NotHermitian, ParseError, SingularResolvent
from gtilde.utils import decode_complex_list, encode_complex, resolve

if TYPE_CHECKING:
    from collections.abc import Iterator

    from gtilde.utils import Tolerances

Scalar = Union[complex, float, int]


@dataclass(frozen=True)
class Vec2:
    """A vector of :math:`\\mathbb{C}^2`."""

    c1: complex = 0j
    c2: complex = 0j

    def __post_init__(self) -> None:
        object.__setattr__(self, "c1", complex(self.c1))
        object.__setattr__(self, "c2", complex(self.c2))

    def __iter__(self) -> Iterator[complex]:
        yield self.c1
        yield self.c2

    def __add__(self, other: Vec2) -> Vec2:
        return Vec2(self.c1 + other.c1, self.c2 + other.c2)

    def __sub__(self, other: Vec2) -> Vec2:
        return Vec2(self.c1 - other.c1, self.c2 - other.c2)

    def __neg__(self) -> Vec2:
        return Vec2(-self.c1, -self.c2)

    def __mul__(self, s: Scalar) -> Vec2:
        return Vec2(self.c1 * s, self.c2 * s)

    __rmul__ = __mul__

    def __truediv__(self, s: Scalar) -> Vec2:
        return Vec2(self.c1 / s, self.c2 / s)

    def conj(self) -> Vec2:
        return Vec2(self.c1.conjugate(), self.c2.conjugate())

    def norm2(self) -> float:
        """Squared Euclidean norm."""
        return abs(self.c1) ** 2 + abs(self.c2) ** 2

    def norm(self) -> float:
        return math.hypot(abs(self.c1), abs(self.c2))

    def vdot(self, other: Vec2) -> complex:
        """Inner product ``<self, other>``, conjugate linear in `other`."""
        return self.c1 * other.c1.conjugate() + self.c2 * other.c2.conjugate()

    def is_zero(self) -> bool:
        return self.c1 == 0 and self.c2 == 0

    def to_array(self) -> np.ndarray:
        return np.array([self.c1, self.c2], dtype=complex)

    @classmethod
    def from_array(cls, arr: Any) -> Vec2:
        a = np.asarray(arr, dtype=complex).reshape(2)
        return cls(complex(a[0]), complex(a[1]))

    def to_json(self) -> list[list[float]]:
        return [encode_complex(self.c1), encode_complex(self.c2)]

    @classmethod
    def from_json(cls, data: Any, path: str = "$") -> Vec2:
        values = decode_complex_list(data, path)
        if len(values) != 2:
            raise ParseError(f"Expected 2 entries at {path}", path=path)
        return cls(*values)


@dataclass(frozen=True)
class Mat2:
    """A 2x2 complex matrix ``[[a11, a12], [a21, a22]]``.

    Examples
    --------
    >>> Mat2.diag(2, 3).det()
    (6+0j)
    """

    a11: complex = 0j
    a12: complex = 0j
    a21: complex = 0j
    a22: complex = 0j

    def __post_init__(self) -> None:
        for name in ("a11", "a12", "a21", "a22"):
            object.__setattr__(self, name, complex(getattr(self, name)))

    # ------------------------------------------------------------ constructors

    @classmethod
    def identity(cls) -> Mat2:
        return cls(1, 0, 0, 1)

    @classmethod
    def zero(cls) -> Mat2:
        return cls()

    @classmethod
    def diag(cls, d1: Scalar, d2: Scalar) -> Mat2:
        return cls(d1, 0, 0, d2)

    @classmethod
    def from_array(cls, arr: Any) -> Mat2:
        a = np.asarray(arr, dtype=complex).reshape(2, 2)
        return cls(*(complex(x) for x in a.ravel()))

    @classmethod
    def from_columns(cls, c1: Vec2, c2: Vec2) -> Mat2:
        return cls(c1.c1, c2.c1, c1.c2, c2.c2)

    @classmethod
    def outer(cls, u: Vec2, v: Vec2) -> Mat2:
        """The rank one matrix ``u v*``."""
        vb = v.conj()
        return cls(u.c1 * vb.c1, u.c1 * vb.c2, u.c2 * vb.c1, u.c2 * vb.c2)

    # ------------------------------------------------------------- accessors

    def entries(self) -> tuple[complex, complex, complex, complex]:
        return (self.a11, self.a12, self.a21, self.a22)

    def to_array(self) -> np.ndarray:
        return np.array([[self.a11, self.a12], [self.a21, self.a22]], dtype=complex)

    def col(self, k: int) -> Vec2:
        """Column ``k`` (1-based)."""
        if k == 1:
            return Vec2(self.a11, self.a21)
        if k == 2:
            return Vec2(self.a12, self.a22)
        raise IndexError(f"Column index must be 1 or 2, got {k!r}")

    # ------------------------------------------------------------- algebra

    def __add__(self, other: Mat2) -> Mat2:
        return Mat2(*(x + y for x, y in zip(self.entries(), other.entries())))

    def __sub__(self, other: Mat2) -> Mat2:
        return Mat2(*(x - y for x, y in zip(self.entries(), other.entries())))

    def __neg__(self) -> Mat2:
        return Mat2(-self.a11, -self.a12, -self.a21, -self.a22)

    def __mul__(self, s: Scalar) -> Mat2:
        return Mat2(*(x * s for x in self.entries()))

    __rmul__ = __mul__

    def __truediv__(self, s: Scalar) -> Mat2:
        return Mat2(*(x / s for x in self.entries()))

    @overload
    def __matmul__(self, other: Mat2) -> Mat2: ...
    @overload
    def __matmul__(self, other: Vec2) -> Vec2: ...
    def __matmul__(self, other: Mat2 | Vec2) -> Mat2 | Vec2:
        if isinstance(other, Vec2):
            return Vec2(
                self.a11 * other.c1 + self.a12 * other.c2,
                self.a21 * other.c1 + self.a22 * other.c2,
            )
        if isinstance(other, Mat2):
            return Mat2(
                self.a11 * other.a11 + self.a12 * other.a21,
                self.a11 * other.a12 + self.a12 * other.a22,
                self.a21 * other.a11 + self.a22 * other.a21,
                self.a21 * other.a12 + self.a22 * other.a22,
            )
        return NotImplemented

    @property
    def H(self) -> Mat2:
        """Conjugate transpose."""
        return Mat2(
            self.a11.conjugate(),
            self.a21.conjugate(),
            self.a12.conjugate(),
            self.a22.conjugate(),
        )

    @property
    def T(self) -> Mat2:
        return Mat2(self.a11, self.a21, self.a12, self.a22)

    def conj(self) -> Mat2:
        return Mat2(*(x.conjugate() for x in self.entries()))

    def det(self) -> complex:
        return self.a11 * self.a22 - self.a12 * self.a21

    def trace(self) -> complex:
        return self.a11 + self.a22

    def adj(self) -> Mat2:
        """Adjugate, so that ``M @ M.adj() == det(M) * I``."""
        return Mat2(self.a22, -self.a12, -self.a21, self.a11)

    def frobenius2(self) -> float:
        return sum(abs(x) ** 2 for x in self.entries())

    def inv(self, tol: Tolerances | None = None) -> Mat2:
        """Inverse, raising SingularResolvent when numerically singular."""
        tol = resolve(tol)
        cond = condition_number(self)
        if not cond < tol.singular_cond:
            raise SingularResolvent(
                f"Matrix is numerically singular (condition number {cond:.3g})",
                cond=cond,
            )
        return self.adj() / self.det()

    def max_abs_diff(self, other: Mat2) -> float:
        return max(abs(x - y) for x, y in zip(self.entries(), other.entries()))

    def allclose(self, other: Mat2, atol: float = 1e-12) -> bool:
        return self.max_abs_diff(other) <= atol

    def is_hermitian(self, atol: float = 1e-10) -> bool:
        return self.max_abs_diff(self.H) <= atol

    # ---------------------------------------------------------------- JSON

    def to_json(self) -> list[list[float]]:
        """Row-major list of four ``[re, im]`` pairs."""
        return [encode_complex(x) for x in self.entries()]

    @classmethod
    def from_json(cls, data: Any, path: str = "$") -> Mat2:
        if isinstance(data, list) and len(data) == 2 and all(
            isinstance(r, list) and len(r) == 2 and isinstance(r[0], list)
            for r in data
        ):
            data = [*data[0], *data[1]]
        values = decode_complex_list(data, path)
        if len(values) != 4:
            raise ParseError(f"Expected 4 matrix entries at {path}", path=path)
        return cls(*values)


def _gram_gap(A: Mat2) -> tuple[float, float]:
    """Trace and eigenvalue gap of ``A A*``, computed without cancellation."""
    r1 = abs(A.a11) ** 2 + abs(A.a12) ** 2
    r2 = abs(A.a21) ** 2 + abs(A.a22) ** 2
    c = A.a11 * A.a21.conjugate() + A.a12 * A.a22.conjugate()
    # (r1 - r2)^2 + 4|c|^2 == t^2 - 4|det A|^2
    return r1 + r2, math.hypot(r1 - r2, 2 * abs(c))


def op_norm(M: Mat2) -> float:
    """Operator (spectral) norm of a 2x2 matrix in closed form.

    With ``t = sum |a_ij|^2`` and ``delta = |det M|^2`` the largest singular
    value satisfies ``||M||^2 = (t + sqrt(t^2 - 4 delta)) / 2``.

    Examples
    --------
    >>> op_norm(Mat2(1, 1, 0, 1))  # golden ratio
    1.618033988749895
    """
    t, gap = _gram_gap(M)
    return math.sqrt((t + gap) / 2)


def singular_values(M: Mat2) -> tuple[float, float]:
    """Both singular values, largest first."""
    t, gap = _gram_gap(M)
    s1sq = (t + gap) / 2
    if s1sq == 0:
        return (0.0, 0.0)
    return (math.sqrt(s1sq), math.sqrt(abs(M.det()) ** 2 / s1sq))


def condition_number(M: Mat2) -> float:
    s1, s2 = singular_values(M)
    if s2 == 0:
        return math.inf
    return s1 / s2


def spectral_radius(M: Mat2) -> float:
    """Largest eigenvalue modulus."""
    half_tr = M.trace() / 2
    disc = cmath.sqrt(half_tr * half_tr - M.det())
    return max(abs(half_tr + disc), abs(half_tr - disc))


def _check_hermitian(H: Mat2, tol: Tolerances) -> None:
    err = H.max_abs_diff(H.H)
    if err > tol.hermitian:
        raise NotHermitian(
            f"Matrix is not Hermitian (max |H - H*| = {err:.3g})", error=err
        )


def _fix_phase(vec: np.ndarray) -> np.ndarray:
    # first non-negligible component real and positive
    for x in vec:
        if abs(x) > 1e-12:
            return vec * (abs(x) / x)
    return vec


def hermitian_min_eig(H: Mat2, tol: Tolerances | None = None) -> tuple[float, Vec2]:
    """Smallest eigenvalue of a Hermitian matrix and a unit eigenvector.

    The eigenvector's phase is fixed so that its first non-negligible
    component is real and positive.

    Raises
    ------
    NotHermitian
        If ``H`` differs from its conjugate transpose by more than
        ``tol.hermitian``.
    """
    tol = resolve(tol)
    _check_hermitian(H, tol)
    arr = H.to_array()
    w, v = np.linalg.eigh((arr + arr.conj().T) / 2)
    return float(w[0]), Vec2.from_array(_fix_phase(v[:, 0]))


def hermitian_power(H: Mat2, p: float, tol: Tolerances | None = None) -> Mat2:
    """Spectral power ``H^p`` of a positive semidefinite Hermitian matrix.

    Eigenvalues are clipped below at ``tol.eig_clip`` before the power is
    taken.
    """
    tol = resolve(tol)
    _check_hermitian(H, tol)
    arr = H.to_array()
    w, v = np.linalg.eigh((arr + arr.conj().T) / 2)
    w = np.maximum(w, tol.eig_clip) ** p
    return Mat2.from_array((v * w) @ v.conj().T)

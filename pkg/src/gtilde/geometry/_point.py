from __future__ import annotations

import math
from dataclasses import dataclass
from typing import TYPE_CHECKING, Any

import numpy as np

from gtilde._errors import (
    DimensionTooSmall,
    LengthMismatch,
    ParseError,
    QOnBoundary,
)
from gtilde.utils import (
    decode_complex,
    decode_complex_list,
    encode_complex,
    require,
    resolve,
)

if TYPE_CHECKING:
    from collections.abc import Iterable, Sequence

    from gtilde.utils import Tolerances


def binom(n: int, j: int) -> int:
    """The binomial weight ``C(n, j)``."""
    return math.comb(n, j)


def pair_indices(n: int) -> range:
    """Pair indices ``j = 1 ... [n/2]``, coupling ``y_j`` with ``y_{n-j}``."""
    return range(1, n // 2 + 1)


@dataclass(frozen=True)
class PointGn:
    """A candidate point ``(y_1, ..., y_{n-1}, q)`` of ``C^n``.

    Parameters
    ----------
    n : int
        Dimension, at least 2.
    y : sequence of complex
        The ``n - 1`` coordinates ``y_1 ... y_{n-1}``.
    q : complex
        The last coordinate.

    Examples
    --------
    >>> p = PointGn(3, (0.3, 0.12), 0.0015)
    >>> p.coord(2), p.coord(3)
    ((0.12+0j), (0.0015+0j))
    """

    n: int
    y: tuple[complex, ...]
    q: complex = 0j

    def __post_init__(self) -> None:
        if not isinstance(self.n, (int, np.integer)) or isinstance(self.n, bool):
            raise TypeError(f"n must be an integer, got {self.n!r}")
        if self.n < 2:
            raise DimensionTooSmall(f"n must be >= 2, got {self.n!r}", n=self.n)
        ys = tuple(complex(v) for v in self.y)
        if len(ys) != self.n - 1:
            raise LengthMismatch(
                f"Expected {self.n - 1} coordinates y_1..y_{self.n - 1}, "
                f"got {len(ys)}",
                expected=self.n - 1,
                got=len(ys),
            )
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "y", ys)
        object.__setattr__(self, "q", complex(self.q))

    @classmethod
    def origin(cls, n: int) -> PointGn:
        return cls(n, (0j,) * (n - 1), 0j)

    @classmethod
    def from_coords(cls, coords: Sequence[complex]) -> PointGn:
        """Build from the flat list ``(y_1, ..., y_{n-1}, q)``."""
        return cls(len(coords), tuple(coords[:-1]), coords[-1])

    def coord(self, k: int) -> complex:
        """Coordinate ``k`` (1-based); ``k = n`` is ``q``."""
        if k == self.n:
            return self.q
        if not 1 <= k < self.n:
            raise IndexError(f"Coordinate index must be in 1..{self.n}, got {k!r}")
        return self.y[k - 1]

    def coords(self) -> tuple[complex, ...]:
        return (*self.y, self.q)

    def scaled(self, t: float) -> PointGn:
        return PointGn(self.n, tuple(t * v for v in self.y), t * self.q)

    def max_abs_diff(self, other: PointGn) -> float:
        if other.n != self.n:
            raise LengthMismatch(f"Dimension mismatch: {self.n} vs {other.n}")
        return max(abs(a - b) for a, b in zip(self.coords(), other.coords()))

    def to_json(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "y": [encode_complex(v) for v in self.y],
            "q": encode_complex(self.q),
        }

    @classmethod
    def from_json(cls, data: Any, path: str = "$") -> PointGn:
        n = require(data, "n", path)
        if not isinstance(n, int) or isinstance(n, bool):
            raise ParseError(f"Expected integer n at {path}.n, got {n!r}")
        y = decode_complex_list(require(data, "y", path), f"{path}.y")
        q = decode_complex(require(data, "q", path), f"{path}.q")
        try:
            return cls(n, tuple(y), q)
        except (DimensionTooSmall, LengthMismatch) as e:
            raise ParseError(f"Invalid point at {path}: {e}", path=path) from e


@dataclass(frozen=True)
class MembershipReport:
    """Outcome of the interior membership test.

    ``inside`` holds exactly when every pair slack and the ``q`` slack exceed
    the membership margin tolerance.
    """

    inside: bool
    margins: tuple[float, ...]
    q_margin: float

    @property
    def worst_margin(self) -> float:
        return min((*self.margins, self.q_margin))


def beta_coeffs(y: PointGn) -> list[complex]:
    """Solve ``y_j = beta_j + conj(beta_{n-j}) q`` for every ``j = 1 ... n-1``.

    ``beta_j = (y_j - q conj(y_{n-j})) / (1 - |q|^2)``.

    Raises
    ------
    QOnBoundary
        If ``|q| >= 1``.

    Examples
    --------
    >>> beta_coeffs(PointGn(2, (1.0,), 0.25))
    [(0.8+0j)]
    """
    q = y.q
    denom = 1 - abs(q) ** 2
    if not denom > 0:
        raise QOnBoundary(f"Require |q| < 1, got |q| = {abs(q)!r}", abs_q=abs(q))
    n = y.n
    return [(y.coord(j) - q * y.coord(n - j).conjugate()) / denom for j in range(1, n)]


def in_gtilde(y: PointGn, tol: Tolerances | None = None) -> MembershipReport:
    """Interior membership: ``|q| < 1`` and ``|beta_j| + |beta_{n-j}| < C(n, j)``.

    ``margins[j-1]`` is the slack ``C(n, j) - |beta_j| - |beta_{n-j}|`` for
    ``j = 1 ... n-1`` (symmetric in ``j <-> n-j``).  When ``|q| >= 1`` no beta
    exists and ``margins`` is empty.
    """
    tol = resolve(tol)
    q_margin = 1 - abs(y.q)
    if not q_margin > 0:
        return MembershipReport(False, (), q_margin)
    beta = beta_coeffs(y)
    n = y.n
    margins = tuple(
        binom(n, j) - abs(beta[j - 1]) - abs(beta[n - j - 1]) for j in range(1, n)
    )
    inside = q_margin > tol.margin and all(m > tol.margin for m in margins)
    return MembershipReport(inside, margins, q_margin)


def gtilde_margin_batch(n: int, coords: np.ndarray) -> np.ndarray:
    """Worst membership slack for a stack of points.

    Parameters
    ----------
    n : int
        Dimension.
    coords : np.ndarray
        Shape ``(N, n)`` array of ``(y_1, ..., y_{n-1}, q)`` rows.

    Returns
    -------
    np.ndarray
        Shape ``(N,)``; positive exactly where the point is interior.
    """
    coords = np.asarray(coords, dtype=complex)
    y, q = coords[:, :-1], coords[:, -1]
    q_margin = 1 - np.abs(q)
    denom = 1 - np.abs(q) ** 2
    safe = np.where(denom > 0, denom, 1.0)
    worst = q_margin.copy()
    for j in range(1, n):
        yj, ynj = y[:, j - 1], y[:, n - j - 1]
        bj = (yj - q * ynj.conj()) / safe
        bnj = (ynj - q * yj.conj()) / safe
        worst = np.minimum(worst, binom(n, j) - np.abs(bj) - np.abs(bnj))
    return np.where(denom > 0, worst, np.minimum(q_margin, 0.0))


def symmetrize(zs: Iterable[complex]) -> PointGn:
    """The elementary symmetric map ``(z_1..z_n) -> (s_1, ..., s_{n-1}, s_n)``.

    Points in the image of the open polydisc lie in the classical
    symmetrized polydisc, which is contained in the extended one.

    Examples
    --------
    >>> symmetrize([0.5, 0.5])
    PointGn(n=2, y=((1+0j),), q=(0.25+0j))
    """
    zs = [complex(z) for z in zs]
    n = len(zs)
    # np.poly gives the coefficients of prod(x - z_i), i.e. (-1)^k s_k
    coeffs = np.poly(np.array(zs, dtype=complex)) if n else np.array([1.0])
    s = [complex((-1) ** k * coeffs[k]) + 0j for k in range(n + 1)]
    return PointGn(n, tuple(s[1:n]), s[n])

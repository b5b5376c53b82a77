"""Matrix valued Schur class parameters ``Q``."""

from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import TYPE_CHECKING, Any, Callable

import numpy as np

from gtilde._errors import NotSchur, ParseError
from gtilde.factorization import PolyC
from gtilde.linalg import Mat2, op_norm, op_norm_batch
from gtilde.utils import accepts_one_positional, require, resolve

if TYPE_CHECKING:
    from collections.abc import Sequence

    from gtilde.utils import Tolerances

#: Radius and sample count of the circle used to validate Schur parameters.
VALIDATION_RADIUS = 0.999
VALIDATION_SAMPLES = 360


class SchurFunction(ABC):
    """An analytic ``2x2`` matrix function of norm at most one on the disc."""

    kind: str

    @abstractmethod
    def __call__(self, lam: complex) -> Mat2:
        """Evaluate at one point of the disc."""

    def batch(self, lams: np.ndarray) -> np.ndarray:
        """Evaluate at many points; returns shape ``(N, 2, 2)``."""
        lams = np.asarray(lams, dtype=complex).ravel()
        out = np.empty((lams.size, 2, 2), dtype=complex)
        for k, lam in enumerate(lams):
            out[k] = self(complex(lam)).to_array()
        return out

    def at_zero(self) -> Mat2:
        return self(0j)

    def sup_norm(
        self, radius: float = VALIDATION_RADIUS, samples: int = VALIDATION_SAMPLES
    ) -> float:
        """Largest sampled operator norm on the circle ``|lam| = radius``."""
        lams = radius * np.exp(2j * np.pi * np.arange(samples) / samples)
        return float(op_norm_batch(self.batch(lams)).max())

    def validate(self, tol: Tolerances | None = None) -> float:
        """Check the sampled sup norm against one, returning it.

        Raises
        ------
        NotSchur
            If the sampled norm exceeds ``1 + tol.schur_slack``.
        """
        tol = resolve(tol)
        norm = self.sup_norm()
        if norm > 1 + tol.schur_slack:
            raise NotSchur(
                f"Sampled sup norm {norm!r} of the Schur parameter exceeds one",
                norm=norm,
            )
        return norm

    @abstractmethod
    def to_json(self) -> dict[str, Any]: ...


@dataclass(frozen=True)
class ConstantSchur(SchurFunction):
    """The constant function ``Q(lam) = q0``."""

    q0: Mat2
    kind = "constant"

    def __call__(self, lam: complex) -> Mat2:
        return self.q0

    def batch(self, lams: np.ndarray) -> np.ndarray:
        n = np.asarray(lams).size
        return np.broadcast_to(self.q0.to_array(), (n, 2, 2)).copy()

    def sup_norm(
        self, radius: float = VALIDATION_RADIUS, samples: int = VALIDATION_SAMPLES
    ) -> float:
        return op_norm(self.q0)

    def to_json(self) -> dict[str, Any]:
        return {"type": self.kind, "q0": self.q0.to_json()}


@dataclass(frozen=True)
class PolynomialSchur(SchurFunction):
    """``Q(lam) = sum_k lam^k C_k`` with matrix coefficients in ascending order."""

    coeffs: tuple[Mat2, ...]
    kind = "polynomial"

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if not self.coeffs:
            raise ValueError("PolynomialSchur needs at least one coefficient")

    def __call__(self, lam: complex) -> Mat2:
        out = Mat2.zero()
        for c in reversed(self.coeffs):
            out = out * lam + c
        return out

    def batch(self, lams: np.ndarray) -> np.ndarray:
        lams = np.asarray(lams, dtype=complex).ravel()
        out = np.zeros((lams.size, 2, 2), dtype=complex)
        for c in reversed(self.coeffs):
            out = out * lams[:, None, None] + c.to_array()
        return out

    def entry_polys(self) -> tuple[PolyC, PolyC, PolyC, PolyC]:
        """The four entries as scalar polynomials, row-major."""
        entries = list(zip(*(c.entries() for c in self.coeffs)))
        return tuple(PolyC(e) for e in entries)  # type: ignore[return-value]

    def to_json(self) -> dict[str, Any]:
        return {"type": self.kind, "coeffs": [c.to_json() for c in self.coeffs]}


@dataclass(frozen=True)
class CallableSchur(SchurFunction):
    """A caller supplied evaluator ``lam -> Mat2``.

    Only validated by sampling, and not serializable beyond its kind.
    """

    func: Callable[[complex], Mat2]
    kind = "callable"

    def __post_init__(self) -> None:
        if not callable(self.func) or not accepts_one_positional(self.func):
            raise TypeError(
                f"Schur evaluator must accept a single argument, got {self.func!r}"
            )

    def __call__(self, lam: complex) -> Mat2:
        value = self.func(lam)
        if not isinstance(value, Mat2):
            value = Mat2.from_array(value)
        return value

    def to_json(self) -> dict[str, Any]:
        return {"type": self.kind}


def tail_polynomial(q0: Mat2, tail: Mat2) -> PolynomialSchur:
    """The Schur polynomial ``q0 + lam E`` with ``E`` a rescaled `tail`.

    ``E`` is `tail` scaled down if needed so that ``||q0|| + ||E|| <= 1``,
    which bounds the norm by one on the closed disc while keeping
    ``Q(0) = q0``.
    """
    head = op_norm(q0)
    size = op_norm(tail)
    room = max(0.0, 1 - head)
    if size > room:
        tail = tail * (room / size) if size > 0 else tail
    return PolynomialSchur((q0, tail))


def schur_from_json(data: Any, path: str = "$") -> SchurFunction:
    kind = require(data, "type", path)
    if kind == ConstantSchur.kind:
        return ConstantSchur(Mat2.from_json(require(data, "q0", path), f"{path}.q0"))
    if kind == PolynomialSchur.kind:
        raw: Sequence[Any] = require(data, "coeffs", path)
        if not isinstance(raw, list) or not raw:
            raise ParseError(f"Expected a non-empty list at {path}.coeffs", path=path)
        return PolynomialSchur(
            tuple(Mat2.from_json(c, f"{path}.coeffs[{i}]") for i, c in enumerate(raw))
        )
    raise ParseError(f"Unsupported Schur parameter type {kind!r} at {path}", path=path)

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

import numpy as np

from gtilde._errors import OutsideDisc, ParseError, QConstraintViolated
from gtilde.linalg import Mat2, Vec2, mobius, mobius_batch, require_contraction
from gtilde.schwarz import blaschke_b
from gtilde.utils import decode_complex, encode_complex, require, resolve

from ._schur import ConstantSchur, SchurFunction, schur_from_json


@dataclass(frozen=True)
class InterpolantFactor:
    """``F(lam) = M_{-Z}(B(lam) Q(lam)) diag(lam, 1)`` for one coordinate pair.

    Parameters
    ----------
    Z : Mat2
        Strict contraction, the value ``F(lam0) diag(1/lam0, 1)``.
    lam0 : complex
        Interpolation node.
    Q : SchurFunction
        Schur parameter; ``[M_{-Z}(lam0 Q(0))]_22`` must vanish so that
        ``F(0)`` has a zero diagonal.
    j : int
        Pair index.
    nu, alpha : optional
        Parameters the factor was built from, kept for reporting.

    Raises
    ------
    NotContraction
        If ``||Z|| >= 1``.
    QConstraintViolated
        If the ``Q(0)`` constraint fails beyond ``tol.q_constraint``.
    """

    Z: Mat2
    lam0: complex
    Q: SchurFunction
    j: int = 1
    nu: float | None = None
    alpha: Vec2 | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "lam0", complex(self.lam0))
        require_contraction(self.Z)
        tol = resolve(None)
        g0 = mobius(-self.Z, self.Q.at_zero() * self.lam0, tol)
        if abs(g0.a22) > tol.q_constraint:
            raise QConstraintViolated(
                f"Q(0) violates the interpolation constraint "
                f"(|[M(B Q)(0)]_22| = {abs(g0.a22)!r})",
                residual=abs(g0.a22),
                j=self.j,
            )

    def inner(self, lam: complex) -> Mat2:
        """``G(lam) = M_{-Z}(B(lam) Q(lam))``."""
        return mobius(-self.Z, self.Q(lam) * blaschke_b(self.lam0, lam))

    def to_json(self) -> dict[str, Any]:
        return {
            "j": self.j,
            "Z": self.Z.to_json(),
            "lam0": encode_complex(self.lam0),
            "nu": self.nu,
            "alpha": None if self.alpha is None else self.alpha.to_json(),
            "Q": self.Q.to_json(),
        }

    @classmethod
    def from_json(cls, data: Any, path: str = "$") -> InterpolantFactor:
        alpha = data.get("alpha") if isinstance(data, dict) else None
        nu = data.get("nu") if isinstance(data, dict) else None
        if nu is not None and not isinstance(nu, (int, float)):
            raise ParseError(f"Expected a number at {path}.nu", path=path)
        return cls(
            Z=Mat2.from_json(require(data, "Z", path), f"{path}.Z"),
            lam0=decode_complex(require(data, "lam0", path), f"{path}.lam0"),
            Q=schur_from_json(require(data, "Q", path), f"{path}.Q"),
            j=int(require(data, "j", path)),
            nu=None if nu is None else float(nu),
            alpha=None if alpha is None else Vec2.from_json(alpha, f"{path}.alpha"),
        )


def _check_disc(lam: complex) -> None:
    if not abs(lam) < 1:
        raise OutsideDisc(f"lam must lie in the open unit disc, got {lam!r}", lam=lam)


def eval_factor(fac: InterpolantFactor, lam: complex) -> Mat2:
    """Evaluate ``F(lam)``; a strict contraction for ``|lam| < 1``.

    ``F(0)`` has zero diagonal and ``F(lam0) = Z diag(lam0, 1)``.

    Raises
    ------
    OutsideDisc
        If ``|lam| >= 1``.
    """
    lam = complex(lam)
    _check_disc(lam)
    return fac.inner(lam) @ Mat2.diag(lam, 1)


def eval_factor_batch(fac: InterpolantFactor, lams: np.ndarray) -> np.ndarray:
    """:func:`eval_factor` on an array of points; returns shape ``(N, 2, 2)``."""
    lams = np.asarray(lams, dtype=complex).ravel()
    if lams.size and not float(np.abs(lams).max()) < 1:
        raise OutsideDisc("Every lam must lie in the open unit disc")
    x = fac.Q.batch(lams) * blaschke_b(fac.lam0, lams)[:, None, None]
    g = mobius_batch(-fac.Z, x)
    g[:, :, 0] *= lams[:, None]
    return g


def constant_factor(
    Z: Mat2, lam0: complex, q0: Mat2, j: int = 1, **kwargs: Any
) -> InterpolantFactor:
    """Factor with the constant Schur parameter ``q0``."""
    return InterpolantFactor(Z, lam0, ConstantSchur(q0), j, **kwargs)

"""Exception hierarchy shared by every gtilde module.

Every error carries a stable machine-readable ``code`` (the class name unless
overridden) and a ``context`` dict with the measured quantities that triggered
it.  The command line front end serializes both.
"""

from __future__ import annotations

from typing import Any, ClassVar

__all__ = [
    "ConfigError",
    "DegenerateTarget",
    "DetInconsistent",
    "DeterminantMismatch",
    "DimensionTooSmall",
    "DomainError",
    "DuplicateNodes",
    "FactorizationFailed",
    "GtildeError",
    "HypothesisViolated",
    "LengthMismatch",
    "NoConvergence",
    "NodeNotInBall",
    "NotContraction",
    "NotHermitian",
    "NotInterior",
    "NotSchur",
    "NuOutOfRange",
    "NumericalError",
    "OutsideDisc",
    "ParseError",
    "PoleHit",
    "PoleOnDisc",
    "QConstraintViolated",
    "QNotContractive",
    "QOnBoundary",
    "RootOnOriginMissing",
    "SingularResolvent",
    "ZeroAlpha",
    "ZeroPolynomial",
    "ZeroU",
]


class GtildeError(Exception):
    """Base class for all errors raised by gtilde.

    Parameters
    ----------
    message : str
        Human readable description.
    **context : Any
        Measured quantities explaining the failure (slack values, norms, ...).
    """

    code: ClassVar[str] = "GtildeError"

    def __init_subclass__(cls, **kwargs: Any) -> None:
        super().__init_subclass__(**kwargs)
        if "code" not in cls.__dict__:
            cls.code = cls.__name__

    def __init__(self, message: str, **context: Any) -> None:
        super().__init__(message)
        self.message = message
        self.context: dict[str, Any] = context

    def as_dict(self) -> dict[str, Any]:
        """Return the ``{"code", "message", "context"}`` error payload."""
        return {"code": self.code, "message": self.message, "context": self.context}


# ---------------------------------------------------------------- input domain


class DomainError(GtildeError, ValueError):
    """An argument lies outside the domain of the operation."""


class NotContraction(DomainError):
    """A matrix required to be a strict contraction has norm >= 1."""


class SingularResolvent(DomainError):
    """``1 - Z*X`` is numerically singular."""


class ZeroAlpha(DomainError):
    """The coefficient vector alpha is zero."""


class NotHermitian(DomainError):
    """A matrix required to be Hermitian is not (to tolerance)."""


class PoleHit(DomainError):
    """A fractional linear map was evaluated at its pole."""


class PoleOnDisc(DomainError):
    """A fractional linear map has a pole on the closed unit disc."""


class QOnBoundary(DomainError):
    """The last coordinate satisfies ``|q| >= 1``."""


class DimensionTooSmall(DomainError):
    """The dimension ``n`` is too small for the requested construction."""


class DeterminantMismatch(DomainError):
    """Matrices that must share a determinant do not."""


class LengthMismatch(DomainError):
    """A list argument has the wrong length."""


class OutsideDisc(DomainError):
    """A point required to be in the open unit disc is not."""


class NotInterior(DomainError):
    """A point required to lie in the open domain does not."""


class NodeNotInBall(DomainError):
    """An interpolation node matrix is not in the open mu-unit ball."""


class DuplicateNodes(DomainError):
    """Interpolation nodes are not distinct."""


class ZeroPolynomial(DomainError):
    """A polynomial is identically zero."""


class RootOnOriginMissing(DomainError):
    """A polynomial expected to vanish at the origin does not."""


class DegenerateTarget(DomainError):
    """The interpolation target is degenerate for the requested construction."""


class NuOutOfRange(DomainError):
    """The scaling parameter nu lies outside its admissible window."""


class ZeroU(DomainError):
    """The vector ``u_Z(alpha)`` vanishes."""


class ParseError(DomainError):
    """Input does not match the expected JSON schema."""


# ------------------------------------------------------------------ hypotheses


class HypothesisViolated(GtildeError):
    """A hypothesis of a constructive statement fails for the given data."""


class QNotContractive(HypothesisViolated):
    """The Schur parameter ``Q(0)`` is not a contraction."""


class QConstraintViolated(HypothesisViolated):
    """The Schur parameter violates the ``Q(0)`` interpolation constraint."""


class DetInconsistent(HypothesisViolated):
    """Factor determinants disagree, so the assembled map is ill defined."""


class NotSchur(HypothesisViolated):
    """A function expected to be in the Schur class exceeds norm one."""


# ------------------------------------------------------------------- numerics


class NumericalError(GtildeError, ArithmeticError):
    """An iterative or numerical procedure failed."""


class NoConvergence(NumericalError):
    """An iteration hit its cap before meeting its tolerance."""


class FactorizationFailed(NumericalError):
    """A balanced factorization failed its own postconditions."""


class ConfigError(GtildeError, ValueError):
    """Invalid configuration value."""

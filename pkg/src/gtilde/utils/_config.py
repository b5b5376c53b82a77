"""Numeric tolerances, with environment overrides.

Every threshold used by the library lives in :class:`Tolerances`.  A process
wide default is kept in a module global; ``GTILDE_<FIELD>`` environment
variables override individual fields at import time, e.g.
``GTILDE_MARGIN=1e-10``.
"""

from __future__ import annotations

import os
from contextlib import contextmanager
from dataclasses import dataclass, fields, replace
from typing import TYPE_CHECKING, Any

from gtilde._errors import ConfigError

if TYPE_CHECKING:
    from collections.abc import Iterator, Mapping

__all__ = ["Tolerances", "get_tolerances", "set_tolerances", "tolerances"]

ENV_PREFIX = "GTILDE_"


@dataclass(frozen=True)
class Tolerances:
    """Thresholds used across the library.

    Attributes
    ----------
    hermitian : float
        Absolute tolerance on ``H - H*`` entries for Hermitian checks.
    singular_cond : float
        Condition number above which a 2x2 resolvent counts as singular.
    eig_clip : float
        Floor applied to eigenvalues before inverse square roots.
    pole : float
        Distance from a pole below which evaluation raises ``PoleHit``.
    margin : float
        Membership slack needed to report a point as interior.
    q_constraint : float
        Residual allowed in the ``Q(0)`` interpolation constraint.
    det_consistency : float
        Allowed spread of factor determinants.
    endpoint : float
        Allowed endpoint residual when verifying interpolants.
    bisection : float
        Width at which the mu bisection stops.
    mu_infinity : float
        Largest radius searched before declaring ``mu = 0``.
    root_trim : float
        Relative size below which polynomial coefficients count as zero.
    root_residual : float
        Relative residual target of the Aberth polish.
    root_max_iter : int
        Iteration cap of the Aberth polish.
    boundary_band : float
        Roots within this distance of the unit circle count as outside.
    schur_slack : float
        Allowed excess of sampled norms over one for Schur evaluators.
    """

    hermitian: float = 1e-10
    singular_cond: float = 1e12
    eig_clip: float = 1e-14
    pole: float = 1e-14
    margin: float = 1e-12
    q_constraint: float = 1e-10
    det_consistency: float = 1e-9
    endpoint: float = 1e-8
    bisection: float = 1e-10
    mu_infinity: float = 1e6
    root_trim: float = 1e-14
    root_residual: float = 1e-12
    root_max_iter: int = 500
    boundary_band: float = 1e-10
    schur_slack: float = 1e-9

    def __post_init__(self) -> None:
        for f in fields(self):
            value = getattr(self, f.name)
            if not value > 0:
                raise ConfigError(
                    f"Tolerance {f.name!r} must be positive, got {value!r}",
                    field=f.name,
                    value=value,
                )

    @classmethod
    def from_env(cls, environ: Mapping[str, str] | None = None) -> Tolerances:
        """Build tolerances from ``GTILDE_<FIELD>`` environment variables."""
        environ = os.environ if environ is None else environ
        overrides: dict[str, Any] = {}
        for f in fields(cls):
            raw = environ.get(f"{ENV_PREFIX}{f.name.upper()}")
            if raw is None:
                continue
            kind = int if f.type in ("int", int) else float
            try:
                overrides[f.name] = kind(raw)
            except ValueError as e:
                raise ConfigError(
                    f"Could not parse {ENV_PREFIX}{f.name.upper()}={raw!r}",
                    field=f.name,
                ) from e
        return cls(**overrides)

    def replace(self, **changes: Any) -> Tolerances:
        """Return a copy with some fields replaced."""
        unknown = set(changes) - {f.name for f in fields(self)}
        if unknown:
            raise ConfigError(f"Unknown tolerance field(s): {sorted(unknown)!r}")
        return replace(self, **changes)


_CURRENT = Tolerances.from_env()


def get_tolerances() -> Tolerances:
    """Return the process-wide default tolerances."""
    return _CURRENT


def set_tolerances(tol: Tolerances) -> None:
    """Replace the process-wide default tolerances."""
    global _CURRENT
    if not isinstance(tol, Tolerances):
        raise TypeError(f"Expected Tolerances instance, got {type(tol)!r}")
    _CURRENT = tol


@contextmanager
def tolerances(**overrides: Any) -> Iterator[Tolerances]:
    """Context manager to temporarily override default tolerances.

    Examples
    --------
    >>> with tolerances(margin=1e-9) as tol:
    ...     tol.margin
    1e-09
    """
    previous = get_tolerances()
    tol = previous.replace(**overrides)
    set_tolerances(tol)
    try:
        yield tol
    finally:
        set_tolerances(previous)


def resolve(tol: Tolerances | None) -> Tolerances:
    """Return ``tol``, or the current default when it is ``None``."""
    return get_tolerances() if tol is None else tol

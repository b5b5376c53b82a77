"""gtilde: geometry, Schwarz-lemma interpolation and distances on G̃_n."""

from importlib.metadata import PackageNotFoundError, version
from typing import TYPE_CHECKING, Any

try:
    __version__ = version("gtilde")
except PackageNotFoundError:
    __version__ = "unknown"

from ._errors import (
    DomainError,
    GtildeError,
    HypothesisViolated,
    NumericalError,
    ParseError,
)
from .distances import DistanceReport, dist_origin
from .geometry import (
    MembershipReport,
    PointGn,
    in_gamma_tilde,
    in_gtilde,
    in_jn,
    phi,
    phi_supnorm,
    pi_hat,
    schwarz_bound,
)
from .interpolation import (
    Interpolant,
    build_interpolant_jn,
    characterize,
    eval_interpolant,
    verify_interpolant,
)
from .linalg import Mat2, op_norm
from .mu import MuResult, mu_diag, mu_realization
from .schwarz import SchwarzInstance, compute_schwarz_data
from .utils import DiagnosticsHandler, Tolerances, tolerances

__all__ = [
    "DiagnosticsHandler",
    "DistanceReport",
    "DomainError",
    "GtildeError",
    "HypothesisViolated",
    "Interpolant",
    "Mat2",
    "MembershipReport",
    "MuResult",
    "NumericalError",
    "ParseError",
    "PointGn",
    "SchwarzInstance",
    "Tolerances",
    "build_interpolant_jn",
    "characterize",
    "cli",
    "compute_schwarz_data",
    "dist_origin",
    "eval_interpolant",
    "in_gamma_tilde",
    "in_gtilde",
    "in_jn",
    "mu_diag",
    "mu_realization",
    "op_norm",
    "phi",
    "phi_supnorm",
    "pi_hat",
    "schwarz_bound",
    "tolerances",
    "verify_interpolant",
]

if TYPE_CHECKING:
    from . import cli  # noqa: TC004


def __getattr__(name: str) -> Any:
    if name == "cli":
        from . import cli

        return cli
    raise AttributeError(f"module {__name__!r} has no attribute {name!r}")

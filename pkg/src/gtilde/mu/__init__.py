"""Structured singular value, realizations and lifts."""

from ._mu import MuResult, mu_diag, mu_full, mu_scalar, singularity_residual
from ._pick import PickReport, structured_np_necessary
from ._realization import (
    LiftedFactor,
    lift_to_mu_ball,
    mu_closure_check,
    mu_membership_check,
    mu_realization,
    mu_realization_jn,
)

__all__ = [
    "LiftedFactor",
    "MuResult",
    "PickReport",
    "lift_to_mu_ball",
    "mu_closure_check",
    "mu_diag",
    "mu_full",
    "mu_membership_check",
    "mu_realization",
    "mu_realization_jn",
    "mu_scalar",
    "singularity_residual",
    "structured_np_necessary",
]

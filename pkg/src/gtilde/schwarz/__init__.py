"""Scalars, matrices and Schur parameters of the two-point Schwarz problem."""

from ._instance import (
    HYPOTHESES,
    SchwarzData,
    SchwarzInstance,
    compute_schwarz_data,
    failed_hypotheses,
    hypothesis_slacks,
)
from ._matrices import (
    KappaFactors,
    det_one_minus_zstarz,
    kappa_closed_form,
    kappa_factors,
    r_x_gap,
    r_x_gap_closed_form,
    z_matrix,
)
from ._parameters import (
    blaschke_b,
    build_q0,
    choose_alpha,
    nonpositive_direction,
    q0_residual,
    schwarz_k_matrix,
)

__all__ = [
    "HYPOTHESES",
    "KappaFactors",
    "SchwarzData",
    "SchwarzInstance",
    "blaschke_b",
    "build_q0",
    "choose_alpha",
    "compute_schwarz_data",
    "det_one_minus_zstarz",
    "failed_hypotheses",
    "hypothesis_slacks",
    "kappa_closed_form",
    "kappa_factors",
    "nonpositive_direction",
    "q0_residual",
    "r_x_gap",
    "r_x_gap_closed_form",
    "schwarz_k_matrix",
    "z_matrix",
]

"""Brute-force baselines used to cross-check the closed forms."""

from ._grid import SEED, GridSpec
from ._mu_grid import dense_op_norm, mu_grid
from ._sampling import membership_torus_sampling, supnorm_sampling

__all__ = [
    "SEED",
    "GridSpec",
    "dense_op_norm",
    "membership_torus_sampling",
    "mu_grid",
    "supnorm_sampling",
]

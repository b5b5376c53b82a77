"""Points of the extended symmetrized polydisc and the maps around it."""

from ._maps import in_jn, jn_embed, pi_hat, pi_map, satisfies_jn_relations
from ._phi import (
    GAMMA_RADII,
    in_gamma_tilde,
    phi,
    phi_circle_image,
    phi_supnorm,
    schwarz_bound,
    schwarz_necessary,
)
from ._point import (
    MembershipReport,
    PointGn,
    beta_coeffs,
    binom,
    gtilde_margin_batch,
    in_gtilde,
    pair_indices,
    symmetrize,
)

__all__ = [
    "GAMMA_RADII",
    "MembershipReport",
    "PointGn",
    "beta_coeffs",
    "binom",
    "gtilde_margin_batch",
    "in_gamma_tilde",
    "in_gtilde",
    "in_jn",
    "jn_embed",
    "pair_indices",
    "phi",
    "phi_circle_image",
    "phi_supnorm",
    "pi_hat",
    "pi_map",
    "satisfies_jn_relations",
    "schwarz_bound",
    "schwarz_necessary",
    "symmetrize",
]

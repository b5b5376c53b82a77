"""Complex polynomials, their roots, and balanced inner-outer factorizations."""

from ._balanced import BalancedFactors, balanced_factorize, blaschke_factor
from ._poly import PolyC, poly_roots

__all__ = [
    "BalancedFactors",
    "PolyC",
    "balanced_factorize",
    "blaschke_factor",
    "poly_roots",
]

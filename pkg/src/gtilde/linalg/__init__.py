"""Exact 2x2 complex matrix algebra."""

from ._mat2 import (
    Mat2,
    Vec2,
    condition_number,
    hermitian_min_eig,
    hermitian_power,
    op_norm,
    singular_values,
    spectral_radius,
)
from ._mobius import (
    defect_roots,
    k_form,
    k_matrix,
    mobius,
    mobius_batch,
    op_norm_batch,
    require_contraction,
    uv_vectors,
)

__all__ = [
    "Mat2",
    "Vec2",
    "condition_number",
    "defect_roots",
    "hermitian_min_eig",
    "hermitian_power",
    "k_form",
    "k_matrix",
    "mobius",
    "mobius_batch",
    "op_norm",
    "op_norm_batch",
    "require_contraction",
    "singular_values",
    "spectral_radius",
    "uv_vectors",
]

"""Interpolating maps into the extended symmetrized polydisc."""

from ._characterize import CharacterizedFactor, Characterization, characterize
from ._factor import InterpolantFactor, constant_factor, eval_factor, eval_factor_batch
from ._interpolant import (
    CONSTRUCTIONS,
    Interpolant,
    VerificationReport,
    assemble_interpolant,
    build_interpolant_g2,
    build_interpolant_jn,
    det_spread,
    eval_interpolant,
    eval_interpolant_batch,
    verify_interpolant,
)
from ._rational import RationalCoordinates, rational_coordinates
from ._schur import (
    CallableSchur,
    ConstantSchur,
    PolynomialSchur,
    SchurFunction,
    schur_from_json,
    tail_polynomial,
)

__all__ = [
    "CONSTRUCTIONS",
    "CallableSchur",
    "CharacterizedFactor",
    "Characterization",
    "ConstantSchur",
    "Interpolant",
    "InterpolantFactor",
    "PolynomialSchur",
    "RationalCoordinates",
    "SchurFunction",
    "VerificationReport",
    "assemble_interpolant",
    "build_interpolant_g2",
    "build_interpolant_jn",
    "characterize",
    "constant_factor",
    "det_spread",
    "eval_factor",
    "eval_factor_batch",
    "eval_interpolant",
    "eval_interpolant_batch",
    "rational_coordinates",
    "schur_from_json",
    "tail_polynomial",
    "verify_interpolant",
]

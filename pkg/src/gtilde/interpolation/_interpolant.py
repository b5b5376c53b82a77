"""Interpolating maps ``psi`` from the disc with ``psi(0) = 0``, ``psi(lam0) = y``."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import TYPE_CHECKING, Any

import numpy as np

from gtilde._errors import (
    DetInconsistent,
    HypothesisViolated,
    LengthMismatch,
    OutsideDisc,
    ParseError,
)
from gtilde.geometry import (
    PointGn,
    binom,
    gtilde_margin_batch,
    pair_indices,
    pi_map,
    satisfies_jn_relations,
)
from gtilde.linalg import op_norm_batch
from gtilde.oracles import GridSpec
from gtilde.schwarz import (
    SchwarzInstance,
    build_q0,
    choose_alpha,
    compute_schwarz_data,
    z_matrix,
)
from gtilde.utils import decode_complex, encode_complex, map_chunks, require, resolve

from ._factor import InterpolantFactor, eval_factor, eval_factor_batch
from ._schur import ConstantSchur, tail_polynomial

if TYPE_CHECKING:
    from collections.abc import Sequence

    from gtilde.linalg import Mat2
    from gtilde.utils import Tolerances

    from ._schur import SchurFunction

logger = logging.getLogger(__name__)

#: How an interpolant was obtained.
CONSTRUCTIONS = ("jn", "g2", "assembled")


def _spiral(count: int = 50) -> np.ndarray:
    k = np.arange(count)
    golden = np.pi * (3 - np.sqrt(5))
    return 0.95 * (k + 1) / count * np.exp(1j * golden * k)


@dataclass(frozen=True)
class Interpolant:
    """``psi = pi(F_1, ..., F_[n/2])`` built from one factor per pair.

    Constructions over J_n (and ``n = 2``) repeat a single factor.
    """

    n: int
    factors: tuple[InterpolantFactor, ...]
    lam0: complex
    target: PointGn | None = None
    construction: str = "assembled"

    def __post_init__(self) -> None:
        object.__setattr__(self, "factors", tuple(self.factors))
        object.__setattr__(self, "lam0", complex(self.lam0))
        if len(self.factors) != self.n // 2:
            raise LengthMismatch(
                f"Expected {self.n // 2} factors for n={self.n}, "
                f"got {len(self.factors)}",
                expected=self.n // 2,
                got=len(self.factors),
            )
        if self.construction not in CONSTRUCTIONS:
            raise ValueError(f"Unknown construction {self.construction!r}")

    @property
    def shared(self) -> bool:
        """Whether every pair uses the same factor."""
        return all(f is self.factors[0] or f == self.factors[0] for f in self.factors)

    def matrices(self, lam: complex) -> list[Mat2]:
        return [eval_factor(f, lam) for f in self.factors]

    def __call__(self, lam: complex) -> PointGn:
        return eval_interpolant(self, lam)

    def to_json(self) -> dict[str, Any]:
        shared = self.shared
        factors = self.factors[:1] if shared else self.factors
        return {
            "kind": "interpolant",
            "n": self.n,
            "lam0": encode_complex(self.lam0),
            "construction": self.construction,
            "target": None if self.target is None else self.target.to_json(),
            "shared": shared,
            "factors": [f.to_json() for f in factors],
        }

    @classmethod
    def from_json(cls, data: Any, path: str = "$") -> Interpolant:
        n = require(data, "n", path)
        if not isinstance(n, int) or isinstance(n, bool) or n < 2:
            raise ParseError(f"Expected an integer n >= 2 at {path}.n", path=path)
        raw = require(data, "factors", path)
        if not isinstance(raw, list) or not raw:
            raise ParseError(f"Expected a non-empty list at {path}.factors", path=path)
        factors = [
            InterpolantFactor.from_json(f, f"{path}.factors[{i}]")
            for i, f in enumerate(raw)
        ]
        if data.get("shared", False):
            factors = factors[:1] * (n // 2)
        target = data.get("target")
        construction = data.get("construction", "assembled")
        if construction not in CONSTRUCTIONS:
            raise ParseError(
                f"Unknown construction {construction!r} at {path}", path=path
            )
        try:
            return cls(
                n,
                tuple(factors),
                decode_complex(require(data, "lam0", path), f"{path}.lam0"),
                None if target is None else PointGn.from_json(target, f"{path}.target"),
                construction,
            )
        except LengthMismatch as e:
            raise ParseError(f"Invalid interpolant at {path}: {e}", path=path) from e


def _factor_for(
    inst: SchwarzInstance,
    nu: float | None,
    Q: SchurFunction | None,
    tail: Mat2 | None,
    tol: Tolerances | None,
) -> InterpolantFactor:
    data = compute_schwarz_data(inst)
    if nu is None:
        nu = data.default_nu()
    else:
        data.require(nu)
    Z = z_matrix(inst, nu)
    alpha = None
    if Q is None:
        alpha = choose_alpha(inst, nu, data, tol)
        q0 = build_q0(inst, nu, alpha, tol)
        Q = ConstantSchur(q0) if tail is None else tail_polynomial(q0, tail)
    else:
        Q.validate(tol)
    return InterpolantFactor(Z, inst.lam0, Q, inst.j, nu, alpha)


def build_interpolant_jn(
    y: PointGn,
    lam0: complex,
    nu: float | None = None,
    Q: SchurFunction | None = None,
    *,
    tail: Mat2 | None = None,
    tol: Tolerances | None = None,
) -> Interpolant:
    """Interpolant through ``(0, origin)`` and ``(lam0, y)`` for ``y`` in J_n.

    A single factor for the pair ``(1, n-1)`` is repeated for every pair, so
    ``psi = pi_hat(F)``.

    Parameters
    ----------
    y : PointGn
        Target in J_n with ``y_1 y_{n-1} != n^2 q``, ``|y_{n-1}| <= |y_1|``
        and ``phi_supnorm(1, y) < |lam0|``.
    lam0 : complex
        Node, ``0 < |lam0| < 1``.
    nu : float, optional
        Window parameter; defaults to 1, which always lies in the window.
    Q : SchurFunction, optional
        Schur parameter satisfying the ``Q(0)`` constraint.  Defaults to the
        constant ``Q0`` from :func:`~gtilde.schwarz.build_q0`.
    tail : Mat2, optional
        With ``Q`` omitted, use ``Q0 + lam E`` with ``E`` a rescaled `tail`.
    tol : Tolerances, optional
        Numeric thresholds.

    Raises
    ------
    HypothesisViolated
        If ``y`` is not in J_n or a hypothesis fails.
    NuOutOfRange
        If `nu` is outside the window.
    QConstraintViolated
        If a supplied `Q` violates the ``Q(0)`` constraint.
    """
    if not satisfies_jn_relations(y):
        raise HypothesisViolated(
            "Target does not satisfy the J_n proportionality relations",
            hypothesis="jn",
        )
    inst = SchwarzInstance(lam0, y, 1)
    factor = _factor_for(inst, nu, Q, tail, tol)
    construction = "g2" if y.n == 2 else "jn"
    return Interpolant(y.n, (factor,) * (y.n // 2), lam0, y, construction)


def build_interpolant_g2(
    s: complex,
    p: complex,
    lam0: complex,
    nu: float | None = None,
    Q: SchurFunction | None = None,
    *,
    tail: Mat2 | None = None,
    tol: Tolerances | None = None,
) -> Interpolant:
    """Interpolant ``psi = (tr F, det F)`` with ``psi(lam0) = (s, p)``.

    Requires ``s^2 != 4p`` and
    ``(2|s - conj(s) p| + |s^2 - 4p|) / (4 - |s|^2) < |lam0|``.
    """
    return build_interpolant_jn(
        PointGn(2, (s,), p), lam0, nu, Q, tail=tail, tol=tol
    )


def assemble_interpolant(
    y: PointGn,
    lam0: complex,
    nus: Sequence[float | None] | None = None,
    Qs: Sequence[SchurFunction | None] | None = None,
    tol: Tolerances | None = None,
) -> Interpolant:
    """Assemble one factor per pair for a general target and check consistency.

    The result is only well defined when the factor determinants agree, which
    is checked on a 50 point grid of the disc.

    Raises
    ------
    HypothesisViolated
        If a pair fails its hypotheses; ``context["j"]`` names the pair.
    DetInconsistent
        If factor determinants differ by more than ``tol.det_consistency``.
    """
    tol = resolve(tol)
    half = y.n // 2
    nus = [None] * half if nus is None else list(nus)
    Qs = [None] * half if Qs is None else list(Qs)
    if len(nus) != half or len(Qs) != half:
        raise LengthMismatch(f"Expected {half} values of nu and Q")
    factors = []
    for j, nu, Q in zip(pair_indices(y.n), nus, Qs):
        inst = SchwarzInstance(lam0, y, j)
        factors.append(_factor_for(inst, nu, Q, None, tol))
    psi = Interpolant(y.n, tuple(factors), lam0, y, "assembled")
    spread = det_spread(psi, _spiral())
    if spread > tol.det_consistency:
        raise DetInconsistent(
            f"Factor determinants disagree by {spread:.3g}", spread=spread
        )
    return psi


def _assemble_coords(n: int, mats: list[np.ndarray]) -> np.ndarray:
    """Stacked coordinates ``(N, n)`` from per-pair factor values ``(N, 2, 2)``."""
    size = mats[0].shape[0]
    coords = np.zeros((size, n), dtype=complex)
    for j, F in zip(pair_indices(n), mats):
        c = binom(n, j)
        if 2 * j == n:
            coords[:, j - 1] = c * (F[:, 0, 0] + F[:, 1, 1]) / 2
        else:
            coords[:, j - 1] = c * F[:, 0, 0]
            coords[:, n - j - 1] = c * F[:, 1, 1]
    coords[:, n - 1] = np.linalg.det(mats[0])
    return coords


def _batch_mats(psi: Interpolant, lams: np.ndarray) -> list[np.ndarray]:
    if psi.shared:
        return [eval_factor_batch(psi.factors[0], lams)] * len(psi.factors)
    return [eval_factor_batch(f, lams) for f in psi.factors]


def det_spread(psi: Interpolant, lams: np.ndarray) -> float:
    """Largest disagreement between factor determinants over `lams`."""
    if psi.shared:
        return 0.0
    dets = [np.linalg.det(F) for F in _batch_mats(psi, lams)]
    return float(max(np.abs(d - dets[0]).max() for d in dets))


def eval_interpolant(
    psi: Interpolant, lam: complex, tol: Tolerances | None = None
) -> PointGn:
    """``psi(lam)`` assembled from the factor values.

    Raises
    ------
    OutsideDisc
        If ``|lam| >= 1``.
    DetInconsistent
        If the factor determinants differ by more than ``tol.det_consistency``.
    """
    tol = resolve(tol)
    if not abs(lam) < 1:
        raise OutsideDisc(f"lam must lie in the open unit disc, got {lam!r}", lam=lam)
    mats = psi.matrices(lam)
    q = mats[0].det()
    spread = max(abs(F.det() - q) for F in mats)
    if spread > tol.det_consistency:
        raise DetInconsistent(
            f"Factor determinants disagree by {spread:.3g} at lam={lam!r}",
            spread=spread,
        )
    return pi_map(mats, psi.n, det_tol=np.inf)


def eval_interpolant_batch(psi: Interpolant, lams: np.ndarray) -> np.ndarray:
    """Coordinates of ``psi`` at every point of `lams`, shape ``(N, n)``."""
    lams = np.asarray(lams, dtype=complex).ravel()
    return _assemble_coords(psi.n, _batch_mats(psi, lams))


@dataclass(frozen=True)
class VerificationReport:
    """Checks of an interpolant over a sample grid."""

    origin_residual: float
    target_residual: float | None
    worst_margin: float
    worst_det_spread: float
    max_factor_norm: float
    samples: int
    passed: bool

    def to_json(self) -> dict[str, Any]:
        return {
            "kind": "verification",
            "origin_residual": self.origin_residual,
            "target_residual": self.target_residual,
            "worst_margin": self.worst_margin,
            "worst_det_spread": self.worst_det_spread,
            "max_factor_norm": self.max_factor_norm,
            "samples": self.samples,
            "passed": self.passed,
        }


def verify_interpolant(
    psi: Interpolant,
    grid: GridSpec | None = None,
    target: PointGn | None = None,
    *,
    workers: int | None = None,
    tol: Tolerances | None = None,
) -> VerificationReport:
    """Re-check endpoints, range membership and determinant consistency.

    The sweep covers ``grid.interior`` quasi-random disc points plus
    ``grid.angular`` points on the circle of radius ``grid.boundary_radius``.
    """
    tol = resolve(tol)
    grid = GridSpec() if grid is None else grid
    target = psi.target if target is None else target
    origin = PointGn.origin(psi.n)
    origin_residual = eval_interpolant(psi, 0j, tol).max_abs_diff(origin)
    target_residual = None
    if target is not None:
        target_residual = eval_interpolant(psi, psi.lam0, tol).max_abs_diff(target)

    points = grid.verification_points()

    def sweep(chunk: np.ndarray) -> np.ndarray:
        mats = _batch_mats(psi, chunk)
        coords = _assemble_coords(psi.n, mats)
        dets = [np.linalg.det(F) for F in mats]
        spread = np.max([np.abs(d - dets[0]) for d in dets], axis=0)
        norms = np.max([op_norm_batch(F) for F in mats], axis=0)
        margin = gtilde_margin_batch(psi.n, coords)
        return np.stack([margin, spread, norms], axis=1)

    stats = map_chunks(sweep, points, workers=workers)
    worst_margin = float(stats[:, 0].min())
    worst_spread = float(stats[:, 1].max())
    max_norm = float(stats[:, 2].max())
    passed = (
        origin_residual <= tol.endpoint
        and (target_residual is None or target_residual <= tol.endpoint)
        and worst_margin > 0
        and worst_spread <= tol.det_consistency
        and max_norm < 1
    )
    logger.info(
        "verified interpolant over %d samples: margin %.3g, spread %.3g",
        len(points), worst_margin, worst_spread,
    )  # fmt: skip
    return VerificationReport(
        origin_residual,
        target_residual,
        worst_margin,
        worst_spread,
        max_norm,
        len(points),
        passed,
    )

"""Subcommand implementations: parsed JSON in, JSON-ready results out."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import TYPE_CHECKING, Any, Callable

import numpy as np

from gtilde._errors import ConfigError, ParseError, PoleOnDisc
from gtilde.distances import caratheodory_candidates, dist_origin
from gtilde.geometry import (
    PointGn,
    gtilde_margin_batch,
    in_gamma_tilde,
    in_gtilde,
    in_jn,
    phi_circle_image,
    phi_supnorm,
)
from gtilde.interpolation import (
    Interpolant,
    RationalCoordinates,
    assemble_interpolant,
    build_interpolant_jn,
    characterize,
    eval_factor_batch,
    eval_interpolant_batch,
    rational_coordinates,
    verify_interpolant,
)
from gtilde.linalg import Mat2, op_norm, op_norm_batch
from gtilde.mu import (
    mu_closure_check,
    mu_diag,
    mu_full,
    mu_membership_check,
    mu_realization,
    mu_scalar,
    structured_np_necessary,
)
from gtilde.oracles import SEED, GridSpec
from gtilde.schwarz import (
    SchwarzInstance,
    build_q0,
    choose_alpha,
    compute_schwarz_data,
    hypothesis_slacks,
    kappa_closed_form,
    z_matrix,
)
from gtilde.utils import canonical_dumps, decode_complex, require, resolve

if TYPE_CHECKING:
    from gtilde.utils import Tolerances


@dataclass(frozen=True)
class Options:
    """Settings that change results, recorded in every payload for replay."""

    grid: int = GridSpec.interior
    seed: int = SEED
    radius: float | None = None
    tol: float | None = None

    @property
    def grid_spec(self) -> GridSpec:
        return GridSpec(interior=self.grid, seed=self.seed)

    def overrides(self) -> dict[str, float]:
        return {} if self.tol is None else {"endpoint": self.tol}

    def to_json(self) -> dict[str, Any]:
        return {
            "grid": self.grid,
            "seed": self.seed,
            "radius": self.radius,
            "tol": self.tol,
        }

    @classmethod
    def from_json(cls, data: Any, path: str = "$.options") -> Options:
        if not isinstance(data, dict):
            raise ParseError(f"Expected an object at {path}", path=path)
        try:
            return cls(
                grid=int(data.get("grid", GridSpec.interior)),
                seed=int(data.get("seed", SEED)),
                radius=None if data.get("radius") is None else float(data["radius"]),
                tol=None if data.get("tol") is None else float(data["tol"]),
            )
        except (TypeError, ValueError) as e:
            raise ParseError(f"Invalid options at {path}: {e}", path=path) from e


def finite_or_none(obj: Any) -> Any:
    """Replace non-finite floats (e.g. a ``-inf`` slack) by None, recursively."""
    if isinstance(obj, float):
        return obj if math.isfinite(obj) else None
    if isinstance(obj, dict):
        return {k: finite_or_none(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [finite_or_none(v) for v in obj]
    return obj


# ------------------------------------------------------------------ parsing


def _point(data: Any) -> PointGn:
    if isinstance(data, dict) and "point" in data:
        return PointGn.from_json(data["point"], "$.point")
    return PointGn.from_json(data)


def _lam0(data: Any) -> complex:
    return decode_complex(require(data, "lam0"), "$.lam0")


def _optional_float(data: Any, key: str) -> float | None:
    value = data.get(key)
    if value is None:
        return None
    if not isinstance(value, (int, float)) or isinstance(value, bool):
        path = f"$.{key}"
        raise ParseError(f"Expected a number at {path}, got {value!r}", path=path)
    return float(value)


def _matrix(data: Any, path: str) -> Mat2:
    return Mat2.from_json(data, path)


def _interpolant(data: Any) -> Interpolant:
    """Find an interpolant in a raw blob, an ``interpolate`` result or payload."""
    if isinstance(data, dict) and "result" in data:
        data = data["result"]
    if isinstance(data, dict) and "interpolant" in data:
        return Interpolant.from_json(data["interpolant"], "$.interpolant")
    return Interpolant.from_json(data)


# ----------------------------------------------------------------- commands


def membership(data: Any, opts: Options, tol: Tolerances) -> dict[str, Any]:
    y = _point(data)
    report = in_gtilde(y, tol)
    return {
        "kind": "membership",
        "inside": report.inside,
        "margins": list(report.margins),
        "q_margin": report.q_margin,
        "worst_margin": report.worst_margin,
        "in_jn": in_jn(y, tol),
        "closure": in_gamma_tilde(y),
    }


def phinorm(data: Any, opts: Options, tol: Tolerances) -> dict[str, Any]:
    y = _point(data)
    norms: list[dict[str, Any]] = []
    for j in range(1, y.n):
        try:
            circle = phi_circle_image(j, y)
        except PoleOnDisc:
            norms.append({"j": j, "supnorm": None, "pole": True})
            continue
        norms.append(
            {
                "j": j,
                "supnorm": phi_supnorm(j, y),
                "pole": False,
                "center": circle.center,
                "radius": circle.radius,
            }
        )
    values = [entry["supnorm"] for entry in norms]
    bound = None if None in values else max(values)
    arg = None if bound is None else values.index(bound) + 1
    return {"kind": "phinorm", "norms": norms, "bound": bound, "argmax_j": arg}


def schwarz(data: Any, opts: Options, tol: Tolerances) -> dict[str, Any]:
    y, lam0 = _point(data), _lam0(data)
    j = data.get("j", 1)
    if not isinstance(j, int) or isinstance(j, bool):
        raise ParseError(f"Expected an integer at $.j, got {j!r}", path="$.j")
    if not 1 <= j < y.n:
        msg = f"Index j must be in 1..{y.n - 1} at $.j, got {j!r}"
        raise ParseError(msg, path="$.j")
    inst = SchwarzInstance(lam0, y, j)
    sd = compute_schwarz_data(inst)
    nu = _optional_float(data, "nu")
    nu = sd.default_nu() if nu is None else nu
    sd.require(nu)
    kappa, det = kappa_closed_form(inst, nu, sd)
    alpha = choose_alpha(inst, nu, sd, tol)
    q0 = build_q0(inst, nu, alpha, tol)
    return {
        "kind": "schwarz",
        "instance": inst.to_json(),
        "slacks": hypothesis_slacks(lam0, y, j, tol),
        "data": sd.to_json(),
        "nu": nu,
        "Z": z_matrix(inst, nu).to_json(),
        "kappa": kappa.to_json(),
        "kappa_det": det,
        "alpha": alpha.to_json(),
        "q0": q0.to_json(),
        "q0_norm": op_norm(q0),
        "feasible": True,
    }


def interpolate(data: Any, opts: Options, tol: Tolerances) -> dict[str, Any]:
    y, lam0 = _point(data), _lam0(data)
    construction = data.get("construction", "jn")
    if construction == "jn":
        tail = data.get("tail")
        psi = build_interpolant_jn(
            y,
            lam0,
            _optional_float(data, "nu"),
            tail=None if tail is None else _matrix(tail, "$.tail"),
            tol=tol,
        )
    elif construction == "assembled":
        psi = assemble_interpolant(y, lam0, data.get("nus"), None, tol)
    else:
        raise ParseError(
            f"Unknown construction {construction!r} at $.construction",
            path="$.construction",
        )
    report = verify_interpolant(psi, opts.grid_spec, tol=tol)
    return {
        "kind": "interpolation",
        "interpolant": psi.to_json(),
        "verification": report.to_json(),
    }


def eval_table(data: Any, opts: Options) -> tuple[list[str], list[list[float]]]:
    """Columns and rows of the ``eval`` sweep."""
    psi = _interpolant(data)
    grid = opts.grid_spec
    if opts.radius is None:
        lams = grid.disc()
    else:
        if not 0 <= opts.radius < 1:
            raise ConfigError(f"radius must be in [0, 1), got {opts.radius!r}")
        lams = opts.radius * np.exp(2j * np.pi * np.arange(opts.grid) / opts.grid)
    coords = eval_interpolant_batch(psi, lams)
    margins = gtilde_margin_batch(psi.n, coords)
    norms = [op_norm_batch(eval_factor_batch(f, lams)) for f in psi.factors]
    header = ["lam_re", "lam_im"]
    for k in range(1, psi.n):
        header += [f"y{k}_re", f"y{k}_im"]
    header += ["q_re", "q_im", "margin"]
    header += [f"norm_{j}" for j in range(1, len(psi.factors) + 1)]
    rows = []
    for i, lam in enumerate(lams):
        row = [lam.real, lam.imag]
        for z in coords[i]:
            row += [z.real, z.imag]
        row.append(margins[i])
        row += [nrm[i] for nrm in norms]
        rows.append([float(v) for v in row])
    return header, rows


def evaluate(data: Any, opts: Options, tol: Tolerances) -> dict[str, Any]:
    header, rows = eval_table(data, opts)
    return {"kind": "eval", "columns": header, "rows": rows}


def characterize_cmd(data: Any, opts: Options, tol: Tolerances) -> dict[str, Any]:
    if isinstance(data, dict) and "rational" in data:
        coords = RationalCoordinates.from_json(data["rational"], "$.rational")
        lam0 = _lam0(data)
    else:
        psi = _interpolant(data)
        coords = rational_coordinates(psi)
        lam0 = _lam0(data) if isinstance(data, dict) and "lam0" in data else psi.lam0
    result = characterize(coords, lam0, grid=opts.grid_spec, tol=tol)
    return {**result.to_json(), "coordinates": coords.to_json()}


def mu(data: Any, opts: Options, tol: Tolerances) -> dict[str, Any]:
    if isinstance(data, dict) and "nodes" in data:
        n = require(data, "n")
        raw = data["nodes"]
        if not isinstance(raw, list):
            raise ParseError("Expected a list at $.nodes", path="$.nodes")
        nodes = [
            (
                decode_complex(require(node, "lam", f"$.nodes[{i}]"), f"$.nodes[{i}]"),
                _matrix(require(node, "matrix", f"$.nodes[{i}]"), f"$.nodes[{i}]"),
            )
            for i, node in enumerate(raw)
        ]
        return structured_np_necessary(nodes, n, tol).to_json()
    if isinstance(data, dict) and "matrix" in data:
        B = _matrix(data["matrix"], "$.matrix")
        return {
            **mu_diag(B, tol).to_json(),
            "full": mu_full(B),
            "scalar": mu_scalar(B),
        }
    y = _point(data)
    inside = mu_membership_check(y, tol)
    matrices = mu_realization(y, tol) if in_gtilde(y, tol).inside else []
    return {
        "kind": "mu_realization",
        "matrices": [B.to_json() for B in matrices],
        "mu_values": [mu_diag(B, tol).value for B in matrices],
        "inside": inside,
        "closure": mu_closure_check(y, tol),
    }


def distance(data: Any, opts: Options, tol: Tolerances) -> dict[str, Any]:
    y = _point(data)
    report = dist_origin(y, tol)
    return {
        **report.to_json(),
        "candidate_max": float(caratheodory_candidates(y).max()),
    }


def verify(data: Any, opts: Options, tol: Tolerances) -> dict[str, Any]:
    """Replay a payload and compare canonical bytes with the stored result."""
    command = require(data, "command")
    if command not in COMMANDS:
        raise ParseError(f"Unknown command {command!r} at $.command", path="$.command")
    stored = require(data, "result")
    replay_opts = Options.from_json(data.get("options", {}))
    replay_tol = resolve(None).replace(**replay_opts.overrides())
    fresh = COMMANDS[command](require(data, "input"), replay_opts, replay_tol)
    identical = canonical_dumps(finite_or_none(fresh)) == canonical_dumps(stored)
    reload_identical = None
    checks_passed = None
    if command == "interpolate":
        psi = _interpolant(stored)
        reload_identical = canonical_dumps(psi.to_json()) == canonical_dumps(
            stored["interpolant"]
        )
        report = verify_interpolant(psi, replay_opts.grid_spec, tol=replay_tol)
        checks_passed = report.passed
    elif command == "characterize":
        checks_passed = bool(fresh.get("passed"))
    passed = identical and reload_identical is not False and checks_passed is not False
    return {
        "kind": "replay",
        "command": command,
        "identical": identical,
        "reload_identical": reload_identical,
        "checks_passed": checks_passed,
        "passed": passed,
    }


Command = Callable[[Any, Options, "Tolerances"], "dict[str, Any]"]

COMMANDS: dict[str, Command] = {
    "membership": membership,
    "phinorm": phinorm,
    "schwarz": schwarz,
    "interpolate": interpolate,
    "eval": evaluate,
    "characterize": characterize_cmd,
    "mu": mu,
    "distance": distance,
    "verify": verify,
}

from __future__ import annotations

import inspect
from dataclasses import dataclass

import numpy as np
from scipy.stats import qmc

from gtilde._errors import ConfigError

#: Default seed of every quasi-random sample set.
SEED = 0x5EED


def _halton(d: int, seed: int) -> qmc.Halton:
    # newer scipy releases renamed ``seed`` to ``rng``
    params = inspect.signature(qmc.Halton).parameters
    key = "rng" if "rng" in params else "seed"
    return qmc.Halton(d=d, scramble=True, **{key: np.random.default_rng(seed)})


@dataclass(frozen=True)
class GridSpec:
    """Sample counts for the sampling oracles and the verification sweeps.

    Parameters
    ----------
    interior : int
        Number of quasi-random points in the open disc.
    angular : int
        Points per circle.
    radial : int
        Number of radii (torus levels) for bidisc scans.
    boundary_radius : float
        Radius of the boundary-adjacent circle added to verification sweeps.
    seed : int
        Seed of the scrambled Halton sequence.
    """

    interior: int = 10_000
    angular: int = 360
    radial: int = 40
    boundary_radius: float = 0.999
    seed: int = SEED

    def __post_init__(self) -> None:
        for name in ("interior", "angular", "radial"):
            value = getattr(self, name)
            if not value >= 1:
                raise ConfigError(f"{name} must be >= 1, got {value!r}", field=name)
        if not 0 < self.boundary_radius < 1:
            raise ConfigError(
                f"boundary_radius must be in (0, 1), got {self.boundary_radius!r}"
            )

    def circle(self, radius: float = 1.0) -> np.ndarray:
        """``angular`` equally spaced points on ``|z| = radius``."""
        return radius * np.exp(2j * np.pi * np.arange(self.angular) / self.angular)

    def disc(self) -> np.ndarray:
        """``interior`` quasi-random points, uniform in area on the open disc."""
        u = _halton(2, self.seed).random(self.interior)
        return np.sqrt(u[:, 0]) * np.exp(2j * np.pi * u[:, 1])

    def verification_points(self) -> np.ndarray:
        """Disc samples followed by the boundary-adjacent circle."""
        return np.concatenate([self.disc(), self.circle(self.boundary_radius)])

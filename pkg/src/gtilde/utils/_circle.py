"""Images of circles under Möbius maps, and the bidisc zero predicate.

The bilinear function ``g(z, w) = 1 - a z - b w + d z w`` appears in both the
structured singular value and the closure membership test.  Solving
``g = 0`` for ``z`` gives the Möbius map ``z(w) = (1 - b w) / (a - d w)``, so
``g`` has a zero with ``|z| <= t, |w| <= t`` exactly when the image of the
disc ``|w| <= t`` under ``z(w)`` meets the disc ``|z| <= t``.
"""

from __future__ import annotations

import cmath
import logging
import math
from typing import NamedTuple

import numpy as np
from scipy.optimize import minimize_scalar

logger = logging.getLogger(__name__)

_THIRD = 2 * math.pi / 3
_COARSE = 256


class Circle(NamedTuple):
    center: complex
    radius: float


def circumcircle(p1: complex, p2: complex, p3: complex) -> Circle | None:
    """Circle through three points, or None when they are (nearly) collinear."""
    a, b = p2 - p1, p3 - p1
    cross = (a.conjugate() * b).imag
    scale = max(abs(a), abs(b), abs(b - a))
    if not all(map(cmath.isfinite, (p1, p2, p3))) or scale == 0:
        return None
    if abs(cross) <= 1e-9 * scale * scale:
        return None
    # center relative to p1 is equidistant from 0, a and b
    c = (abs(a) ** 2 * b - abs(b) ** 2 * a) / (2j * cross)
    return Circle(p1 + c, abs(c))


def mobius_circle_image(
    a: complex, b: complex, c: complex, d: complex, t: float
) -> Circle | None:
    """Image of the circle ``|w| = t`` under ``w -> (a w + b) / (c w + d)``.

    Computed from three image points.  Returns None when the circumcircle is
    ill conditioned, i.e. the pole sits on or next to the circle and the image
    is (nearly) a line.
    """
    pts = []
    for k in range(3):
        w = t * cmath.exp(1j * (k * _THIRD + 0.5))
        den = c * w + d
        if den == 0:
            return None
        pts.append((a * w + b) / den)
    return circumcircle(*pts)


def circle_min_modulus(
    a: complex, b: complex, c: complex, d: complex, t: float
) -> float:
    """Minimum of ``|(a w + b) / (c w + d)|`` over the circle ``|w| = t``."""
    circ = mobius_circle_image(a, b, c, d, t)
    if circ is not None:
        return abs(abs(circ.center) - circ.radius)
    logger.debug("ill-conditioned circle image at t=%g, using golden search", t)
    return _golden_min_modulus(a, b, c, d, t)


def _golden_min_modulus(
    a: complex, b: complex, c: complex, d: complex, t: float
) -> float:
    def f(theta: float) -> float:
        w = t * cmath.exp(1j * theta)
        den = c * w + d
        return math.inf if den == 0 else abs((a * w + b) / den)

    thetas = np.linspace(0.0, 2 * math.pi, _COARSE, endpoint=False)
    values = np.array([f(th) for th in thetas])
    k = int(np.argmin(values))
    step = thetas[1] - thetas[0]
    bracket = (thetas[k] - step, thetas[k], thetas[k] + step)
    try:
        res = minimize_scalar(f, bracket=bracket, method="golden")
    except ValueError:
        return float(values[k])
    return float(min(res.fun, values[k]))


def bidisc_zero_within(a: complex, b: complex, d: complex, t: float) -> bool:
    """Whether ``1 - a z - b w + d z w`` vanishes somewhere on ``|z|, |w| <= t``.

    Cases, with ``z(w) = (1 - b w) / (a - d w)``:

    * ``a = d = 0``: ``g = 1 - b w`` vanishes iff ``|1/b| <= t``.
    * ``a b = d`` (the map ``z(w)`` is constant): ``g = (1 - a z)(1 - b w)``.
    * ``z(w)`` has its zero ``w = 1/b`` in the closed disc: ``(0, 1/b)`` is a
      zero of ``g``.
    * otherwise ``1/z(w)`` is analytic on the disc, so by the maximum modulus
      principle ``min |z(w)|`` over the disc is attained on ``|w| = t``.  If the
      pole ``w = a/d`` is inside, the disc maps to the exterior of the image
      circle and the minimum is ``radius - |center|``; if not, it maps to the
      interior and the minimum is ``|center| - radius``.  Both equal the
      distance from the origin to the image circle.
    """
    if a == 0 and d == 0:
        return b != 0 and 1 <= t * abs(b)
    scale = max(abs(a) * abs(b), abs(d), 1.0)
    if abs(a * b - d) <= 1e-15 * scale:
        return max(abs(a), abs(b)) * t >= 1
    if b != 0 and abs(1 / b) <= t:
        return True
    return circle_min_modulus(-b, 1.0, -d, a, t) <= t


def bidisc_witness(
    a: complex, b: complex, d: complex, t: float
) -> tuple[complex, complex]:
    """A zero ``(z, w)`` of ``1 - a z - b w + d z w`` with ``|w| = t`` or nearby.

    Used once the bisection has located the critical radius, so the point on
    the image circle nearest the origin is mapped back through the inverse
    Möbius map ``w(z) = (1 - a z) / (b - d z)``.
    """
    if a == 0 and d == 0:
        return (0j, 1 / b)
    scale = max(abs(a) * abs(b), abs(d), 1.0)
    if abs(a * b - d) <= 1e-15 * scale:
        if abs(a) >= abs(b):
            return (1 / a, 0j)
        return (0j, 1 / b)
    if b != 0 and abs(1 / b) <= t * (1 + 1e-12):
        return (0j, 1 / b)
    circ = mobius_circle_image(-b, 1.0, -d, a, t)
    if circ is None:
        thetas = np.linspace(0.0, 2 * math.pi, 4096, endpoint=False)
        ws = t * np.exp(1j * thetas)
        with np.errstate(divide="ignore", invalid="ignore"):
            zs = (1 - b * ws) / (a - d * ws)
        k = int(np.nanargmin(np.abs(zs)))
        return (complex(zs[k]), complex(ws[k]))
    center, radius = circ
    if abs(center) == 0:
        z = complex(radius)
    else:
        z = center * (1 - radius / abs(center))
    den = b - d * z
    w = (1 - a * z) / den if den != 0 else complex(t)
    return (z, w)

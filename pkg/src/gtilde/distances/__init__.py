"""Caratheodory and Lempert distances from the origin."""

from ._distances import (
    DistanceReport,
    ExtremalRotation,
    caratheodory_candidates,
    dist_origin,
    hyperbolic_distance,
)

__all__ = [
    "DistanceReport",
    "ExtremalRotation",
    "caratheodory_candidates",
    "dist_origin",
    "hyperbolic_distance",
]

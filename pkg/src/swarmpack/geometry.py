"""Planar circle geometry: lens areas, gravity centers, enclosing radii.

Points are float64 arrays of shape (2,) and point sets are arrays of shape
(N, 2); the Point2/Disk dataclasses are thin wrappers for single-shape call
sites and convert transparently via ``np.asarray``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np


class InvalidGeometryError(ValueError):
    """Non-finite coordinates, non-positive radii, or mismatched lengths."""


@dataclass(frozen=True)
class Point2:
    x: float
    y: float

    def __array__(self, dtype=None, copy=None):
        return np.array([self.x, self.y], dtype=dtype or float)


@dataclass(frozen=True)
class Disk:
    center: Point2
    radius: float

    def __post_init__(self):
        c = np.asarray(self.center, dtype=float)
        if not (np.all(np.isfinite(c)) and math.isfinite(self.radius)):
            raise InvalidGeometryError(f"disk has non-finite data: {self!r}")
        if self.radius <= 0.0:
            raise InvalidGeometryError(f"disk radius must be positive, got {self.radius}")

    @property
    def area(self) -> float:
        return math.pi * self.radius * self.radius


def lens_area_from_distance(dist, r_a, r_b):
    """Overlap area of two disks given their center distance, vectorized.

    The disjoint (zero) and contained (smaller disk) branches are handled
    before the two-segment formula; arccos arguments are clipped so inputs
    within rounding of a branch boundary land on it instead of going NaN.
    """
    d, ra, rb = np.broadcast_arrays(
        np.asarray(dist, dtype=float),
        np.asarray(r_a, dtype=float),
        np.asarray(r_b, dtype=float),
    )
    scalar = d.ndim == 0
    d = np.atleast_1d(d)
    ra = np.atleast_1d(ra)
    rb = np.atleast_1d(rb)

    out = np.zeros(d.shape)
    small = np.minimum(ra, rb)
    contained = d <= np.abs(ra - rb)
    out[contained] = math.pi * small[contained] ** 2

    partial = ~contained & (d < ra + rb)
    if np.any(partial):
        dp, rap, rbp = d[partial], ra[partial], rb[partial]
        cos_a = np.clip((dp * dp + rap * rap - rbp * rbp) / (2.0 * dp * rap), -1.0, 1.0)
        cos_b = np.clip((dp * dp + rbp * rbp - rap * rap) / (2.0 * dp * rbp), -1.0, 1.0)
        # Heron-style product: the sqrt is four times the triangle area
        # spanned by the two centers and an intersection point.
        tri = (rap + rbp - dp) * (dp + rap - rbp) * (dp - rap + rbp) * (dp + rap + rbp)
        out[partial] = (
            rap * rap * np.arccos(cos_a)
            + rbp * rbp * np.arccos(cos_b)
            - 0.5 * np.sqrt(np.maximum(tri, 0.0))
        )
    return float(out[0]) if scalar else out


def lens_area(a: Disk, b: Disk) -> float:
    """Overlap (lens) area of two disks."""
    dx = b.center.x - a.center.x
    dy = b.center.y - a.center.y
    if not (math.isfinite(dx) and math.isfinite(dy)):
        raise InvalidGeometryError("disk centers must be finite")
    d = math.sqrt(dx * dx + dy * dy)
    return float(lens_area_from_distance(d, a.radius, b.radius))


@lru_cache(maxsize=32)
def _upper_pairs(n: int):
    # Cached (i, j) index pair arrays for the strict upper triangle.
    return np.triu_indices(n, k=1)


def _as_points(positions) -> np.ndarray:
    p = np.asarray(positions, dtype=float)
    if p.ndim != 2 or p.shape[1] != 2:
        raise InvalidGeometryError(f"expected an (N, 2) point array, got shape {p.shape}")
    return p


def total_overlap(positions, radii) -> float:
    """Sum of lens areas over all unordered pairs; zero when all disjoint."""
    p = _as_points(positions)
    r = np.asarray(radii, dtype=float)
    if r.ndim != 1 or r.shape[0] != p.shape[0]:
        raise InvalidGeometryError("positions and radii lengths differ")
    n = p.shape[0]
    if n < 2:
        return 0.0
    iu, ju = _upper_pairs(n)
    diff = p[ju] - p[iu]
    d = np.sqrt(diff[:, 0] ** 2 + diff[:, 1] ** 2)
    hit = d < r[iu] + r[ju]
    if not np.any(hit):
        return 0.0
    return float(np.sum(lens_area_from_distance(d[hit], r[iu][hit], r[ju][hit])))


def center_of_gravity(positions, masses) -> np.ndarray:
    """Mass-weighted mean position, as a (2,) array."""
    p = _as_points(positions)
    m = np.asarray(masses, dtype=float)
    if m.ndim != 1 or m.shape[0] != p.shape[0] or p.shape[0] == 0:
        raise InvalidGeometryError("positions and masses lengths differ or are empty")
    total = m.sum()
    if not total > 0.0:
        raise InvalidGeometryError("total mass must be positive")
    return (m[:, None] * p).sum(axis=0) / total


def cg_violation(positions, masses) -> float:
    """Distance of the gravity center from the origin."""
    cg = center_of_gravity(positions, masses)
    return math.sqrt(cg[0] * cg[0] + cg[1] * cg[1])


def enclosing_radius(positions, radii, center=(0.0, 0.0)) -> float:
    """Radius of the smallest disk about ``center`` covering every circle."""
    p = _as_points(positions)
    r = np.asarray(radii, dtype=float)
    if r.ndim != 1 or r.shape[0] != p.shape[0] or p.shape[0] == 0:
        raise InvalidGeometryError("positions and radii lengths differ or are empty")
    c = np.asarray(center, dtype=float).reshape(2)
    diff = p - c
    return float(np.max(np.sqrt(diff[:, 0] ** 2 + diff[:, 1] ** 2) + r))

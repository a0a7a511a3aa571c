"""Planar geometry kernel: convex polygons, rigid transforms, distance queries.

All angles are in degrees; conversion to radians happens inside the
trigonometric helpers.  Coordinates are doubles; EPS_GEOM is the global
geometric tolerance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .errors import DomainError

EPS_GEOM = 1e-9


def dsin(a: float) -> float:
    return math.sin(math.radians(a))


def dcos(a: float) -> float:
    return math.cos(math.radians(a))


def dirvec(a: float) -> np.ndarray:
    """Unit vector at angle `a` degrees from the positive x axis."""
    return np.array([dcos(a), dsin(a)])


class Location(Enum):
    INTERIOR = "interior"
    BOUNDARY = "boundary"
    OUTSIDE = "outside"


def _shoelace(vertices: np.ndarray) -> float:
    x, y = vertices[:, 0], vertices[:, 1]
    return 0.5 * float(np.sum(x * np.roll(y, -1) - np.roll(x, -1) * y))


@dataclass(frozen=True)
class ConvexPolygon:
    """Convex polygon with vertices in counterclockwise order.

    Clockwise input is silently reversed; non-convex or degenerate input
    raises DomainError.
    """

    vertices: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.vertices, dtype=float)
        if v.ndim != 2 or v.shape[1] != 2 or v.shape[0] < 3:
            raise DomainError("polygon needs at least 3 planar vertices")
        if not np.all(np.isfinite(v)):
            raise DomainError("polygon vertices must be finite")
        if _shoelace(v) < 0:
            v = v[::-1].copy()
        edges = np.roll(v, -1, axis=0) - v
        if np.any(np.hypot(edges[:, 0], edges[:, 1]) < EPS_GEOM):
            raise DomainError("consecutive vertices closer than EPS_GEOM")
        cross = edges[:, 0] * np.roll(edges[:, 1], -1) - edges[:, 1] * np.roll(edges[:, 0], -1)
        if np.any(cross < -EPS_GEOM):
            raise DomainError("polygon is not convex within tolerance")
        v.setflags(write=False)
        object.__setattr__(self, "vertices", v)

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def edges(self) -> np.ndarray:
        """Array of shape (n, 2, 2): edge start/end points."""
        return np.stack([self.vertices, np.roll(self.vertices, -1, axis=0)], axis=1)

    def centroid(self) -> np.ndarray:
        return self.vertices.mean(axis=0)

    def translated(self, offset) -> "ConvexPolygon":
        return ConvexPolygon(self.vertices + np.asarray(offset, dtype=float))


@dataclass(frozen=True)
class RigidTransform:
    """Mirror across the vertical axis (optional), then rotate, then translate."""

    rotation: float = 0.0
    translation: tuple = (0.0, 0.0)
    mirror: bool = False

    def matrix(self) -> np.ndarray:
        c, s = dcos(self.rotation), dsin(self.rotation)
        rot = np.array([[c, -s], [s, c]])
        if self.mirror:
            rot = rot @ np.array([[-1.0, 0.0], [0.0, 1.0]])
        return rot

    def apply_points(self, pts: np.ndarray) -> np.ndarray:
        return pts @ self.matrix().T + np.asarray(self.translation, dtype=float)

    def inverse(self) -> "RigidTransform":
        """Transform undoing this one (inverse is mirror-then-rotate-then-translate too)."""
        minv = np.linalg.inv(self.matrix())
        t = -minv @ np.asarray(self.translation, dtype=float)
        if not self.mirror:
            return RigidTransform(rotation=-self.rotation, translation=tuple(t))
        # M^-1 = (R(r) Mx)^-1 = Mx R(-r) = R(r) Mx, so same rotation with mirror
        return RigidTransform(rotation=self.rotation, translation=tuple(t), mirror=True)


def apply_transform(t: RigidTransform, p: ConvexPolygon) -> ConvexPolygon:
    """Apply a rigid transform; the constructor re-normalizes orientation."""
    return ConvexPolygon(t.apply_points(p.vertices))


def polygon_area(p: ConvexPolygon) -> float:
    return _shoelace(p.vertices)


def polygon_max_distance(p: ConvexPolygon, q: ConvexPolygon) -> float:
    """Maximum distance between the closed regions (max over vertex pairs)."""
    diff = p.vertices[:, None, :] - q.vertices[None, :, :]
    return float(np.sqrt((diff ** 2).sum(axis=2)).max())


def polygon_diameter(p: ConvexPolygon) -> float:
    return polygon_max_distance(p, p)


def _point_segment_distance(pts: np.ndarray, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Distances from points (..., 2) to segments a->b (broadcastable)."""
    ab = b - a
    denom = (ab ** 2).sum(axis=-1)
    denom = np.where(denom == 0, 1.0, denom)
    t = ((pts - a) * ab).sum(axis=-1) / denom
    t = np.clip(t, 0.0, 1.0)
    proj = a + t[..., None] * ab
    d = pts - proj
    return np.sqrt((d ** 2).sum(axis=-1))


def _cross2(u: np.ndarray, v: np.ndarray) -> np.ndarray:
    return u[..., 0] * v[..., 1] - u[..., 1] * v[..., 0]


def _segments_min_distance(e1: np.ndarray, e2: np.ndarray) -> float:
    """Min distance over all pairs of segments; e1 (n,2,2), e2 (m,2,2)."""
    a0 = e1[:, None, 0, :]
    a1 = e1[:, None, 1, :]
    b0 = e2[None, :, 0, :]
    b1 = e2[None, :, 1, :]
    cands = np.minimum.reduce([
        _point_segment_distance(a0, b0, b1),
        _point_segment_distance(a1, b0, b1),
        _point_segment_distance(b0, a0, a1),
        _point_segment_distance(b1, a0, a1),
    ])
    # proper crossings realize distance 0
    d1 = _cross2(a1 - a0, b0 - a0) * _cross2(a1 - a0, b1 - a0)
    d2 = _cross2(b1 - b0, a0 - b0) * _cross2(b1 - b0, a1 - b0)
    crossing = (d1 < 0) & (d2 < 0)
    return 0.0 if bool(crossing.any()) else float(cands.min())


def _point_in_convex(pt: np.ndarray, p: ConvexPolygon) -> bool:
    v = p.vertices
    e = np.roll(v, -1, axis=0) - v
    return bool(np.all(_cross2(e, pt - v) >= 0))


def polygon_min_distance(p: ConvexPolygon, q: ConvexPolygon) -> float:
    """Minimum distance between the closed regions; 0 if they intersect."""
    if _point_in_convex(q.vertices[0], p) or _point_in_convex(p.vertices[0], q):
        return 0.0
    return _segments_min_distance(p.edges, q.edges)


def point_locate(pt, p: ConvexPolygon, eps: float = EPS_GEOM) -> Location:
    """Classify a point against the polygon with tolerance eps."""
    pt = np.asarray(pt, dtype=float)
    v = p.vertices
    e = np.roll(v, -1, axis=0) - v
    lengths = np.hypot(e[:, 0], e[:, 1])
    signed = _cross2(e, pt - v) / lengths
    if np.min(signed) > eps:
        return Location.INTERIOR
    boundary_dist = float(_point_segment_distance(pt, v, np.roll(v, -1, axis=0)).min())
    if boundary_dist <= eps:
        return Location.BOUNDARY
    return Location.OUTSIDE


def convex_intersection_area(p: ConvexPolygon, q: ConvexPolygon) -> float:
    """Area of the intersection of two convex polygons (Sutherland-Hodgman)."""
    poly = [tuple(v) for v in p.vertices]
    for (cx0, cy0), (cx1, cy1) in zip(q.vertices, np.roll(q.vertices, -1, axis=0)):
        if not poly:
            return 0.0
        ex, ey = cx1 - cx0, cy1 - cy0
        out = []
        for i in range(len(poly)):
            ax, ay = poly[i]
            bx, by = poly[(i + 1) % len(poly)]
            sa = ex * (ay - cy0) - ey * (ax - cx0)
            sb = ex * (by - cy0) - ey * (bx - cx0)
            if sa >= 0:
                out.append((ax, ay))
            if (sa >= 0) != (sb >= 0):
                t = sa / (sa - sb)
                out.append((ax + t * (bx - ax), ay + t * (by - ay)))
        poly = out
    if len(poly) < 3:
        return 0.0
    arr = np.array(poly)
    return abs(_shoelace(arr))

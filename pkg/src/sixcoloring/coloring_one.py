"""First six-coloring: pentagon/triangle/octagon/hexagon tiling parameterized by (d, alpha1).

The construction avoids distance d in red and unit distance in the other five
colors for d in [0.354, 0.553], given a suitable pentagon apex angle alpha1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, RangeError
from .geom import (
    EPS_GEOM,
    ConvexPolygon,
    RigidTransform,
    apply_transform,
    dcos,
    dirvec,
    dsin,
)
from .tiling import DEFAULT_PRIORITY, Tiling

D_LOW = 0.354
D_HIGH = 0.553

# alpha1 rises by 14.11 degrees across [0.354, 0.553]; the slope uses the
# interval width 0.199 (the figure sources use 70.9 deg per unit d)
ALPHA1_BASE = 113.7
ALPHA1_RISE = 14.11
ALPHA1_SLOPE = ALPHA1_RISE / (D_HIGH - D_LOW)


@dataclass(frozen=True)
class Params1:
    """Avoided red distance d and pentagon apex angle alpha1 (degrees)."""

    d: float
    alpha1: float

    def __post_init__(self):
        if not (0.0 < self.d < 1.0):
            raise RangeError(f"d must be in (0, 1), got {self.d}")
        if not (0.0 < self.alpha1 < 180.0):
            raise RangeError(f"alpha1 must be in (0, 180) degrees, got {self.alpha1}")


@dataclass(frozen=True)
class DerivedQuantities1:
    """Every scalar derived from (d, alpha1); lengths in plane units, angles in degrees."""

    s1: float
    s2: float
    s3: float
    s4: float
    s5: float
    t1: float
    t2: float
    t3: float
    t4: float
    t5: float
    h1: float
    h2: float
    h3: float
    h4: float
    h5: float
    h6: float
    h7: float
    w1: float
    w2: float
    w3: float
    alpha2: float
    alpha3: float
    alpha4: float
    alpha5: float
    alpha6: float
    alpha7: float
    alpha8: float
    c: float
    H: float


@dataclass(frozen=True)
class ConstraintResiduals:
    """Signed residuals of the six validity constraints; >= 0 means satisfied."""

    r1: float  # d - s4
    r2: float  # s5 - d
    r3: float  # 1 - w1
    r4: float  # 1 - w2
    r5: float  # 1 - w3
    r6: float  # h1 + h3 + d - 1

    def as_tuple(self) -> tuple:
        return (self.r1, self.r2, self.r3, self.r4, self.r5, self.r6)

    def minimum(self) -> float:
        return min(self.as_tuple())

    def satisfied(self, eps: float = EPS_GEOM) -> bool:
        return self.minimum() >= -eps


def _checked_sqrt(x: float, what: str) -> float:
    if x < 0:
        if x > -1e-12:  # roundoff at binding configurations
            return 0.0
        raise DomainError(f"negative sqrt argument in {what}: {x}")
    return math.sqrt(x)


def _checked_acos(x: float, what: str) -> float:
    if not -1.0 <= x <= 1.0:
        if abs(x) <= 1.0 + 1e-12:
            x = max(-1.0, min(1.0, x))
        else:
            raise DomainError(f"arccos argument out of range in {what}: {x}")
    return math.degrees(math.acos(x))


def _checked_asin(x: float, what: str) -> float:
    if not -1.0 <= x <= 1.0:
        if abs(x) <= 1.0 + 1e-12:
            x = max(-1.0, min(1.0, x))
        else:
            raise DomainError(f"arcsin argument out of range in {what}: {x}")
    return math.degrees(math.asin(x))


def derive_quantities(p: Params1) -> DerivedQuantities1:
    """Evaluate all derived lengths and angles for the first coloring."""
    d, a1 = p.d, p.alpha1
    sin_half = dsin(a1 / 2)
    if sin_half <= 0:
        raise DomainError("sin(alpha1/2) must be positive")
    s1 = d / 2 / sin_half
    t1 = 2 * _checked_acos((1 / sin_half) / 4, "t1") - a1
    s3 = 2 * d * dsin(t1 / 2)
    h1 = d * dcos(t1 / 2)
    h2 = h1 - (d / 2) * dcos(a1 / 2) / sin_half
    s2 = math.sqrt(h2 ** 2 + (d - s3) ** 2 / 4)
    alpha2 = 90 - a1 / 2 + _checked_asin(h2 / s2, "alpha2")
    alpha3 = 270 - a1 / 2 - alpha2
    t2 = (_checked_sqrt(1 - (s1 * dsin(30 + a1 / 2)) ** 2, "t2")
          - s1 * dcos(30 + a1 / 2)) / math.sqrt(3)
    c = max(t2 - d, 0.0)
    s4 = math.sqrt(3) * c
    h3 = 1.5 * c
    w1 = math.sqrt(3) * t2
    t3 = 180 - _checked_acos((1 - w1 ** 2 - s1 ** 2) / (-2 * w1 * s1), "t3")
    w2 = s1 * dcos(t3) + _checked_sqrt(1 - (s1 * dsin(t3)) ** 2, "w2")
    h4 = _checked_sqrt(1 - (s4 + s3) ** 2 / 4, "h4")
    h5 = _checked_sqrt(t2 ** 2 - w1 ** 2 / 4, "h5") - h3 + c
    h6 = _checked_sqrt(s1 ** 2 - (w1 - w2) ** 2 / 4, "h6")
    h7 = h4 - h5 - h6
    s5 = math.sqrt(h7 ** 2 + (w2 - s3) ** 2 / 4)
    alpha4 = 180 - a1 / 2
    alpha5 = math.degrees(math.atan2(2 * h7, w2 - s3)) + t3
    alpha6 = 390 - alpha4 - alpha5
    alpha7 = 360 - alpha2 - alpha5
    alpha8 = 240 - alpha7
    t4 = _checked_sqrt(s2 ** 2 + s5 ** 2 - 2 * s2 * s5 * dcos(alpha7), "t4")
    t5 = _checked_asin(s5 * dsin(alpha7) / t4, "t5")
    w3 = _checked_sqrt(t4 ** 2 + s2 ** 2 + 2 * t4 * s2 * dcos(alpha7 + alpha8 + t5), "w3")
    H = h1 + h4 + c / 2 + t2
    return DerivedQuantities1(
        s1=s1, s2=s2, s3=s3, s4=s4, s5=s5,
        t1=t1, t2=t2, t3=t3, t4=t4, t5=t5,
        h1=h1, h2=h2, h3=h3, h4=h4, h5=h5, h6=h6, h7=h7,
        w1=w1, w2=w2, w3=w3,
        alpha2=alpha2, alpha3=alpha3, alpha4=alpha4, alpha5=alpha5,
        alpha6=alpha6, alpha7=alpha7, alpha8=alpha8,
        c=c, H=H,
    )


def default_alpha1(d: float) -> float:
    """Linear interpolation fixing the pentagon apex angle for a given d."""
    if not (D_LOW <= d <= D_HIGH):
        raise RangeError(f"d must lie in [{D_LOW}, {D_HIGH}], got {d}")
    return ALPHA1_BASE + (d - D_LOW) * ALPHA1_SLOPE


def constraints(p: Params1) -> ConstraintResiduals:
    """Residuals of the six validity constraints at (d, alpha1)."""
    q = derive_quantities(p)
    return ConstraintResiduals(
        r1=p.d - q.s4,
        r2=q.s5 - p.d,
        r3=1 - q.w1,
        r4=1 - q.w2,
        r5=1 - q.w3,
        r6=q.h1 + q.h3 + p.d - 1,
    )


# --- shape builders (local frames) -------------------------------------


def build_pentagon(q: DerivedQuantities1, d: float) -> ConvexPolygon:
    """Equidiagonal pentagon, apex at the origin, opening downward."""
    a1 = 360 - 2 * q.alpha4  # alpha4 = 180 - alpha1/2
    apex = np.zeros(2)
    b = q.s1 * dirvec(270 - a1 / 2)
    cc = q.s1 * dirvec(270 + a1 / 2)
    dd = d * dirvec(270 - q.t1 / 2)
    ee = d * dirvec(270 + q.t1 / 2)
    return ConvexPolygon(np.array([apex, b, dd, ee, cc]))


def build_triangle(q: DerivedQuantities1):
    """Equilateral red triangle of circumradius c, one vertex down; None when c = 0."""
    if q.c <= 0:
        return None
    verts = np.array([q.c * dirvec(270), q.c * dirvec(30), q.c * dirvec(150)])
    return ConvexPolygon(verts)


def build_octagon(q: DerivedQuantities1, d: float) -> ConvexPolygon:
    """Axisymmetric octagon with four unit diagonals, in the block-local frame.

    The frame is centered on the triangle circumcenter; the octagon's bottom
    side coincides with the triangle's top side.
    """
    a1 = 360 - 2 * q.alpha4
    b = q.c * dirvec(150)
    cc = q.c * dirvec(30)
    bb = q.t2 * dirvec(150)
    ccc = q.t2 * dirvec(30)
    bbb = bb + q.s1 * dirvec(150 - a1 / 2)
    cccc = ccc + q.s1 * dirvec(30 + a1 / 2)
    arg = (q.s4 + q.s3) / 2
    if not -1.0 <= arg <= 1.0:
        raise DomainError("octagon top construction degenerates")
    top_angle = math.degrees(math.acos(arg))
    e = b + dirvec(top_angle)
    dd = cc + dirvec(180 - top_angle)
    return ConvexPolygon(np.array([e, cccc, ccc, cc, b, bb, bbb, dd]))


def build_hexagon(q: DerivedQuantities1) -> ConvexPolygon:
    """Hexagon with side sequence s2, s5 alternating, first vertex at the origin."""
    headings = [
        180 - q.alpha3,
        -q.alpha3 + q.alpha7,
        -q.alpha3 + q.alpha7 - 180 + q.alpha8,
        -q.alpha3 + 2 * q.alpha7 + q.alpha8,
        -q.alpha3 + 2 * q.alpha7 + 2 * q.alpha8 - 180,
    ]
    lengths = [q.s2, q.s5, q.s2, q.s5, q.s2]
    pts = [np.zeros(2)]
    for length, heading in zip(lengths, headings):
        pts.append(pts[-1] + length * dirvec(heading))
    hexagon = ConvexPolygon(np.array(pts))
    closing = np.linalg.norm(pts[-1] - pts[0])
    if abs(closing - q.s5) > 1e-6:
        raise DomainError("hexagon does not close")
    return hexagon


def assemble_block(p: Params1) -> Tiling:
    """Assemble the fundamental block and lattice of the first coloring."""
    q = derive_quantities(p)
    d = p.d
    h_c = q.h4 + q.c / 2
    pent = build_pentagon(q, d)
    octagon = build_octagon(q, d)
    hexagon = build_hexagon(q)
    cells = []
    tri = build_triangle(q)
    if tri is not None:
        cells.append((tri, "red"))
    cells.append((octagon, "green"))
    cells.append((apply_transform(RigidTransform(rotation=-120), octagon), "blue"))
    cells.append((apply_transform(RigidTransform(rotation=120), octagon), "orange"))
    # pentagons: one above the block center, two flanking the green octagon
    cells.append((pent.translated((0.0, h_c + q.h1)), "red"))
    t_right = tuple(q.t2 * dirvec(30))
    t_left = tuple(q.t2 * dirvec(150))
    cells.append((apply_transform(RigidTransform(rotation=120, translation=t_right), pent), "red"))
    cells.append((apply_transform(RigidTransform(rotation=-120, translation=t_left), pent), "red"))
    cells.append((hexagon.translated((q.s3 / 2, h_c)), "turquoise"))
    cells.append((apply_transform(
        RigidTransform(mirror=True, translation=(-q.s3 / 2, h_c)), hexagon), "yellow"))
    v1 = (0.0, q.H)
    v2 = (q.H * dcos(30), q.H * dsin(30))
    return Tiling(cells, v1, v2, DEFAULT_PRIORITY)


# --- feasibility scan ---------------------------------------------------


def _feasible(d: float, alpha1: float, eps: float = EPS_GEOM) -> bool:
    try:
        return constraints(Params1(d, alpha1)).satisfied(eps)
    except (DomainError, RangeError):
        return False


@dataclass(frozen=True)
class FeasibilityMap:
    """Grid feasibility records plus a refined alpha1 band per d."""

    grid: tuple  # of (d, alpha1, feasible)
    bands: dict  # d -> (alpha_lo, alpha_hi) or None

    def band(self, d: float):
        return self.bands.get(d)


def _refine_edge(d: float, inside: float, outside: float, iters: int = 50) -> float:
    """Bisect the feasibility boundary between a feasible and infeasible alpha1."""
    for _ in range(iters):
        mid = 0.5 * (inside + outside)
        if _feasible(d, mid):
            inside = mid
        else:
            outside = mid
    return inside


def feasible_region(d_grid, alpha_grid) -> FeasibilityMap:
    """Scan a (d, alpha1) grid; report per-d feasible alpha1 bands.

    Band edges are refined by bisection, seeded from grid hits and (when d is
    in the interpolation range) from default_alpha1(d), so bands narrower than
    the alpha grid step are still found.
    """
    d_grid = list(d_grid)
    alpha_grid = list(alpha_grid)
    records = []
    bands = {}
    for d in d_grid:
        hits = []
        for a in alpha_grid:
            ok = _feasible(d, a)
            records.append((d, a, ok))
            if ok:
                hits.append(a)
        if not hits and D_LOW <= d <= D_HIGH:
            seed = default_alpha1(d)
            if _feasible(d, seed):
                hits = [seed]
        if not hits:
            bands[d] = None
            continue
        lo, hi = hits[0], hits[-1]
        step = alpha_grid[1] - alpha_grid[0] if len(alpha_grid) > 1 else 1.0
        bands[d] = (_refine_edge(d, lo, lo - step), _refine_edge(d, hi, hi + step))
    return FeasibilityMap(grid=tuple(records), bands=bands)

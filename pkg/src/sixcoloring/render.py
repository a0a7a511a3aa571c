"""SVG rendering of periodic tilings, with optional distance-circle overlays."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .tiling import Tiling

# the pastel palette used throughout the figures
PALETTE = {
    "red": "#FFADAD",
    "orange": "#FFD6A5",
    "yellow": "#FDFFB6",
    "green": "#CAFFBF",
    "turquoise": "#9BF6FF",
    "blue": "#A0C4FF",
}

# dash patterns by overlay role
DASH_UNIT = "2,3"       # dotted, unit distance
DASH_AVOID = "8,4"      # dashed, distance d
DASH_MIN = "8,4,2,4"    # dash-dotted, d_min


@dataclass(frozen=True)
class Overlay:
    """Circles of the given radii drawn around a center point."""

    center: tuple
    radii: tuple  # of (radius, dasharray)


@dataclass(frozen=True)
class RenderSpec:
    viewport: tuple  # (x_min, y_min, x_max, y_max) in plane units
    scale: float = 200.0
    overlays: tuple = ()
    palette: dict = field(default_factory=lambda: dict(PALETTE))

    def __post_init__(self):
        x0, y0, x1, y1 = self.viewport
        if not (x1 > x0 and y1 > y0):
            raise ValueError("viewport must have positive width and height")
        if self.scale <= 0:
            raise ValueError("scale must be positive")


def _fmt(x: float) -> str:
    return f"{x:.6f}".rstrip("0").rstrip(".")


def render_svg(tiling: Tiling, spec: RenderSpec) -> str:
    """Render the tiling clipped to the viewport as an SVG 1.1 document.

    Element order is stable (lattice offset, then cell index) so repeated
    renders are byte-identical.
    """
    x0, y0, x1, y1 = spec.viewport
    s = spec.scale
    width, height = (x1 - x0) * s, (y1 - y0) * s

    def to_px(pt):
        return (pt[0] - x0) * s, (y1 - pt[1]) * s  # flip y: SVG grows downward

    # lattice offsets whose translated block can reach the viewport
    all_v = np.vstack([p.vertices for p, _ in tiling.cells])
    bmin, bmax = all_v.min(axis=0), all_v.max(axis=0)
    L = np.column_stack([tiling.v1, tiling.v2])
    Linv = np.linalg.inv(L)
    corners = np.array([[x0, y0], [x1, y0], [x1, y1], [x0, y1]], dtype=float)
    frac = corners @ Linv.T
    pad = math.ceil(max(np.abs(np.linalg.solve(L, bmax - bmin)))) + 1
    a_lo, a_hi = math.floor(frac[:, 0].min()) - pad, math.ceil(frac[:, 0].max()) + pad
    b_lo, b_hi = math.floor(frac[:, 1].min()) - pad, math.ceil(frac[:, 1].max()) + pad

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_fmt(width)}" height="{_fmt(height)}" '
        f'viewBox="0 0 {_fmt(width)} {_fmt(height)}">',
    ]
    for a in range(a_lo, a_hi + 1):
        for b in range(b_lo, b_hi + 1):
            off = a * tiling.v1 + b * tiling.v2
            for poly, color in tiling.cells:
                v = poly.vertices + off
                if (v[:, 0].max() < x0 or v[:, 0].min() > x1
                        or v[:, 1].max() < y0 or v[:, 1].min() > y1):
                    continue
                pts = " ".join(f"{_fmt(px)},{_fmt(py)}" for px, py in map(to_px, v))
                fill = spec.palette.get(color, "#CCCCCC")
                lines.append(f'  <polygon points="{pts}" fill="{fill}" '
                             f'stroke="#000000" stroke-width="1"/>')
    for ov in spec.overlays:
        cx, cy = to_px(ov.center)
        lines.append(f'  <circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="2" fill="#000000"/>')
        for radius, dash in ov.radii:
            lines.append(f'  <circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" '
                         f'r="{_fmt(radius * s)}" fill="none" stroke="#000000" '
                         f'stroke-width="1" stroke-dasharray="{dash}"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"

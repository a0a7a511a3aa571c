"""Periodic colored tilings: fundamental block, lattice, point coloring, JSON I/O."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidTilingError
from .geom import EPS_GEOM, ConvexPolygon, convex_intersection_area, polygon_area

COLORS = ("red", "orange", "green", "blue", "yellow", "turquoise")

# boundary points get the highest-priority incident color (red shapes first)
DEFAULT_PRIORITY = ("red", "orange", "green", "blue", "yellow", "turquoise")


@dataclass(frozen=True)
class ColoringType:
    """Avoided distance per color; color i must not realize distances[i]."""

    distances: dict

    @classmethod
    def unit_except(cls, red: float) -> "ColoringType":
        """Five colors avoiding unit distance, red avoiding `red`."""
        d = {c: 1.0 for c in COLORS}
        d["red"] = float(red)
        return cls(d)

    def __post_init__(self):
        if any(v <= 0 for v in self.distances.values()):
            raise ValueError("avoided distances must be positive")


class Tiling:
    """Colored polygons of one fundamental block plus two lattice vectors."""

    def __init__(self, cells, v1, v2, priority=DEFAULT_PRIORITY):
        self.cells = [(poly, str(color)) for poly, color in cells]
        self.v1 = np.asarray(v1, dtype=float)
        self.v2 = np.asarray(v2, dtype=float)
        self.priority = tuple(priority)
        if abs(self.cell_area()) <= 0:
            raise InvalidTilingError("lattice vectors are linearly dependent")
        self._locator = None

    def cell_area(self) -> float:
        return abs(float(self.v1[0] * self.v2[1] - self.v1[1] * self.v2[0]))

    def block_area(self) -> float:
        return sum(polygon_area(p) for p, _ in self.cells)

    def validate(self, eps: float = EPS_GEOM) -> None:
        """Check the partition invariants; raise InvalidTilingError on failure."""
        if abs(self.block_area() - self.cell_area()) > eps:
            raise InvalidTilingError(
                f"block area {self.block_area()} != lattice cell area {self.cell_area()}"
            )
        offsets = [a * self.v1 + b * self.v2 for a in (-1, 0, 1) for b in (-1, 0, 1)]
        for i, (p, _) in enumerate(self.cells):
            for j in range(i, len(self.cells)):
                q = self.cells[j][0]
                for off in offsets:
                    if i == j and not np.any(off):
                        continue
                    if convex_intersection_area(p, q.translated(off)) > 1e-12:
                        raise InvalidTilingError(f"cells {i} and {j} overlap")

    # --- point coloring -------------------------------------------------

    def _build_locator(self):
        """Cells translated to cover the base lattice parallelogram."""
        L = np.column_stack([self.v1, self.v2])
        Linv = np.linalg.inv(L)
        corners = np.array([[0, 0], [1, 0], [1, 1], [0, 1]], dtype=float) @ L.T
        base = ConvexPolygon(corners)
        from .geom import polygon_min_distance

        candidates = []
        for idx, (poly, color) in enumerate(self.cells):
            for a in range(-2, 3):
                for b in range(-2, 3):
                    t = poly.translated(a * self.v1 + b * self.v2)
                    if polygon_min_distance(t, base) <= EPS_GEOM:
                        candidates.append((t, color, idx))
        self._locator = (L, Linv, candidates)
        return self._locator

    def color_at_many(self, pts: np.ndarray):
        """Colors of many points at once.

        Returns (colors, interior): an object array of color names and a bool
        mask marking points strictly interior to their cell (by EPS_GEOM).
        """
        if self._locator is None:
            self._build_locator()
        L, Linv, candidates = self._locator
        pts = np.asarray(pts, dtype=float)
        frac = pts @ Linv.T
        frac -= np.floor(frac)
        base = frac @ L.T
        n = len(base)
        rank = {c: i for i, c in enumerate(self.priority)}
        nc = len(self.priority)
        interior_rank = np.full(n, nc, dtype=int)
        boundary_rank = np.full(n, nc, dtype=int)
        interior = np.zeros(n, dtype=bool)
        for poly, color, _ in candidates:
            v = poly.vertices
            e = np.roll(v, -1, axis=0) - v
            lengths = np.hypot(e[:, 0], e[:, 1])
            rel = base[:, None, :] - v[None, :, :]
            signed = (e[:, 0] * rel[:, :, 1] - e[:, 1] * rel[:, :, 0]) / lengths
            mindist = signed.min(axis=1)
            inside = mindist > EPS_GEOM
            hit = mindist >= -EPS_GEOM
            r = rank[color]
            interior_rank = np.where(inside, np.minimum(interior_rank, r), interior_rank)
            boundary_rank = np.where(hit, np.minimum(boundary_rank, r), boundary_rank)
            interior |= inside
        final = np.where(interior, interior_rank, boundary_rank)
        if np.any(final >= nc):
            raise InvalidTilingError("point not covered by any cell translate")
        colors = np.array([self.priority[r] for r in final], dtype=object)
        return colors, interior

    def color_at(self, pt) -> str:
        colors, _ = self.color_at_many(np.asarray(pt, dtype=float)[None, :])
        return colors[0]

    # --- serialization --------------------------------------------------

    def to_json(self) -> str:
        def fmt(x):
            return float(f"{x:.17g}")

        doc = {
            "lattice": [[fmt(self.v1[0]), fmt(self.v1[1])],
                        [fmt(self.v2[0]), fmt(self.v2[1])]],
            "cells": [
                {"color": color, "vertices": [[fmt(x), fmt(y)] for x, y in poly.vertices]}
                for poly, color in self.cells
            ],
            "priority": list(self.priority),
        }
        return json.dumps(doc, indent=2)

    @classmethod
    def from_json(cls, text: str) -> "Tiling":
        doc = json.loads(text)
        cells = [(ConvexPolygon(np.array(c["vertices"], dtype=float)), c["color"])
                 for c in doc["cells"]]
        return cls(cells, doc["lattice"][0], doc["lattice"][1], tuple(doc["priority"]))

"""Certification that a periodic tiling avoids its per-color distances.

For each color, every pair of same-color cells (over all relevant lattice
translates) is checked: the set of distances realized between two convex
compacts is the interval [min distance, max distance], so the avoided
distance must not fall inside it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .geom import polygon_max_distance, polygon_min_distance
from .tiling import ColoringType, Tiling

# a distance counts as violated only if it is inside the interval by more
# than VIOLATION_TOL; within BINDING_TOL of an endpoint it is "binding"
VIOLATION_TOL = 1e-9
BINDING_TOL = 1e-6


@dataclass(frozen=True)
class Witness:
    """One offending same-color pair."""

    color: str
    pair: tuple        # cell indices (i, j) within the block
    offset: tuple      # lattice offset (a, b) applied to cell j
    interval: tuple    # realized distance interval (min, max)
    distance: float    # the avoided distance realized


@dataclass(frozen=True)
class VerificationReport:
    valid: bool
    witnesses: tuple
    pairs_checked: int
    translates_enumerated: int

    @property
    def verdict(self) -> str:
        return "valid" if self.valid else "invalid"


def _lattice_offsets(v1: np.ndarray, v2: np.ndarray, radius: float):
    """All integer (a, b) with |a v1 + b v2| <= radius."""
    s = np.linalg.svd(np.column_stack([v1, v2]), compute_uv=False)[-1]
    bound = int(math.ceil(radius / s)) + 1
    out = []
    for a in range(-bound, bound + 1):
        for b in range(-bound, bound + 1):
            if np.linalg.norm(a * v1 + b * v2) <= radius:
                out.append((a, b))
    return out


def _bbox_gap(p, q) -> float:
    """Cheap lower bound on the min distance via bounding boxes."""
    pmin, pmax = p.vertices.min(axis=0), p.vertices.max(axis=0)
    qmin, qmax = q.vertices.min(axis=0), q.vertices.max(axis=0)
    gap = np.maximum(0.0, np.maximum(qmin - pmax, pmin - qmax))
    return float(np.hypot(gap[0], gap[1]))


def _same_color_pairs(t: Tiling, ct: ColoringType, radius_pad: float = 1.0):
    """Yield (color, d, i, j, offset, P, Q_translated) for all relevant pairs."""
    diams = [polygon_max_distance(p, p) for p, _ in t.cells]
    centers = [p.vertices.mean(axis=0) for p, _ in t.cells]
    by_color = {}
    for idx, (_, color) in enumerate(t.cells):
        by_color.setdefault(color, []).append(idx)
    for color, idxs in by_color.items():
        d = ct.distances[color]
        for ii, i in enumerate(idxs):
            for j in idxs[ii:]:
                # dist(P_i, P_j + off) >= |off| - |c_i - c_j| - diam_i - diam_j,
                # so offsets beyond this radius cannot realize distance d
                shift = float(np.linalg.norm(centers[i] - centers[j]))
                radius = radius_pad * (d + diams[i] + diams[j] + shift)
                offsets = _lattice_offsets(t.v1, t.v2, radius)
                for a, b in offsets:
                    if i == j and (a, b) <= (0, 0) and (a, b) != (0, 0):
                        continue  # self-pairs: offsets come in +- pairs
                    off = a * t.v1 + b * t.v2
                    yield color, d, i, j, (a, b), t.cells[i][0], t.cells[j][0].translated(off)


def verify(t: Tiling, ct: ColoringType, strictness: str = "open",
           validate: bool = True, radius_pad: float = 1.0) -> VerificationReport:
    """Check that no color realizes its avoided distance.

    Under "open" strictness the cells are treated as open interiors: the
    avoided distance must lie strictly inside a realized interval to count.
    Under "closed" the interval endpoints count as well.
    """
    if strictness not in ("open", "closed"):
        raise ValueError(f"unknown strictness {strictness!r}")
    if validate:
        t.validate()
    witnesses = []
    pairs = 0
    translates = set()
    for color, d, i, j, (a, b), p, q in _same_color_pairs(t, ct, radius_pad):
        pairs += 1
        translates.add((a, b))
        if _bbox_gap(p, q) > d:
            continue
        mx = polygon_max_distance(p, q)
        mn = 0.0 if (i == j and (a, b) == (0, 0)) else polygon_min_distance(p, q)
        if strictness == "open":
            bad = (d - mn > VIOLATION_TOL) and (mx - d > VIOLATION_TOL)
        else:
            bad = (d >= mn - VIOLATION_TOL) and (d <= mx + VIOLATION_TOL)
        if bad:
            witnesses.append(Witness(color, (i, j), (a, b), (mn, mx), d))
    witnesses.sort(key=lambda w: (w.color, w.pair, w.offset))
    return VerificationReport(valid=not witnesses, witnesses=tuple(witnesses),
                              pairs_checked=pairs,
                              translates_enumerated=len(translates))


def critical_witnesses(t: Tiling, ct: ColoringType) -> list:
    """Same-color pairs whose realized interval endpoint is within 1e-6 of
    the avoided distance: the binding constraints of a valid tiling."""
    binding = []
    for color, d, i, j, (a, b), p, q in _same_color_pairs(t, ct):
        if _bbox_gap(p, q) > d + BINDING_TOL:
            continue
        mx = polygon_max_distance(p, q)
        mn = 0.0 if (i == j and (a, b) == (0, 0)) else polygon_min_distance(p, q)
        if abs(mn - d) <= BINDING_TOL or abs(mx - d) <= BINDING_TOL:
            binding.append(Witness(color, (i, j), (a, b), (mn, mx), d))
    binding.sort(key=lambda w: (w.color, w.pair, w.offset))
    return binding


def monte_carlo_check(t: Tiling, ct: ColoringType, n: int, seed: int) -> int:
    """Count monochromatic interior point pairs at the avoided distances.

    Draws n uniform points in one lattice cell and, per point, one uniform
    direction; the second endpoint lies at the first point's avoided
    distance. Uses the counter-based Philox generator for reproducibility.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = np.random.Generator(np.random.Philox(key=seed))
    u = rng.random((n, 2))
    theta = rng.random(n) * (2 * math.pi)
    pts = u[:, :1] * t.v1 + u[:, 1:] * t.v2
    colors1, interior1 = t.color_at_many(pts)
    dist = np.array([ct.distances[c] for c in colors1])
    pts2 = pts + dist[:, None] * np.column_stack([np.cos(theta), np.sin(theta)])
    colors2, interior2 = t.color_at_many(pts2)
    return int(np.count_nonzero((colors1 == colors2) & interior1 & interior2))

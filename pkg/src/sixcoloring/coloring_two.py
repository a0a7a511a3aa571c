"""Second six-coloring: a fixed pentagon/square/heptagon/hexagon tiling.

One tiling is valid for every avoided red distance d in [d_min, d_max], where
d_max is a quartic root near 0.657 and d_min = sqrt(3) - 2 * d_max.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import ConvergenceError, DomainError
from .geom import ConvexPolygon, dirvec
from .tiling import DEFAULT_PRIORITY, Tiling

SQRT3 = math.sqrt(3)


def quartic(x: float) -> float:
    """The defining polynomial of d_max."""
    return x ** 4 + 5 * SQRT3 * x ** 3 + 18 * x ** 2 - 3 * SQRT3 * x - 7


def _quartic_deriv(x: float) -> float:
    return 4 * x ** 3 + 15 * SQRT3 * x ** 2 + 36 * x - 3 * SQRT3


def solve_dmax() -> float:
    """Real quartic root in (0.6, 0.7): bisection bracket plus Newton polish."""
    lo, hi = 0.6, 0.7
    if quartic(lo) * quartic(hi) >= 0:
        raise ConvergenceError("no sign change on [0.6, 0.7]")
    for _ in range(60):
        mid = 0.5 * (lo + hi)
        if quartic(lo) * quartic(mid) <= 0:
            hi = mid
        else:
            lo = mid
    x = 0.5 * (lo + hi)
    for _ in range(5):
        x -= quartic(x) / _quartic_deriv(x)
    return x


def closed_form_dmax() -> float:
    """Literal evaluation of the nested-radical expression for d_max."""
    t = (7290 - 15 * math.sqrt(1821)) ** (1 / 3)
    u = (5 * (486 + math.sqrt(1821))) ** (1 / 3) / 3 ** (2 / 3)
    inner = 27 / 4 + t / 3 + u
    return (-(5 * SQRT3) / 4
            + 0.5 * math.sqrt(inner)
            + 0.5 * math.sqrt(27 / 2 - t / 3 - u + (9 / 4) * math.sqrt(3 / inner)))


@dataclass(frozen=True)
class Constants2:
    """Fixed scalars of the second coloring (angles in degrees)."""

    d_max: float
    d_min: float
    aux_angle: float  # arctan(1 / (2 d_max + sqrt 3))
    aux_w: float      # sqrt(3 - sqrt(3) d_max - d_max^2) / 2
    aux_x: float      # 1/14
    aux_y: float      # 2 sqrt(3) / 7
    beta1: float      # 45 + arccos(47/49)/4
    beta2: float      # 90 - arccos(47/49)/2
    u2: float         # heptagon side, measured from coordinates
    u3: float         # heptagon side, measured from coordinates


def _heptagon_points(d_max: float) -> dict:
    """Vertex coordinates of the base-row heptagon and its neighbors."""
    aux_angle = math.degrees(math.atan2(1, 2 * d_max + SQRT3))
    aux_w = math.sqrt(3 - SQRT3 * d_max - d_max ** 2) / 2
    aux_x, aux_y = 1 / 14, 2 * SQRT3 / 7
    pts = {
        "A": np.array([0.0, 0.0]),
        "AA": np.array([1.0, 0.0]),
        "PA": np.array([0.5, SQRT3 / 2]),
        "B": np.array([0.0, SQRT3]),
        "C": np.array([1.0, SQRT3]),
        "PB": np.array([-0.5, SQRT3 / 2]),
        "PC": np.array([1.5, SQRT3 / 2]),
        "MAA": np.array([0.5, -SQRT3 / 2 + d_max]),
        "X": np.array([0.5, SQRT3 / 2 - d_max]),
        "Y": np.array([-0.5, SQRT3 / 2 + d_max]),
        "Z": np.array([1.5, SQRT3 / 2 + d_max]),
        "XX": np.array([0.5 - SQRT3 / 2 + d_max, 0.0]),
        "XXX": np.array([0.5 + SQRT3 / 2 - d_max, 0.0]),
        "YY": np.array([-0.5 + SQRT3 / 2 - d_max, SQRT3]),
        "ZZ": np.array([1.5 - SQRT3 / 2 + d_max, SQRT3]),
        "PD": np.array([0.5, 1.5 * SQRT3]),
        "M": np.array([0.5 - aux_x, SQRT3 - aux_y]),
        "N": np.array([0.5 + aux_x, SQRT3 - aux_y]),
        "NN": np.array([0.5 - aux_x, SQRT3 + aux_y]),
        "MM": np.array([0.5 + aux_x, SQRT3 + aux_y]),
    }
    u = np.array([0.25, 3 * SQRT3 / 4 - d_max / 2])
    v = np.array([-0.25, SQRT3 / 4 + d_max / 2])
    w = np.array([0.75, 3 * SQRT3 / 4 - d_max / 2])
    r = np.array([1.25, SQRT3 / 4 + d_max / 2])
    pts["I1"] = u - aux_w * dirvec(aux_angle)
    pts["I2"] = v + aux_w * dirvec(aux_angle)
    pts["I3"] = r + aux_w * dirvec(180 - aux_angle)
    pts["I4"] = w - aux_w * dirvec(180 - aux_angle)
    pts["I5"] = pts["PD"] + pts["PA"] - pts["I2"]
    pts["I6"] = pts["PD"] + pts["PA"] - pts["I3"]
    pts["MMM"] = pts["MM"] + np.array([-1.0, -SQRT3])
    pts["NNN"] = pts["NN"] + np.array([1.0, -SQRT3])
    return pts


@lru_cache(maxsize=1)
def constants() -> Constants2:
    d_max = solve_dmax()
    d_min = SQRT3 - 2 * d_max
    pts = _heptagon_points(d_max)
    u2 = float(np.linalg.norm(pts["I4"] - pts["NNN"]))
    u3 = float(np.linalg.norm(pts["I3"] - pts["PA"]))
    acos4749 = math.degrees(math.acos(47 / 49))
    return Constants2(
        d_max=d_max,
        d_min=d_min,
        aux_angle=math.degrees(math.atan2(1, 2 * d_max + SQRT3)),
        aux_w=math.sqrt(3 - SQRT3 * d_max - d_max ** 2) / 2,
        aux_x=1 / 14,
        aux_y=2 * SQRT3 / 7,
        beta1=45 + acos4749 / 4,
        beta2=90 - acos4749 / 2,
        u2=u2,
        u3=u3,
    )


# the four unit diagonals of the base-row heptagon, by vertex name
HEPTAGON_UNIT_DIAGONALS = (("X", "I4"), ("AA", "I3"), ("AA", "PA"), ("NNN", "PA"))

# the three unit diagonals of the hexagon
HEXAGON_UNIT_DIAGONALS = (("B", "C"), ("M", "MM"), ("N", "NN"))


def build_square(c: Constants2) -> ConvexPolygon:
    """Red square centered at (1/2, 0) with diagonals of length d_min."""
    pts = _heptagon_points(c.d_max)
    return ConvexPolygon(np.array([pts["X"], pts["XX"], pts["MAA"], pts["XXX"]]))


def build_hexagon2(c: Constants2) -> ConvexPolygon:
    """Blue centrosymmetric hexagon, centered at (1/2, sqrt(3)), three unit diagonals."""
    pts = _heptagon_points(c.d_max)
    hexagon = ConvexPolygon(np.array(
        [pts["M"], pts["N"], pts["C"], pts["MM"], pts["NN"], pts["B"]]))
    for a, b in HEXAGON_UNIT_DIAGONALS:
        if abs(np.linalg.norm(pts[a] - pts[b]) - 1.0) > 1e-10:
            raise DomainError(f"hexagon diagonal {a}-{b} is not unit")
    return hexagon


def build_heptagon(c: Constants2) -> ConvexPolygon:
    """Base-row heptagon (yellow placement frame) with four unit diagonals."""
    pts = _heptagon_points(c.d_max)
    for a, b in HEPTAGON_UNIT_DIAGONALS:
        if abs(np.linalg.norm(pts[a] - pts[b]) - 1.0) > 1e-10:
            raise DomainError(f"heptagon diagonal {a}-{b} is not unit")
    if abs(np.linalg.norm(pts["I4"] - pts["I3"]) - c.d_max) > 1e-10:
        raise DomainError("heptagon edge I4-I3 is not d_max")
    return ConvexPolygon(np.array(
        [pts["X"], pts["XXX"], pts["AA"], pts["NNN"], pts["I4"], pts["I3"], pts["PA"]]))


def build_pentagon2(c: Constants2) -> ConvexPolygon:
    """Red axisymmetric pentagon with apex at (1/2, 3 sqrt(3)/2)."""
    pts = _heptagon_points(c.d_max)
    return ConvexPolygon(np.array(
        [pts["I5"], pts["MM"], pts["NN"], pts["I6"], pts["PD"]]))


def assemble_block2(c: Constants2) -> Tiling:
    """Fundamental block of the second coloring; lattice (2, 0) and (1, sqrt(3))."""
    pts = _heptagon_points(c.d_max)

    def poly(names, shift=(0.0, 0.0)):
        return ConvexPolygon(np.array([pts[n] for n in names]) + np.asarray(shift))

    upper = (1.0, -SQRT3)
    cells = [
        (poly(["Z", "ZZ", "C", "N", "I3", "I4", "PC"], (-1.0, -SQRT3)), "orange"),
        (poly(["Y", "YY", "B", "M", "I2", "I1", "PB"], upper), "green"),
        (poly(["PA", "I2", "M", "N", "I3"], upper), "red"),
        (poly(["M", "N", "C", "MM", "NN", "B"], upper), "blue"),
        (poly(["I5", "MM", "NN", "I6", "PD"], upper), "red"),
        (poly(["X", "XX", "A", "MMM", "I1", "I2", "PA"]), "turquoise"),
        (poly(["X", "XXX", "AA", "NNN", "I4", "I3", "PA"]), "yellow"),
        (poly(["X", "XX", "MAA", "XXX"]), "red"),
    ]
    return Tiling(cells, (2.0, 0.0), (1.0, SQRT3), DEFAULT_PRIORITY)

"""Command-line interface: verify, scan, render, probe, and roots subcommands."""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import coloring_one, coloring_two
from .errors import DomainError, RangeError
from .render import DASH_AVOID, DASH_MIN, DASH_UNIT, Overlay, RenderSpec, render_svg
from .tiling import ColoringType
from .verifier import monte_carlo_check, verify

EXIT_VALID = 0
EXIT_INVALID = 1
EXIT_ERROR = 2


def _build_tiling(coloring: int, d: float, alpha1=None):
    if coloring == 1:
        if alpha1 is None:
            alpha1 = coloring_one.default_alpha1(d)
        return coloring_one.assemble_block(coloring_one.Params1(d, alpha1))
    return coloring_two.assemble_block2(coloring_two.constants())


def cmd_verify(args) -> int:
    tiling = _build_tiling(args.coloring, args.d, args.alpha1)
    report = verify(tiling, ColoringType.unit_except(red=args.d), strictness=args.strict)
    print(f"coloring {args.coloring}, d = {args.d}: {report.verdict} "
          f"({report.pairs_checked} pairs, {report.translates_enumerated} translates)")
    for w in report.witnesses:
        mn, mx = w.interval
        print(f"  witness: color={w.color} cells={w.pair} offset={w.offset} "
              f"interval=[{mn:.9f}, {mx:.9f}] realizes {w.distance}")
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(tiling.to_json())
    return EXIT_VALID if report.valid else EXIT_INVALID


def _float_range(lo: float, hi: float, step: float):
    n = int(round((hi - lo) / step))
    return [round(lo + k * step, 12) for k in range(n + 1)]


def cmd_scan(args) -> int:
    rows = []
    for d in _float_range(args.d_min, args.d_max, args.d_step):
        for a in _float_range(args.alpha_min, args.alpha_max, args.alpha_step):
            try:
                r = coloring_one.constraints(coloring_one.Params1(d, a)).as_tuple()
                feasible = min(r) >= -1e-9
                res = ",".join(f"{x:.12g}" for x in r)
            except (DomainError, RangeError):
                feasible = False
                res = ",".join(["nan"] * 6)
            rows.append(f"{d:.12g},{a:.12g},{res},{str(feasible).lower()}")
    header = "d,alpha1,r1,r2,r3,r4,r5,r6,feasible"
    text = "\r\n".join([header] + rows) + "\r\n"
    try:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_ERROR
    print(f"wrote {len(rows)} rows to {args.out}")
    return EXIT_VALID


def cmd_render(args) -> int:
    tiling = _build_tiling(args.coloring, args.d, args.alpha1)
    radii = [(1.0, DASH_UNIT), (args.d, DASH_AVOID)]
    if args.coloring == 2:
        radii.append((coloring_two.constants().d_min, DASH_MIN))
    overlays = []
    for spec in args.overlay or []:
        parts = [float(x) for x in spec.split(",")]
        if len(parts) < 2:
            print(f"bad overlay {spec!r}: need x,y[,r...]", file=sys.stderr)
            return EXIT_ERROR
        r = [(rr, DASH_AVOID) for rr in parts[2:]] or radii
        overlays.append(Overlay(center=(parts[0], parts[1]), radii=tuple(r)))
    x0, y0, x1, y1 = (float(x) for x in args.viewport.split(","))
    spec = RenderSpec(viewport=(x0, y0, x1, y1), scale=args.scale, overlays=tuple(overlays))
    svg = render_svg(tiling, spec)
    with open(args.out, "w") as fh:
        fh.write(svg)
    print(f"wrote {args.out}")
    return EXIT_VALID


def cmd_probe(args) -> int:
    tiling = _build_tiling(args.coloring, args.d, args.alpha1)
    print(tiling.color_at((args.x, args.y)))
    return EXIT_VALID


def cmd_roots(args) -> int:
    d_max = coloring_two.solve_dmax()
    d_min = np.sqrt(3) - 2 * d_max
    cf = coloring_two.closed_form_dmax()
    print(f"d_max = {d_max:.15f}")
    print(f"d_min = {d_min:.15f}")
    print(f"quartic residual = {coloring_two.quartic(d_max):.3e}")
    print(f"|closed_form - bisection| = {abs(cf - d_max):.3e}")
    return EXIT_VALID


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sixcoloring",
        description="Construct, verify, and render six-colorings of the plane "
                    "avoiding unit distance in five colors and distance d in the sixth.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_tiling_args(p):
        p.add_argument("--coloring", type=int, choices=(1, 2), required=True)
        p.add_argument("--d", type=float, required=True)
        p.add_argument("--alpha1", type=float, default=None,
                       help="pentagon apex angle in degrees (coloring 1 only)")

    p = sub.add_parser("verify", help="verify a tiling avoids its distances")
    add_tiling_args(p)
    p.add_argument("--strict", choices=("open", "closed"), default="open")
    p.add_argument("--json", default=None, help="write the tiling as JSON here")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("scan", help="grid-scan coloring 1 constraint residuals to CSV")
    p.add_argument("--d-min", type=float, required=True)
    p.add_argument("--d-max", type=float, required=True)
    p.add_argument("--d-step", type=float, default=0.001)
    p.add_argument("--alpha-min", type=float, default=95.0)
    p.add_argument("--alpha-max", type=float, default=165.0)
    p.add_argument("--alpha-step", type=float, default=0.1)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("render", help="render a tiling to SVG")
    add_tiling_args(p)
    p.add_argument("--viewport", required=True, help="x0,y0,x1,y1 in plane units")
    p.add_argument("--scale", type=float, default=200.0)
    p.add_argument("--overlay", action="append", default=None,
                   help="x,y[,r...] circle overlay; repeatable")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("probe", help="print the color at a point")
    add_tiling_args(p)
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--y", type=float, required=True)
    p.set_defaults(func=cmd_probe)

    p = sub.add_parser("roots", help="print d_max, d_min, and cross-checks")
    p.set_defaults(func=cmd_roots)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (DomainError, RangeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())

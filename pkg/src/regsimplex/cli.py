"""Command line: ``verify``, ``table`` and ``trace``.

Exit codes: 0 all checks pass, 1 some check failed, 2 usage or I/O error.
"""

from __future__ import annotations

import argparse
import csv
import re
import sys
from fractions import Fraction

from . import __version__
from .report import TABLE_HEADER, angle_table, dumps, render_text
from .scene import POINT_NAMES, build_construction, line_parameters_of_h
from .sweep import induction_sweep
from .svg import write_svg

MIN_DIM_MSG = "the number of dimensions must be at least 2"

_INJECT_RE = re.compile(r"^([A-H]):(\d+):(-?\d+(?:/\d+)?)$")


def _fmt_point(p) -> str:
    return "(" + ", ".join(str(c) for c in p) + ")"


def parse_inject(text: str):
    m = _INJECT_RE.match(text)
    if not m:
        raise argparse.ArgumentTypeError(f"expected POINT:COORD:DELTA (e.g. E:4:1/1000), got {text!r}")
    point, coord, delta = m.group(1), int(m.group(2)), Fraction(m.group(3))
    if coord < 1:
        raise argparse.ArgumentTypeError("COORD is 1-based")
    if delta == 0:
        raise argparse.ArgumentTypeError("DELTA must be nonzero")
    return point, coord, delta


def cmd_verify(args, parser) -> int:
    if args.max_dim < 2:
        parser.error(MIN_DIM_MSG)
    if args.inject and args.inject[1] > args.max_dim + 1:
        parser.error(f"--inject coordinate exceeds the largest scene dimension {args.max_dim + 1}")
    report = induction_sweep(args.max_dim, inject=args.inject, workers=args.workers)
    sys.stdout.write(dumps(report) if args.format == "json" else render_text(report))
    return 0 if report.overall else 1


def cmd_table(args, parser) -> int:
    if not 2 <= args.lo <= args.hi:
        parser.error(f"need 2 <= --from <= --to ({MIN_DIM_MSG})")
    rows = angle_table(args.lo, args.hi)
    if args.format == "csv":
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(TABLE_HEADER)
        for r in rows:
            w.writerow([r.n, r.dihedral_cos, r.dihedral_deg, r.central_cos, r.central_deg])
    else:
        cells = [TABLE_HEADER] + [tuple(str(c) for c in r) for r in rows]
        widths = [max(len(row[i]) for row in cells) for i in range(len(TABLE_HEADER))]
        for row in cells:
            print("  ".join(c.rjust(wd) for c, wd in zip(row, widths)))
    return 0


def cmd_trace(args, parser) -> int:
    if args.dim < 2:
        parser.error(MIN_DIM_MSG)
    scene = build_construction(args.dim)
    print(f"base dimension n={scene.base_dim}, ambient dimension {scene.ambient}")
    for name in POINT_NAMES:
        print(f"{name} = {_fmt_point(getattr(scene, name))}")
    t, s = line_parameters_of_h(scene)
    print(f"H on BD at t={t}, on EF at s={s}")
    print(f"circle c: center B, squared radius |BG|^2 = {scene.circle_sq_radius}")
    u, w = scene.plane_basis
    print(f"plane basis: u = {_fmt_point(u)}")
    print(f"             w = {_fmt_point(w)}")
    if args.svg:
        try:
            write_svg(scene, args.svg)
        except OSError as exc:
            print(f"error: cannot write {args.svg}: {exc}", file=sys.stderr)
            return 2
        print(f"wrote {args.svg}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="regsimplex", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="certify dimensions 2..N exactly")
    v.add_argument("--max-dim", type=int, required=True)
    v.add_argument("--format", choices=("json", "text"), default="text")
    v.add_argument("--inject", type=parse_inject, metavar="P:C:D",
                   help="shift coordinate C (1-based) of point P by rational D in every scene")
    v.add_argument("--workers", type=int, default=None, help="evaluate dimensions in parallel")
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("table", help="dihedral and central angles for a range of n")
    t.add_argument("--from", dest="lo", type=int, required=True)
    t.add_argument("--to", dest="hi", type=int, required=True)
    t.add_argument("--format", choices=("csv", "text"), default="csv")
    t.set_defaults(func=cmd_table)

    tr = sub.add_parser("trace", help="exact coordinates of the cross-section, optional SVG")
    tr.add_argument("--dim", type=int, required=True)
    tr.add_argument("--svg", metavar="PATH")
    tr.set_defaults(func=cmd_trace)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args, parser)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2


if __name__ == "__main__":
    sys.exit(main())

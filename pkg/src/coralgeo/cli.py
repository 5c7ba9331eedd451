"""Command-line interface.

Subcommands: ``curvature`` (point query), ``table`` (reference curvature
grid), ``chains`` (row plan), ``pattern`` (knitting instructions), ``mesh``
(OBJ/PLY export), ``validate`` (numerical cross-check suite).

Angles are radians; ``pi`` literals such as ``pi/2``, ``2pi`` or ``3pi/4``
are accepted and normalized before evaluation.  Identical argv yields
byte-identical stdout.  Exit codes: 0 success, 1 domain error (singular
point, bad parameter value), 2 usage error.
"""

from __future__ import annotations

import argparse
import math
import re
import sys

from . import __version__
from ._kernels import backend_name
from .crochet import (BLOCK, EVEN, MagicCircle, plan_rows, render_pattern,
                      rows_to_csv)
from .diffgeo import curvature_report, curvature_table, table_to_csv
from .errors import CoralGeoError, ParameterError
from .mesh import tessellate, write_obj, write_ply
from .surfaces import (CORAL, LETTUCE, PARABOLOID, SurfaceFamily, coral,
                       lettuce, paraboloid)
from .util import round_half_away
from .verify import validate_all

_PI_RE = re.compile(r"^([+-]?\d*\.?\d*)\s*\*?\s*pi(?:\s*/\s*(\d*\.?\d+))?$")


def parse_angle(text: str) -> float:
    """Radians from a plain float or a pi expression ('pi/2', '2pi', '-3pi/4')."""
    t = text.strip().lower().replace(" ", "")
    try:
        return float(t)
    except ValueError:
        pass
    m = _PI_RE.match(t)
    if not m:
        raise argparse.ArgumentTypeError(
            f"cannot parse angle {text!r}: use radians or pi forms like 'pi/2' or '2pi'")
    coef_text = m.group(1)
    if coef_text in ("", "+"):
        coef = 1.0
    elif coef_text == "-":
        coef = -1.0
    else:
        coef = float(coef_text)
    divisor = float(m.group(2)) if m.group(2) else 1.0
    return coef * math.pi / divisor


def parse_angle_list(text: str):
    items = [part for part in text.split(",") if part.strip()]
    if not items:
        raise argparse.ArgumentTypeError("expected a comma-separated list of values")
    return [parse_angle(part) for part in items]


def _family(name: str, n: int) -> SurfaceFamily:
    if name == CORAL:
        return coral(n)
    if name == LETTUCE:
        return lettuce(n)
    return paraboloid()


def _num(x: float) -> str:
    return format(float(x), ".12g")


def _emit(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_curvature(args) -> int:
    fam = _family(args.surface, args.n)
    if args.which == "paper" and fam.kind != CORAL:
        raise ParameterError("the closed-form variant (K_paper) is defined for coral surfaces only")
    rep = curvature_report(fam, (args.u, args.v))
    lines = [
        f"surface: {fam.describe()}",
        f"point: u={_num(args.u)} v={_num(args.v)} "
        f"(in canonical domain: {'yes' if rep.in_canonical_domain else 'no'})",
    ]
    if args.which in ("forms", "both"):
        lines.append(f"K_forms: {_num(rep.k_forms)}")
    if args.which in ("paper", "both"):
        if rep.k_paper is None:
            lines.append("K_paper: n/a (coral only)")
        else:
            lines.append(f"K_paper: {_num(rep.k_paper)}")
    if args.which == "both" and rep.A is not None:
        lines.append(f"A: {_num(rep.A)}")
        if rep.discrepancy is not None:
            lines.append(f"discrepancy (K_paper - A*K_forms): {_num(rep.discrepancy)}")
    if args.which in ("forms", "both"):
        lines.append(f"H: {_num(rep.h)}")
        lines.append(f"k1: {_num(rep.k1)}")
        lines.append(f"k2: {_num(rep.k2)}")
    _emit("\n".join(lines) + "\n", None)
    return 0


def _table_text(table, rounded: bool) -> str:
    def cell(x: float) -> str:
        if math.isnan(x):
            return "nan"
        return f"{round_half_away(x, 2):.2f}" if rounded else _num(x)

    header = ["u\\v"] + [_num(v) for v in table.v_values]
    blocks = []
    for name, grid in (("K_paper", table.k_paper), ("K_forms", table.k_forms)):
        rows = [[_num(u)] + [cell(grid[i, j]) for j in range(len(table.v_values))]
                for i, u in enumerate(table.u_values)]
        widths = [max(len(r[c]) for r in [header] + rows) for c in range(len(header))]
        lines = [f"{name} (coral n={table.n}"
                 f"{', cells rounded to 2 decimals' if rounded else ''}):"]
        for r in [header] + rows:
            lines.append("  ".join(f"{r[c]:>{widths[c]}}" for c in range(len(r))))
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + "\n"


def _cmd_table(args) -> int:
    table = curvature_table(args.n, args.u, args.v)
    rounded = args.cells == "rounded"
    if args.format == "csv":
        _emit(table_to_csv(table, paper_rounding=rounded), args.output)
    else:
        _emit(_table_text(table, rounded), args.output)
    return 0


def _cmd_chains(args) -> int:
    plan = plan_rows(args.initial, args.rows)
    if args.format == "csv":
        _emit(rows_to_csv(plan), args.output)
        return 0
    rows = [["r", "l", "chains"]] + [
        [str(row.radius), f"{round_half_away(row.length, 2):.2f}", str(row.chains)]
        for row in plan.rows
    ]
    widths = [max(len(r[c]) for r in rows) for c in range(3)]
    lines = ["  ".join(f"{r[c]:>{widths[c]}}" for c in range(3)) for r in rows]
    lines.append(f"gauge: {_num(plan.gauge)} chains per unit length")
    _emit("\n".join(lines) + "\n", args.output)
    return 0


def _cmd_pattern(args) -> int:
    plan = plan_rows(args.initial, args.rows)
    text = render_pattern(plan, mode=args.mode, magic_circle=MagicCircle(args.magic_chains))
    _emit(text, args.output)
    return 0


def _cmd_mesh(args) -> int:
    fam = _family(args.surface, args.n)
    mesh = tessellate(fam, u_range=(args.u_min, args.u_max),
                      v_range=(args.v_min, args.v_max),
                      nu=args.nu, nv=args.nv, wrap_v=not args.no_wrap)
    path = args.output
    if path.endswith(".obj"):
        write_obj(mesh, path)
    elif path.endswith(".ply"):
        write_ply(mesh, path)
    else:
        print(f"error: output path must end in .obj or .ply, got {path!r}", file=sys.stderr)
        return 2
    print(f"wrote {path}: {len(mesh.vertices)} vertices, {len(mesh.triangles)} triangles")
    return 0


def _cmd_validate(args) -> int:
    report = validate_all()
    if args.json:
        _emit(report.to_json(), args.output)
    else:
        _emit(report.to_text(), args.output)
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coralgeo",
        description="Curvature toolkit for ruffled saddle surfaces: point queries, "
                    "reference tables, crochet row plans, mesh export, validation.",
    )
    parser.add_argument("--version", action="version",
                        version=f"coralgeo {__version__} (backend: {backend_name()})")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("curvature", help="curvature quantities at one (u, v) point")
    p.add_argument("--surface", choices=[CORAL, LETTUCE, PARABOLOID], default=CORAL)
    p.add_argument("-n", type=int, default=2, help="frequency parameter (coral: >= 2)")
    p.add_argument("-u", type=parse_angle, required=True)
    p.add_argument("-v", type=parse_angle, required=True,
                   help="angular coordinate in radians; pi literals accepted")
    p.add_argument("--which", choices=["paper", "forms", "both"], default="both")
    p.set_defaults(func=_cmd_curvature)

    p = sub.add_parser("table", help="curvature grid over u and v sample lists")
    p.add_argument("-n", type=int, default=4)
    p.add_argument("--u", type=parse_angle_list, default=[0.5, 1.0, 1.5, 2.0],
                   metavar="LIST", help="comma-separated u samples")
    p.add_argument("--v", type=parse_angle_list, default=[2.0 * math.pi, math.pi / 2.0],
                   metavar="LIST", help="comma-separated v samples (pi literals accepted)")
    p.add_argument("--format", choices=["text", "csv"], default="text")
    p.add_argument("--cells", choices=["rounded", "full"], default="rounded",
                   help="rounded: 2 decimals, ties away from zero (reproduction mode)")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("chains", help="per-row chain counts from the sinh growth law")
    p.add_argument("--initial", type=int, default=14, help="chains in the r = 1 row")
    p.add_argument("--rows", type=int, default=4, help="largest radius to plan")
    p.add_argument("--format", choices=["text", "csv"], default="text")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_chains)

    p = sub.add_parser("pattern", help="row-by-row knitting instructions")
    p.add_argument("--initial", type=int, default=14)
    p.add_argument("--rows", type=int, default=4)
    p.add_argument("--mode", choices=[BLOCK, EVEN], default=BLOCK)
    p.add_argument("--magic-chains", type=int, default=6)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_pattern)

    p = sub.add_parser("mesh", help="export a curvature-colored triangle mesh")
    p.add_argument("--surface", choices=[CORAL, LETTUCE, PARABOLOID], default=CORAL)
    p.add_argument("-n", type=int, default=2)
    p.add_argument("--nu", type=int, default=64)
    p.add_argument("--nv", type=int, default=256)
    p.add_argument("--u-min", type=parse_angle, default=0.0)
    p.add_argument("--u-max", type=parse_angle, default=2.0)
    p.add_argument("--v-min", type=parse_angle, default=0.0)
    p.add_argument("--v-max", type=parse_angle, default=2.0 * math.pi)
    p.add_argument("--no-wrap", action="store_true",
                   help="do not weld the angular seam")
    p.add_argument("-o", "--output", required=True, help="output path (.obj or .ply)")
    p.set_defaults(func=_cmd_mesh)

    p = sub.add_parser("validate", help="run the numerical cross-check suite")
    p.add_argument("--json", action="store_true")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_validate)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CoralGeoError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def run() -> None:
    raise SystemExit(main())

"""Command-line interface: ``splitslope {surface,validate,rotmat}``.

Exit codes: 0 success, 1 failed validation, 2 bad arguments, 3 I/O failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from .curves import BUILTIN_CURVES, builtin_curve
from .errors import SplitSlopeError
from .rotation import ConeKind, XiMode, is_lorentz_orthogonal, slope_rotation
from .surfaces import Construction, SlopeSurfaceConfig, sample_grid
from .validation import DEFAULT_THETAS, run_validation

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3

DEFAULT_CURVE = {ConeKind.TIMELIKE: "h2-geodesic", ConeKind.SPACELIKE: "s12-circle"}


def _positive_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not (value > 0 and math.isfinite(value)):
        raise argparse.ArgumentTypeError(f"must be a positive finite number, got {text}")
    return value


def _grid_spec(text: str) -> tuple[float, float, int]:
    parts = text.split(":")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected min:max:count, got {text!r}")
    try:
        lo, hi, count = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected min:max:count, got {text!r}") from None
    if not (math.isfinite(lo) and math.isfinite(hi) and lo < hi):
        raise argparse.ArgumentTypeError(f"range must be finite and ascending, got {text!r}")
    if count < 2:
        raise argparse.ArgumentTypeError(f"count must be at least 2, got {count}")
    return lo, hi, count


def _fmt(x: float) -> str:
    # shortest repr that round-trips binary64
    return repr(float(x))


def _add_surface_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--cone", choices=[c.value for c in ConeKind], default="timelike")
    p.add_argument("--theta", type=_positive_float, default=7.0,
                   help="constant angle in hyperbolic radians (default 7)")
    p.add_argument("--curve", choices=sorted(BUILTIN_CURVES),
                   help="generating curve (default: h2-geodesic for the timelike cone, "
                        "s12-circle for the spacelike cone)")
    p.add_argument("--xi-mode", choices=[m.value for m in XiMode], default="exact")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="splitslope",
        description="Spacelike constant slope surfaces in Minkowski 3-space via split quaternions.")
    sub = parser.add_subparsers(dest="command", required=True)

    ps = sub.add_parser("surface", help="sample a surface and write an OBJ or CSV mesh")
    _add_surface_args(ps)
    ps.add_argument("--u", type=_grid_spec, default=(0.5, 2.0, 64), metavar="MIN:MAX:N")
    ps.add_argument("--v", type=_grid_spec, default=(0.0, 2 * math.pi, 64), metavar="MIN:MAX:N")
    ps.add_argument("--construction", choices=[c.value for c in Construction], default="direct")
    ps.add_argument("--format", choices=["obj", "csv"], default="obj")
    ps.add_argument("-o", "--output", required=True, help="output file ('-' for stdout)")

    pv = sub.add_parser("validate", help="run the invariant suite and print a JSON report")
    pv.add_argument("--curve", choices=sorted(BUILTIN_CURVES), action="append",
                    help="restrict to this curve (repeatable; default: all builtins)")
    pv.add_argument("--theta", type=_positive_float, action="append",
                    help="angle to test (repeatable; default: 0.5, 1, 7)")
    pv.add_argument("--u", type=_grid_spec, default=(0.5, 2.0, 64), metavar="MIN:MAX:N")
    pv.add_argument("--v", type=_grid_spec, default=(0.0, 2 * math.pi, 64), metavar="MIN:MAX:N",
                    help="grid for point checks; checks that need surface partials use "
                         "a 16x16 grid over the same ranges")
    pv.add_argument("-o", "--output", default="-")

    pr = sub.add_parser("rotmat", help="print the slope rotation matrix at one (u, v)")
    _add_surface_args(pr)
    pr.add_argument("--u", type=_positive_float, required=True)
    pr.add_argument("--v", type=float, required=True)
    return parser


def _config(parser: argparse.ArgumentParser, args) -> SlopeSurfaceConfig:
    cone = ConeKind(args.cone)
    curve_name = args.curve or DEFAULT_CURVE[cone]
    try:
        return SlopeSurfaceConfig(args.theta, cone, builtin_curve(curve_name), XiMode(args.xi_mode))
    except SplitSlopeError as exc:
        parser.error(f"argument --curve: {exc}")


def _write(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="ascii", newline="\n") as fh:
            fh.write(text)


def render_obj(grid, cfg: SlopeSurfaceConfig) -> str:
    nu, nv = len(grid.u_values), len(grid.v_values)
    lines = [
        "# splitslope constant slope surface",
        f"# cone={cfg.cone.value} theta={_fmt(cfg.theta)} curve={cfg.curve.name} "
        f"xi_mode={cfg.xi_mode.value} construction={grid.construction.value}",
        f"# grid {nu}x{nv}, u outer; Minkowski (x1, x2, x3) written as Euclidean coordinates",
    ]
    for i in range(nu):
        for j in range(nv):
            x1, x2, x3 = grid.points[i, j]
            lines.append(f"v {_fmt(x1)} {_fmt(x2)} {_fmt(x3)}")
    for i in range(nu - 1):
        for j in range(nv - 1):
            a = i * nv + j + 1
            lines.append(f"f {a} {a + nv} {a + nv + 1} {a + 1}")
    return "\n".join(lines) + "\n"


def render_csv(grid) -> str:
    lines = ["u,v,x1,x2,x3"]
    for i, u in enumerate(grid.u_values):
        for j, v in enumerate(grid.v_values):
            x1, x2, x3 = grid.points[i, j]
            lines.append(",".join(_fmt(t) for t in (u, v, x1, x2, x3)))
    return "\n".join(lines) + "\n"


def cmd_surface(parser, args) -> int:
    cfg = _config(parser, args)
    (u0, u1, nu), (v0, v1, nv) = args.u, args.v
    if not u0 > 0:
        parser.error(f"argument --u: range must lie in (0, inf), got {u0}:{u1}")
    try:
        grid = sample_grid(cfg, (u0, u1), (v0, v1), nu, nv, Construction(args.construction))
    except SplitSlopeError as exc:
        parser.error(str(exc))
    text = render_obj(grid, cfg) if args.format == "obj" else render_csv(grid)
    try:
        _write(args.output, text)
    except OSError as exc:
        print(f"splitslope: cannot write {args.output}: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def cmd_validate(parser, args) -> int:
    (u0, u1, nu), (v0, v1, nv) = args.u, args.v
    if not u0 > 0:
        parser.error(f"argument --u: range must lie in (0, inf), got {u0}:{u1}")
    thetas = tuple(args.theta) if args.theta else DEFAULT_THETAS
    report = run_validation(args.curve, thetas, (u0, u1), (v0, v1), nu=nu, nv=nv)
    text = json.dumps(report.to_json(), indent=2) + "\n"
    try:
        _write(args.output, text)
    except OSError as exc:
        print(f"splitslope: cannot write {args.output}: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_rotmat(parser, args) -> int:
    cfg = _config(parser, args)
    rot = slope_rotation(cfg.theta, args.u, cfg.curve.derivative(args.v), cfg.cone, cfg.xi_mode)
    res = is_lorentz_orthogonal(rot)
    for row in rot.m:
        print(" ".join(f"{x:.17g}" for x in row))
    print(f"metric_residual {res.metric_residual:.17g}")
    print(f"det_residual {res.det_residual:.17g}")
    return EXIT_OK


COMMANDS = {"surface": cmd_surface, "validate": cmd_validate, "rotmat": cmd_rotmat}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return COMMANDS[args.command](parser, args)


if __name__ == "__main__":
    sys.exit(main())

"""Command-line interface.

Exit codes: 0 success, 2 bad arguments, 3 bad input data, 4 output I/O
failure, 5 numerical failure.
"""
from __future__ import annotations

import argparse
import contextlib
import io
import math
import sys

from . import surfaces
from .arclength import ArcMethod, arclength, perimeter
from .core import SquircleParams, squareness_from_blend
from .curves import CurveForm, sample_curve
from .elliptic import area_complete, area_incomplete
from .errors import DomainError, NumericalFailure
from .map2d import Direction, Mapping2D, remap_grid
from .map3d import cube_to_sphere, sphere_to_cube
from .montecarlo import area_monte_carlo
from .pixmap import PixmapFormatError, read_ppm, remap_image, write_ppm

EXIT_ARGS = 2
EXIT_INPUT = 3
EXIT_OUTPUT = 4
EXIT_NUMERIC = 5


class CliError(Exception):
    def __init__(self, message, code):
        super().__init__(message)
        self.code = code


def _fmt(v: float) -> str:
    # shortest string that round-trips to the same double
    return repr(float(v) + 0.0)


def _params(args) -> SquircleParams:
    try:
        s = squareness_from_blend(args.tau) if args.tau is not None else args.s
        return SquircleParams(s, args.r)
    except DomainError as exc:
        raise CliError(str(exc), EXIT_ARGS) from None


@contextlib.contextmanager
def _binary_out(path):
    """Buffer output in memory and write it in one go (stdout when no path)."""
    buf = io.BytesIO()
    yield buf
    data = buf.getvalue()
    if path is None or path == "-":
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()
        return
    try:
        with open(path, "wb") as fh:
            fh.write(data)
    except OSError as exc:
        raise CliError(f"cannot write {path}: {exc}", EXIT_OUTPUT) from None


def _read_input(path) -> bytes:
    if path is None or path == "-":
        return sys.stdin.buffer.read()
    try:
        with open(path, "rb") as fh:
            return fh.read()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}", EXIT_INPUT) from None


def cmd_plot(args) -> None:
    if args.samples < 16:
        raise CliError("--samples must be at least 16", EXIT_ARGS)
    p = _params(args)
    pts = sample_curve(p, CurveForm(args.form), args.samples)
    lo, size = -1.1 * p.r, 2.2 * p.r

    def num(v):
        text = f"{v:.6f}"
        return "0.000000" if text == "-0.000000" else text

    def xy(x, y):
        # SVG's y axis points down
        return f"{num(x)} {num(-y)}"

    d = "M " + xy(*pts[0]) + "".join(" L " + xy(*q) for q in pts[1:]) + " Z"
    svg = (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="{lo:.6f} {lo:.6f} {size:.6f} {size:.6f}">\n'
        f'<path d="{d}" fill="none" stroke="black" stroke-width="{0.01 * p.r:.6f}"/>\n'
        "</svg>\n"
    )
    with _binary_out(args.out) as out:
        out.write(svg.encode("ascii"))


def cmd_area(args) -> None:
    p = _params(args)
    if args.method == "complete":
        text = f"method=complete area={_fmt(area_complete(p))}\n"
    elif args.method == "quadrature":
        area = area_complete(p) if p.s == 0.0 else area_incomplete(p)
        text = f"method=quadrature area={_fmt(area)}\n"
    else:
        if args.seed is None:
            raise CliError("--method montecarlo requires --seed", EXIT_ARGS)
        if args.n < 1000:
            raise CliError("--n must be at least 1000 for montecarlo", EXIT_ARGS)
        mc = area_monte_carlo(p, args.n, args.seed, workers=args.workers)
        text = (f"method=montecarlo area={_fmt(mc.area)} halfwidth3sigma={_fmt(mc.half_width)} "
                f"n={mc.n} seed={args.seed}\n")
    with _binary_out(args.out) as out:
        out.write(text.encode("ascii"))


def cmd_arclength(args) -> None:
    p = _params(args)
    method = ArcMethod(args.method)
    form = CurveForm(args.form)
    if args.start is None and args.stop is None:
        length = perimeter(p, method, form)
    else:
        if method is ArcMethod.CARTESIAN:
            start = 0.0 if args.start is None else args.start
            stop = p.r if args.stop is None else args.stop
        else:
            start = 0.0 if args.start is None else args.start
            stop = 2.0 * math.pi if args.stop is None else args.stop
        try:
            length = arclength(p, start, stop, method, form)
        except ValueError as exc:
            raise CliError(str(exc), EXIT_ARGS) from None
    text = f"method={method.value} length={_fmt(length)}\n"
    with _binary_out(args.out) as out:
        out.write(text.encode("ascii"))


_MAP_DIMS = {"square2disc": 2, "disc2square": 2, "cube2sphere": 3, "sphere2cube": 3}


def _parse_rows(text: str, dim: int):
    rows = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        fields = line.split(",")
        if len(fields) != dim:
            raise CliError(f"row {lineno}: expected {dim} values, got {len(fields)}", EXIT_INPUT)
        try:
            vals = [float(f) for f in fields]
        except ValueError:
            raise CliError(f"row {lineno}: malformed number in {line!r}", EXIT_INPUT) from None
        if not all(math.isfinite(v) for v in vals):
            raise CliError(f"row {lineno}: non-finite value", EXIT_INPUT)
        rows.append((lineno, vals))
    return rows


def cmd_map(args) -> None:
    dim = _MAP_DIMS[args.dir]
    try:
        text = _read_input(args.input).decode("ascii")
    except UnicodeDecodeError:
        raise CliError("input is not ASCII text", EXIT_INPUT) from None
    rows = _parse_rows(text, dim)
    if dim == 2:
        try:
            mapped = remap_grid(Mapping2D(args.mapping), Direction(args.dir),
                                [vals for _, vals in rows])
        except DomainError as exc:
            raise CliError(f"row {rows[exc.index][0]}: {exc}", EXIT_INPUT) from None
    else:
        mapped = []
        for lineno, (a, b, c) in rows:
            if args.dir == "cube2sphere":
                if max(abs(a), abs(b), abs(c)) > 1.0 + 1e-12:
                    raise CliError(f"row {lineno}: point outside the cube", EXIT_INPUT)
                mapped.append(cube_to_sphere(*(math.copysign(min(abs(q), 1.0), q) for q in (a, b, c))))
            else:
                try:
                    mapped.append(sphere_to_cube(a, b, c))
                except DomainError as exc:
                    raise CliError(f"row {lineno}: {exc}", EXIT_INPUT) from None
    body = "".join(",".join(_fmt(v) for v in pt) + "\n" for pt in mapped)
    with _binary_out(args.out) as out:
        out.write(body.encode("ascii"))


def cmd_remap(args) -> None:
    if args.dir not in ("square2disc", "disc2square"):
        raise CliError("remap supports --dir square2disc or disc2square", EXIT_ARGS)
    data = _read_input(args.input)
    try:
        pix = read_ppm(io.BytesIO(data))
        result = remap_image(pix, Direction(args.dir), Mapping2D(args.mapping), args.filter)
    except PixmapFormatError as exc:
        raise CliError(str(exc), EXIT_INPUT) from None
    with _binary_out(args.out) as out:
        write_ppm(result, out)


def _surface_spec(args):
    shape = args.shape
    s = squareness_from_blend(args.tau) if args.tau is not None else args.s
    try:
        if shape == "sphube":
            return surfaces.Sphube(s, args.r)
        if shape == "sqellipsoid":
            return surfaces.Sqellipsoid(s, args.a, args.b, args.c)
        if shape == "sqylinder":
            return surfaces.Sqylinder(s, args.a, args.b, args.c)
        if shape == "nucylinder":
            return surfaces.NonUniformCylinder(args.a, args.b, args.c)
        if shape == "sqone":
            return surfaces.Sqone(s, args.a, args.b, args.c)
        return surfaces.NonUniformCone(args.a, args.b, args.c)
    except DomainError as exc:
        raise CliError(str(exc), EXIT_ARGS) from None


def cmd_mesh(args) -> None:
    spec = _surface_spec(args)
    if args.res < 8:
        raise CliError("--res must be at least 8", EXIT_ARGS)
    mesh = surfaces.extract_mesh(spec, args.res)
    with _binary_out(args.out) as out:
        surfaces.export_obj(mesh, out)


def _add_shape_flags(p, default_s=0.5):
    group = p.add_mutually_exclusive_group()
    group.add_argument("--s", type=float, default=default_s, help="squareness in [0, 1]")
    group.add_argument("--tau", type=float, default=None, help="linear blend parameter in [0, 1]")
    p.add_argument("--r", type=float, default=1.0, help="radius")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="squircle", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("plot", help="write the curve as an SVG path")
    _add_shape_flags(p)
    p.add_argument("--form", choices=[f.value for f in CurveForm], default="eg1")
    p.add_argument("--samples", type=int, default=360)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_plot)

    p = sub.add_parser("area", help="area by elliptic integrals, quadrature or Monte Carlo")
    _add_shape_flags(p)
    p.add_argument("--method", choices=["complete", "quadrature", "montecarlo"], default="complete")
    p.add_argument("--n", type=int, default=1_000_000)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_area)

    p = sub.add_parser("arclength", help="arc length or full perimeter")
    _add_shape_flags(p)
    p.add_argument("--method", choices=[m.value for m in ArcMethod], default="polar")
    p.add_argument("--form", choices=[f.value for f in CurveForm], default="eg1")
    p.add_argument("--from", dest="start", type=float, default=None)
    p.add_argument("--to", dest="stop", type=float, default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_arclength)

    p = sub.add_parser("map", help="map CSV points between square/disc or cube/sphere")
    p.add_argument("--dir", choices=list(_MAP_DIMS), required=True)
    p.add_argument("--mapping", choices=[m.value for m in Mapping2D], default="fgs")
    p.add_argument("--in", dest="input", default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("remap", help="warp a P6 image between square and disc")
    p.add_argument("--dir", choices=["square2disc", "disc2square"], required=True)
    p.add_argument("--mapping", choices=[m.value for m in Mapping2D], default="fgs")
    p.add_argument("--filter", choices=["nearest", "bilinear"], default="bilinear")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_remap)

    p = sub.add_parser("mesh", help="triangulate a surface and write OBJ")
    p.add_argument("--shape", required=True,
                   choices=["sphube", "sqellipsoid", "sqylinder", "nucylinder", "sqone", "nucone"])
    _add_shape_flags(p)
    p.add_argument("--a", type=float, default=1.0)
    p.add_argument("--b", type=float, default=1.0)
    p.add_argument("--c", type=float, default=1.0)
    p.add_argument("--res", type=int, default=32)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_mesh)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except CliError as exc:
        print(f"squircle: {exc}", file=sys.stderr)
        return exc.code
    except NumericalFailure as exc:
        print(f"squircle: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except DomainError as exc:
        print(f"squircle: {exc}", file=sys.stderr)
        return EXIT_ARGS
    return 0


if __name__ == "__main__":
    sys.exit(main())

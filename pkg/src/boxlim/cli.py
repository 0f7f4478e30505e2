"""Command-line front end.

One subcommand per invocation: evaluate scalar/vector operations, describe
balls, test hull and line membership, run the square trigonometry and
complex/max-plus arithmetic, drive the finite-p convergence oracle, run the
verification suites, and render the planar figures as SVG.

Exit codes: 0 success, 1 domain error (a single JSON object
``{"error": code, "detail": text}`` on stderr), 2 usage error.  Identical
argv produce byte-identical output.  Rationals print as ``p/q`` (integers
plainly); vectors are comma-separated rational literals, point lists are
semicolon-separated; ``--file data.json`` supplies the same inputs as JSON
arrays of rational strings.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Sequence

from .cplane import cconj, cinv, cmod_infty, cplus, cplx, ctimes, from_polar, polar
from .deform import (
    DEFAULT_P_GRID,
    DEFAULT_TOL,
    converge,
    p_cos,
    p_det,
    p_dist,
    p_inner,
    p_norm,
    p_sin,
    p_sum,
)
from .errors import DimensionMismatch, LimitAlgebraError
from .hull import HullCombination, co_contains, co_point
from .linalg import det_infty, inner_infty, mat, norm_infty, vec
from .lines import (
    half_lines,
    hyperplane_form,
    line2d_form,
    line_contains_2d,
    line_contains_nd,
    parallel_ratio,
)
from .maxplus import (
    mp_boxplus,
    mp_dist,
    mp_format,
    mp_inv,
    mp_nary,
    mp_neg,
    mp_otimes,
    mp_parse,
)
from .metric import Fixed, ball_describe, dist_boxplus
from .scalars import (
    ScalarQ,
    boxminus,
    boxplus,
    nary_boxplus,
    q,
    smile_minus,
    smile_plus,
)
from .suites import SUITES, run_suite
from .svgfig import FIGURES, render_figure
from .trig import (
    alpha,
    alpha_inv,
    cos_infty,
    inner3_limit,
    pcos,
    psin,
    pythagoras_check,
    sin_infty,
)

__all__ = ["main"]


# ---------------------------------------------------------------------------
# parsing and rendering helpers


def _points(text: str) -> list:
    return [vec(part) for part in text.split(";")]


def _sj(v) -> int | str:
    """JSON encoding of an exact rational: plain integer or "p/q" string."""
    r = q(v)
    if r.denominator == 1:
        return int(r)
    return f"{r.numerator}/{r.denominator}"


def _vj(v: Sequence) -> list:
    return [_sj(c) for c in v]


def _dump(obj) -> str:
    return json.dumps(obj, separators=(", ", ": "))


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")


def _csv_cell(v) -> str:
    j = _sj(v)
    return str(j)


def _apply_file(args: argparse.Namespace) -> None:
    """Fill missing vector/matrix flags from a JSON file of rational strings."""
    if not getattr(args, "file", None):
        return
    with open(args.file, encoding="utf-8") as fh:
        data = json.load(fh)
    if not isinstance(data, dict):
        raise ValueError("--file must hold a JSON object of named inputs")
    for key, value in data.items():
        name = key.replace("-", "_")
        if getattr(args, name, None) is None and hasattr(args, name):
            if isinstance(value, list):
                if value and isinstance(value[0], list):
                    setattr(args, name, ";".join(",".join(map(str, r)) for r in value))
                else:
                    setattr(args, name, ",".join(map(str, value)))
            else:
                setattr(args, name, str(value))


def _scalar_out(value: ScalarQ, args: argparse.Namespace) -> None:
    if args.format == "csv":
        _emit(_csv_cell(value), args.out)
    else:
        _emit(_dump(_sj(value)), args.out)


def _json_out(obj, args: argparse.Namespace) -> None:
    _emit(_dump(obj), args.out)


# ---------------------------------------------------------------------------
# subcommand handlers


def _cmd_eval(args) -> int:
    _apply_file(args)
    if args.nary is not None:
        result = nary_boxplus(vec(args.nary))
    elif args.boxplus is not None:
        a, b = vec(args.boxplus)
        result = boxplus(a, b)
    elif args.boxminus is not None:
        a, b = vec(args.boxminus)
        result = boxminus(a, b)
    elif args.smile_minus is not None:
        result = smile_minus(vec(args.smile_minus))
    elif args.smile_plus is not None:
        result = smile_plus(vec(args.smile_plus))
    elif args.inner is not None:
        x, y = _points(args.inner)
        result = inner_infty(x, y)
    elif args.norm is not None:
        result = norm_infty(vec(args.norm))
    else:
        raise ValueError("choose one operation for eval")
    _scalar_out(result, args)
    return 0


def _cmd_det(args) -> int:
    _apply_file(args)
    if args.matrix is None:
        raise ValueError("det needs --matrix or --file")
    _scalar_out(det_infty(mat(args.matrix.split(";"))), args)
    return 0


def _cmd_dist(args) -> int:
    _apply_file(args)
    if args.x is None or args.y is None:
        raise ValueError("dist needs --x and --y")
    _scalar_out(dist_boxplus(vec(args.x), vec(args.y)), args)
    return 0


def _cmd_ball(args) -> int:
    _apply_file(args)
    if args.center is None or args.radius is None:
        raise ValueError("ball needs --center and --radius")
    if args.format == "svg":
        _emit(render_figure("ball", center=args.center, radius=args.radius), args.out)
        return 0
    desc = ball_describe(vec(args.center), q(args.radius))
    coords = [
        {"kind": "fixed", "value": _sj(t.value)}
        if isinstance(t, Fixed)
        else {"kind": "free", "bound": _sj(t.bound)}
        for t in desc.coords
    ]
    payload = {
        "center": _vj(desc.center),
        "radius": _sj(desc.radius),
        "coords": coords,
    }
    if args.z is not None:
        from .metric import ball_contains

        payload["contains"] = ball_contains(desc, vec(args.z))
    _json_out(payload, args)
    return 0


def _cmd_hull(args) -> int:
    _apply_file(args)
    if args.x is None or args.y is None:
        raise ValueError("hull needs --x and --y")
    x, y = vec(args.x), vec(args.y)
    if args.contains is not None:
        z = vec(args.contains)
        _json_out({"contains": co_contains(x, y, z)}, args)
        return 0
    if args.format == "svg":
        if len(x) != 2:
            raise DimensionMismatch("hull figures need dimension-2 inputs")
        _emit(render_figure("hull", x=args.x, y=args.y, p=args.p), args.out)
        return 0
    n = args.samples
    rows = []
    for i in range(n):
        t = q(i, n - 1) if n > 1 else q(1)
        z = co_point(x, y, HullCombination(t, 0, 1, 0))
        rows.append((t, z))
    if args.format == "csv":
        header = "t," + ",".join(f"z{i + 1}" for i in range(len(x)))
        lines = [header]
        for t, z in rows:
            lines.append(",".join([_csv_cell(t)] + [_csv_cell(c) for c in z]))
        _emit("\n".join(lines), args.out)
    else:
        _json_out([{"t": _sj(t), "point": _vj(z)} for t, z in rows], args)
    return 0


def _cmd_line(args) -> int:
    _apply_file(args)
    action = args.action
    if action == "equation":
        if args.points is not None:
            pts = _points(args.points)
        elif args.x is not None and args.y is not None:
            pts = [vec(args.x), vec(args.y)]
        else:
            raise ValueError("line equation needs --points or --x/--y")
        form = hyperplane_form(pts) if len(pts) != 2 else line2d_form(*pts)
        _json_out(
            {
                "coeffs": _vj(form.coeffs),
                "constant": _sj(form.constant),
                "orientation": form.orientation,
            },
            args,
        )
        return 0
    if action == "contains":
        if args.x is None or args.y is None or args.z is None:
            raise ValueError("line contains needs --x, --y and --z")
        x, y, z = vec(args.x), vec(args.y), vec(args.z)
        member = line_contains_nd(x, y, z)
        payload = {
            "contains": bool(member),
            "certificate": _vj(member.certificate) if member.certificate else None,
        }
        if len(x) == 2:
            payload["form_check"] = line_contains_2d(line2d_form(x, y), z)
        _json_out(payload, args)
        return 0
    if action == "parallel":
        needed = (args.a, args.b, args.c, args.d)
        if any(v is None for v in needed):
            raise ValueError("line parallel needs --a, --b, --c and --d")
        a, b, c, d = (vec(v) for v in needed)
        try:
            ratio = parallel_ratio(a, b, c, d)
        except LimitAlgebraError:
            _json_out({"parallel": False}, args)
            return 0
        _json_out({"parallel": True, "ratio": _sj(ratio)}, args)
        return 0
    if action == "halflines":
        if args.x is None or args.y is None:
            raise ValueError("line halflines needs --x and --y")
        parts = []
        for h in half_lines(vec(args.x), vec(args.y)):
            parts.append(
                {
                    "offset": _vj(h.offset),
                    "direction": _vj(h.direction),
                    "t_min": _sj(h.t_min),
                    "sense": h.sense,
                }
            )
        _json_out(parts, args)
        return 0
    # plot
    if args.x is None or args.y is None:
        raise ValueError("line plot needs --x and --y")
    _emit(render_figure("line", x=args.x, y=args.y, p=args.p), args.out)
    return 0


def _cmd_trig(args) -> int:
    _apply_file(args)
    if args.pcos is not None:
        _scalar_out(pcos(q(args.pcos)), args)
    elif args.psin is not None:
        _scalar_out(psin(q(args.psin)), args)
    elif args.angle_of is not None:
        _scalar_out(alpha(vec(args.angle_of)).theta, args)
    elif args.point_of is not None:
        _json_out(_vj(alpha_inv(q(args.point_of))), args)
    elif args.op in ("cos", "sin"):
        if args.x is None or args.y is None:
            raise ValueError(f"trig --op {args.op} needs --x and --y")
        fn = cos_infty if args.op == "cos" else sin_infty
        _scalar_out(fn(vec(args.x), vec(args.y)), args)
    elif args.op == "inner3":
        if args.x is None or args.y is None or args.z is None:
            raise ValueError("trig --op inner3 needs --x, --y and --z")
        _scalar_out(inner3_limit(vec(args.x), vec(args.y), vec(args.z)), args)
    elif args.op == "pythagoras":
        if args.x is None or args.y is None or args.z is None:
            raise ValueError("trig --op pythagoras needs --x, --y and --z")
        ok = pythagoras_check(
            vec(args.x), vec(args.y), vec(args.z), p_grid=args.p_grid, tol=args.tol
        )
        _json_out({"pythagoras": ok}, args)
    else:
        raise ValueError("choose a trig operation")
    return 0


def _cmd_complex(args) -> int:
    _apply_file(args)

    def pair(text: str):
        zs = _points(text)
        if len(zs) != 2:
            raise ValueError("expected two complex numbers 'a,b;c,d'")
        return cplx(*zs[0]), cplx(*zs[1])

    def cj(z) -> dict:
        return {"re": _sj(z.re), "im": _sj(z.im)}

    if args.times is not None:
        z, w = pair(args.times)
        _json_out(cj(ctimes(z, w)), args)
    elif args.plus is not None:
        z, w = pair(args.plus)
        _json_out(cj(cplus(z, w)), args)
    elif args.mod is not None:
        _scalar_out(cmod_infty(cplx(*vec(args.mod))), args)
    elif args.conj is not None:
        _json_out(cj(cconj(cplx(*vec(args.conj)))), args)
    elif args.inv is not None:
        _json_out(cj(cinv(cplx(*vec(args.inv)))), args)
    elif args.polar is not None:
        m, theta = polar(cplx(*vec(args.polar)))
        _json_out({"modulus": _sj(m), "theta": _sj(theta.theta)}, args)
    elif args.from_polar is not None:
        parts = args.from_polar.split(";")
        if len(parts) != 2:
            raise ValueError("expected --from-polar 'modulus;theta'")
        _json_out(cj(from_polar(q(parts[0]), q(parts[1]))), args)
    else:
        raise ValueError("choose a complex operation")
    return 0


def _cmd_maxplus(args) -> int:
    _apply_file(args)

    def elems(text: str) -> list:
        return [mp_parse(part.strip()) for part in text.split(",")]

    if args.add is not None:
        zs = elems(args.add)
        if len(zs) != 2:
            raise ValueError("expected --add 'z,w'")
        _json_out(mp_format(mp_boxplus(*zs)), args)
    elif args.mul is not None:
        zs = elems(args.mul)
        if len(zs) != 2:
            raise ValueError("expected --mul 'z,w'")
        _json_out(mp_format(mp_otimes(*zs)), args)
    elif args.neg is not None:
        _json_out(mp_format(mp_neg(mp_parse(args.neg))), args)
    elif args.inv is not None:
        _json_out(mp_format(mp_inv(mp_parse(args.inv))), args)
    elif args.nary is not None:
        _json_out(mp_format(mp_nary(elems(args.nary))), args)
    elif args.dist is not None:
        sides = args.dist.split(";")
        if len(sides) != 2:
            raise ValueError("expected --dist 'z1,z2;w1,w2'")
        _json_out(mp_format(mp_dist(elems(sides[0]), elems(sides[1]))), args)
    else:
        raise ValueError("choose a max-plus operation")
    return 0


def _cmd_oracle(args) -> int:
    _apply_file(args)
    op = args.op
    if op == "sum":
        if args.values is None:
            raise ValueError("oracle --op sum needs --values")
        values = vec(args.values)
        evaluator, limit = (lambda p: p_sum(values, p)), nary_boxplus(values)
    elif op == "norm":
        if args.x is None:
            raise ValueError("oracle --op norm needs --x")
        x = vec(args.x)
        evaluator, limit = (lambda p: p_norm(x, p)), norm_infty(x)
    elif op == "det":
        if args.matrix is None:
            raise ValueError("oracle --op det needs --matrix")
        m = mat(args.matrix.split(";"))
        evaluator, limit = (lambda p: p_det(m, p)), det_infty(m)
    elif op in ("inner", "dist", "cos", "sin"):
        if args.x is None or args.y is None:
            raise ValueError(f"oracle --op {op} needs --x and --y")
        x, y = vec(args.x), vec(args.y)
        table = {
            "inner": (p_inner, inner_infty),
            "dist": (p_dist, dist_boxplus),
            "cos": (p_cos, cos_infty),
            "sin": (p_sin, sin_infty),
        }
        p_fn, lim_fn = table[op]
        evaluator, limit = (lambda p: p_fn(x, y, p)), lim_fn(x, y)
    else:
        raise ValueError(f"unknown oracle operation {op!r}")
    report = converge(evaluator, limit, p_grid=args.p_grid, tol=args.tol)
    _json_out(report.as_dict(), args)
    return 0


_QUICK_SIZES = {
    "scalar-laws": {"samples": 2000},
    "convergence": {"per_op": 25},
    "exact-cancellation": {"samples": 200},
    "ultrametric": {"triples": 2000, "balls": 400},
    "pythagoras": {"samples": 80},
    "square-trig": {"theta_samples": 2000, "roundtrips": 400, "pairs": 25},
    "complex-product": {"samples": 600},
    "lines": {"pairs": 300, "hull_samples": 300, "nd_samples": 60,
              "line_samples": 40},
    "maxplus-bridge": {"samples": 600},
}


def _cmd_suite(args) -> int:
    names = list(SUITES) if args.name == "all" else [args.name]
    results = []
    for name in names:
        overrides = dict(_QUICK_SIZES.get(name, {})) if args.quick else {}
        if args.seed is not None and name != "worked-values":
            overrides["seed"] = args.seed
        results.append(run_suite(name, **overrides))
    if args.format == "json":
        payload = [
            {
                "name": r.name,
                "passed": r.passed,
                "samples": r.samples,
                "detail": r.detail,
            }
            for r in results
        ]
        _json_out(payload, args)
    else:
        text = "\n".join(
            f"{'PASS' if r.passed else 'FAIL'} {r.name}: {r.detail}" for r in results
        )
        _emit(text, args.out)
    return 0 if all(results) else 1


def _cmd_plot(args) -> int:
    _apply_file(args)
    kwargs = {}
    if args.figure in ("hull", "line"):
        if args.x is None or args.y is None:
            raise ValueError(f"plot {args.figure} needs --x and --y")
        kwargs = {"x": args.x, "y": args.y, "p": args.p}
    elif args.figure == "ball":
        if args.center is None or args.radius is None:
            raise ValueError("plot ball needs --center and --radius")
        kwargs = {"center": args.center, "radius": args.radius}
    elif args.figure == "unit-square":
        kwargs = {"theta": args.theta}
    elif args.figure == "pcos":
        kwargs = {"lo": q(args.lo), "hi": q(args.hi)}
    _emit(render_figure(args.figure, **kwargs), args.out)
    return 0


# ---------------------------------------------------------------------------
# parser assembly


def _p_grid(text: str) -> tuple[int, ...]:
    grid = tuple(int(part) for part in text.split(","))
    if not grid or any(p < 0 for p in grid):
        raise argparse.ArgumentTypeError("p-grid must be nonnegative integers")
    return grid


def _add_common(sp: argparse.ArgumentParser, formats=("json", "csv", "svg")) -> None:
    sp.add_argument("--format", choices=formats, default=formats[0],
                    help="output format (default %(default)s)")
    sp.add_argument("--out", metavar="FILE", help="write output to FILE")
    sp.add_argument("--file", metavar="DATA.json",
                    help="read missing vector/matrix inputs from a JSON object")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="boxlim",
        description="Exact limit algebra: idempotent sums, ultrametric "
        "geometry, square trigonometry, and their finite-p oracles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("eval", help="scalar limit operations")
    sp.add_argument("--nary", metavar="CSV", help="n-ary limit sum of a list")
    sp.add_argument("--boxplus", metavar="A,B", help="binary limit sum")
    sp.add_argument("--boxminus", metavar="A,B", help="limit difference")
    sp.add_argument("--smile-minus", metavar="CSV", help="lower smile of a list")
    sp.add_argument("--smile-plus", metavar="CSV", help="upper smile of a list")
    sp.add_argument("--inner", metavar="X;Y", help="limit inner product")
    sp.add_argument("--norm", metavar="CSV", help="limit norm")
    _add_common(sp, formats=("json", "csv"))
    sp.set_defaults(handler=_cmd_eval)

    sp = sub.add_parser("det", help="limit determinant")
    sp.add_argument("--matrix", metavar="R1;R2;...", help="rows, comma-separated")
    _add_common(sp, formats=("json", "csv"))
    sp.set_defaults(handler=_cmd_det)

    sp = sub.add_parser("dist", help="limit ultrametric distance")
    sp.add_argument("--x", metavar="CSV")
    sp.add_argument("--y", metavar="CSV")
    _add_common(sp, formats=("json", "csv"))
    sp.set_defaults(handler=_cmd_dist)

    sp = sub.add_parser("ball", help="closed-ball descriptor")
    sp.add_argument("--center", metavar="CSV")
    sp.add_argument("--radius", metavar="Q")
    sp.add_argument("--z", metavar="CSV", help="also test membership of z")
    _add_common(sp)
    sp.set_defaults(handler=_cmd_ball)

    sp = sub.add_parser("hull", help="two-point hull: sample, test, draw")
    sp.add_argument("--x", metavar="CSV")
    sp.add_argument("--y", metavar="CSV")
    sp.add_argument("--contains", metavar="CSV", help="test membership of a point")
    sp.add_argument("--samples", type=int, default=512,
                    help="sample count (default %(default)s)")
    sp.add_argument("--p", type=int, default=6,
                    help="deformation level for SVG (default %(default)s)")
    _add_common(sp)
    sp.set_defaults(handler=_cmd_hull)

    sp = sub.add_parser("line", help="limit lines and hyperplanes")
    sp.add_argument("action",
                    choices=("equation", "contains", "parallel", "halflines",
                             "plot"))
    sp.add_argument("--x", metavar="CSV")
    sp.add_argument("--y", metavar="CSV")
    sp.add_argument("--z", metavar="CSV")
    sp.add_argument("--points", metavar="P1;P2;...", help="hyperplane points")
    sp.add_argument("--a", metavar="CSV")
    sp.add_argument("--b", metavar="CSV")
    sp.add_argument("--c", metavar="CSV")
    sp.add_argument("--d", metavar="CSV")
    sp.add_argument("--p", type=int, default=6,
                    help="deformation level for SVG (default %(default)s)")
    _add_common(sp)
    sp.set_defaults(handler=_cmd_line)

    sp = sub.add_parser("trig", help="square trigonometry")
    sp.add_argument("--pcos", metavar="THETA")
    sp.add_argument("--psin", metavar="THETA")
    sp.add_argument("--angle-of", metavar="CSV", dest="angle_of",
                    help="angle of a unit-square boundary point")
    sp.add_argument("--point-of", metavar="THETA", dest="point_of",
                    help="boundary point of an angle")
    sp.add_argument("--op", choices=("cos", "sin", "inner3", "pythagoras"))
    sp.add_argument("--x", metavar="CSV")
    sp.add_argument("--y", metavar="CSV")
    sp.add_argument("--z", metavar="CSV")
    sp.add_argument("--p-grid", type=_p_grid, default=DEFAULT_P_GRID,
                    dest="p_grid", metavar="CSV")
    sp.add_argument("--tol", type=float, default=DEFAULT_TOL)
    _add_common(sp, formats=("json", "csv"))
    sp.set_defaults(handler=_cmd_trig)

    sp = sub.add_parser("complex", help="limit complex arithmetic")
    sp.add_argument("--times", metavar="A,B;C,D")
    sp.add_argument("--plus", metavar="A,B;C,D")
    sp.add_argument("--mod", metavar="A,B")
    sp.add_argument("--conj", metavar="A,B")
    sp.add_argument("--inv", metavar="A,B")
    sp.add_argument("--polar", metavar="A,B")
    sp.add_argument("--from-polar", metavar="M;THETA", dest="from_polar")
    _add_common(sp, formats=("json", "csv"))
    sp.set_defaults(handler=_cmd_complex)

    sp = sub.add_parser("maxplus", help="symmetrized max-plus arithmetic "
                        "(literals: '-inf', '3/2', '3/2+ipi')")
    sp.add_argument("--add", metavar="Z,W")
    sp.add_argument("--mul", metavar="Z,W")
    sp.add_argument("--neg", metavar="Z")
    sp.add_argument("--inv", metavar="Z")
    sp.add_argument("--nary", metavar="Z1,Z2,...")
    sp.add_argument("--dist", metavar="Z1,Z2;W1,W2")
    _add_common(sp, formats=("json", "csv"))
    sp.set_defaults(handler=_cmd_maxplus)

    sp = sub.add_parser("oracle", help="finite-p convergence report")
    sp.add_argument("--op", required=True,
                    choices=("sum", "inner", "norm", "dist", "det", "cos", "sin"))
    sp.add_argument("--values", metavar="CSV")
    sp.add_argument("--x", metavar="CSV")
    sp.add_argument("--y", metavar="CSV")
    sp.add_argument("--matrix", metavar="R1;R2;...")
    sp.add_argument("--p-grid", type=_p_grid, default=DEFAULT_P_GRID,
                    dest="p_grid", metavar="CSV")
    sp.add_argument("--tol", type=float, default=DEFAULT_TOL)
    _add_common(sp, formats=("json",))
    sp.set_defaults(handler=_cmd_oracle)

    sp = sub.add_parser("suite", help="verification suites")
    sp.add_argument("name", choices=tuple(SUITES) + ("all",))
    sp.add_argument("--seed", type=int, help="override the sampling seed")
    sp.add_argument("--quick", action="store_true",
                    help="reduced sample sizes for a fast smoke run")
    _add_common(sp, formats=("text", "json"))
    sp.set_defaults(handler=_cmd_suite)

    sp = sub.add_parser("plot", help="render a figure as SVG")
    sp.add_argument("--figure", required=True, choices=tuple(FIGURES))
    sp.add_argument("--x", metavar="CSV")
    sp.add_argument("--y", metavar="CSV")
    sp.add_argument("--center", metavar="CSV")
    sp.add_argument("--radius", metavar="Q")
    sp.add_argument("--theta", metavar="Q")
    sp.add_argument("--lo", default="-4", metavar="Q")
    sp.add_argument("--hi", default="4", metavar="Q")
    sp.add_argument("--p", type=int, default=6)
    _add_common(sp, formats=("svg",))
    sp.set_defaults(handler=_cmd_plot)

    return parser


# Values such as "-3,-2,3" or "-inf" start with a dash; glue them to their
# flag so argparse does not mistake them for options.
_NEG_VALUE = re.compile(r"^-(\d|\.\d|inf)")


def _merge_negative_values(argv: Sequence[str]) -> list[str]:
    out: list[str] = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        nxt = argv[i + 1] if i + 1 < len(argv) else None
        if (
            tok.startswith("--")
            and "=" not in tok
            and nxt is not None
            and _NEG_VALUE.match(nxt)
        ):
            out.append(f"{tok}={nxt}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(_merge_negative_values(
        sys.argv[1:] if argv is None else argv
    ))
    try:
        return args.handler(args)
    except LimitAlgebraError as exc:
        sys.stderr.write(_dump({"error": exc.code, "detail": exc.detail}) + "\n")
        return 1
    except (ValueError, ZeroDivisionError, KeyError, OSError) as exc:
        sys.stderr.write(
            _dump({"error": type(exc).__name__, "detail": str(exc)}) + "\n"
        )
        return 1


if __name__ == "__main__":
    raise SystemExit(main())

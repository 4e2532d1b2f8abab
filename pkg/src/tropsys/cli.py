"""Command-line front end.

Every subcommand reads a system in the text DSL or JSON (``-`` for stdin) and
writes a JSON report; rationals are written exactly as ``p/q`` strings.
Exit status: 0 on success, 1 on a domain error, 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from . import bounds as bnd
from . import generators as gen
from .certify import (is_generalized_vertex, is_stable, is_stable_brute_force,
                      isolated_necessary)
from .core import INF, TropicalSystem, membership
from .io import ParseError, dumps_dsl, dumps_json, format_scalar, loads, parse_point
from .prevariety import (CellCapExceeded, connected_components, generalized_vertices,
                         isolated_points, local_dim, stable_solutions)
from .stars import format_star_table, star_table
from .svg import RenderSpec, render_svg
from .transform import compactify

# options whose values may start with '-'
_VALUE_OPTIONS = ("--point", "--viewport", "--s", "--label")


def _q(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _pt(p) -> list[str]:
    return [_q(v) for v in p]


def _pair(pc) -> dict:
    return {"row": pc.row, "monomials": [pc.first, pc.second], "vector": list(pc.vector)}


def _read_system(path: str) -> TropicalSystem:
    if path == "-":
        return loads(sys.stdin.read())
    with open(path) as fh:
        return loads(fh.read())


def _summary(system: TropicalSystem) -> dict:
    return {"n": system.n, "k": system.k, "d": system.d, "degrees": system.degrees,
            "finite_coefficients": system.has_all_coefficients_finite()}


def _emit(report: dict) -> None:
    print(json.dumps(report, indent=2))


def _point_for(args, system) -> tuple[Fraction, ...]:
    x = parse_point(args.point)
    if len(x) != system.n:
        raise ValueError(f"point has {len(x)} coordinates, system has n = {system.n}")
    return x


# -- subcommands ------------------------------------------------------------


def cmd_parse(args) -> int:
    system = _read_system(args.system)
    sys.stdout.write(dumps_json(system, indent=2) + "\n" if args.json else dumps_dsl(system))
    return 0


def cmd_eval(args) -> int:
    system = _read_system(args.system)
    x = _point_for(args, system)
    rows = []
    for p in system.polys:
        value, argmin = p.evaluate(x)
        rows.append({"value": format_scalar(value) if value is INF else _q(value),
                     "argmin": sorted(argmin)})
    _emit({"input": {"system": args.system, "point": _pt(x)}, "polys": rows,
           "membership": membership(system, x)})
    return 0


def cmd_star_table(args) -> int:
    system = _read_system(args.system)
    x = _point_for(args, system)
    table = star_table(system, x)
    if args.json:
        _emit({"input": {"system": args.system, "point": _pt(x)},
               "rows": [sorted(r) for r in table.rows]})
    else:
        print(format_star_table(system, table))
    return 0


def cmd_vertex_check(args) -> int:
    system = _read_system(args.system)
    x = _point_for(args, system)
    ok, basis = is_generalized_vertex(system, x)
    _emit({"input": {"system": args.system, "point": _pt(x)},
           "membership": membership(system, x),
           "generalized_vertex": ok,
           "witness": [_pair(pc) for pc in basis] if basis else None})
    return 0


def cmd_stable_check(args) -> int:
    system = _read_system(args.system)
    x = _point_for(args, system)
    fn = is_stable_brute_force if args.brute_force else is_stable
    ok, picks = fn(system, x)
    _emit({"input": {"system": args.system, "point": _pt(x)},
           "method": "brute-force" if args.brute_force else "matroid-intersection",
           "stable": ok,
           "witness": [_pair(pc) for pc in picks] if picks else None})
    return 0


def cmd_isolated_check(args) -> int:
    system = _read_system(args.system)
    x = _point_for(args, system)
    if not membership(system, x):
        raise ValueError("point is not in the prevariety")
    ld = local_dim(system, x)
    report = {"input": {"system": args.system, "point": _pt(x)},
              "local_dim": ld, "isolated": ld == 0}
    if system.k >= system.n:
        report["isolated_necessary"] = isolated_necessary(system, x)
    _emit(report)
    return 0


def cmd_components(args) -> int:
    system = _read_system(args.system)
    rep = connected_components(system, with_vertices=not args.no_vertices)
    report = {
        "input": {"system": args.system}, "system": _summary(system),
        "cells": len(rep.cells), "count": rep.count,
        "representatives": [_pt(p) for p in rep.representatives],
        "isolated": [_pt(p) for p in rep.isolated],
    }
    if rep.generalized_vertices is not None:
        report["generalized_vertices"] = [_pt(p) for p in rep.generalized_vertices]
    _emit(report)
    return 0


def cmd_stable(args) -> int:
    system = _read_system(args.system)
    res = stable_solutions(system, require_finite_coeffs=args.require_finite)
    _emit({"input": {"system": args.system}, "system": _summary(system),
           "count": res.count, "points": [_pt(p) for p in res.points],
           "generic": res.generic, "degenerate": [_pt(p) for p in res.degenerate],
           "finite_coefficients": res.finite_coefficients,
           "bezout_number": res.bezout_number})
    return 0


def cmd_vertices(args) -> int:
    system = _read_system(args.system)
    pts = generalized_vertices(system, method=args.method)
    _emit({"input": {"system": args.system, "method": args.method},
           "system": _summary(system), "count": len(pts), "points": [_pt(p) for p in pts]})
    return 0


def cmd_isolated(args) -> int:
    system = _read_system(args.system)
    pts = isolated_points(system)
    _emit({"input": {"system": args.system}, "system": _summary(system),
           "count": len(pts), "points": [_pt(p) for p in pts]})
    return 0


def cmd_compactify(args) -> int:
    system = _read_system(args.system)
    comp = compactify(system, Fraction(args.s) if args.s is not None else None,
                      replace_inf=args.replace_inf)
    if args.json:
        sys.stdout.write(dumps_json(comp.system, indent=2) + "\n")
    else:
        sys.stdout.write(f"# box half-side s = {_q(comp.s)}\n" + dumps_dsl(comp.system))
    return 0


def cmd_bounds(args) -> int:
    degrees = [int(v) for v in args.degrees.split(",")] if args.degrees else None
    if degrees is not None and len(degrees) != args.k:
        raise ValueError("--degrees needs k entries")
    d = args.d if args.d is not None else (max(degrees) if degrees else None)
    if d is None:
        raise ValueError("give --d or --degrees")
    reports = bnd.all_bounds(args.k, args.n, d, degrees, args.l)
    _emit({"input": {"k": args.k, "n": args.n, "d": d, "degrees": degrees, "l": args.l},
           "bounds": {r.name: r.to_dict() for r in reports}})
    return 0


def cmd_generate(args) -> int:
    if args.family == "A":
        system = gen.gen_system_A(args.k, finite=args.finite)
    elif args.family == "B":
        system = gen.gen_system_B(args.k, args.d, finite=args.finite)
    else:
        system = gen.gen_system_C(args.n, args.k, args.d, finite=args.finite)
    sys.stdout.write(dumps_json(system, indent=2) + "\n" if args.json else dumps_dsl(system))
    return 0


def cmd_plot(args) -> int:
    system = _read_system(args.system)
    vp = parse_point(args.viewport)
    if len(vp) != 4:
        raise ValueError("--viewport needs xmin,xmax,ymin,ymax")
    labels = []
    for item in args.label or []:
        where, _, text = item.partition(":")
        labels.append((parse_point(where), text))
    svg = render_svg(system, RenderSpec(viewport=vp, width=args.width, labels=tuple(labels)))
    if args.output and args.output != "-":
        with open(args.output, "w") as fh:
            fh.write(svg)
    else:
        sys.stdout.write(svg)
    return 0


# -- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tropsys",
                                     description="Exact computations with min-plus polynomial systems.")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_system(name, help_text, fn, point=False):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("system", help="system file (DSL or JSON), '-' for stdin")
        if point:
            p.add_argument("--point", required=True, help='point as "a/b,c/d"')
        p.set_defaults(func=fn)
        return p

    with_system("parse", "parse and print a system canonically", cmd_parse) \
        .add_argument("--json", action="store_true")
    with_system("eval", "evaluate every polynomial at a point", cmd_eval, point=True)
    with_system("star-table", "star table at a point", cmd_star_table, point=True) \
        .add_argument("--json", action="store_true")
    with_system("vertex-check", "generalized-vertex test", cmd_vertex_check, point=True)
    with_system("stable-check", "stability test (square systems)", cmd_stable_check,
                point=True).add_argument("--brute-force", action="store_true")
    with_system("isolated-check", "local dimension and the necessary isolation test",
                cmd_isolated_check, point=True)
    with_system("components", "connected components of the prevariety", cmd_components) \
        .add_argument("--no-vertices", action="store_true")
    with_system("stable", "stable solutions of a square system", cmd_stable) \
        .add_argument("--require-finite", action="store_true")
    with_system("vertices", "generalized vertices", cmd_vertices) \
        .add_argument("--method", choices=("cells", "pairs"), default="cells")
    with_system("isolated", "isolated points", cmd_isolated)
    p = with_system("compactify", "add box variables and polynomials", cmd_compactify)
    p.add_argument("--s", default=None, help="box half-side (default: bounding box)")
    p.add_argument("--replace-inf", choices=("linear", "power"), default=None)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("bounds", help="closed-form bounds")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, default=None)
    p.add_argument("--degrees", default=None, help="comma-separated degrees")
    p.add_argument("--l", type=int, default=0)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("generate", help="systems with many isolated points")
    p.add_argument("family", choices=("A", "B", "C"))
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--d", type=int, default=1)
    p.add_argument("--finite", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_generate)

    p = with_system("plot", "render a 2-variable system as SVG", cmd_plot)
    p.add_argument("--viewport", default="-4,4,-4,4")
    p.add_argument("--width", type=int, default=400)
    p.add_argument("--label", action="append", help='"x,y:text"')
    p.add_argument("-o", "--output", default=None)
    return parser


def _glue_values(argv: Sequence[str]) -> list[str]:
    """Turn ``--point -1,0`` into ``--point=-1,0`` so argparse accepts it."""
    out: list[str] = []
    it = iter(argv)
    for a in it:
        if a in _VALUE_OPTIONS:
            nxt = next(it, None)
            out.append(a if nxt is None else f"{a}={nxt}")
        else:
            out.append(a)
    return out


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_glue_values(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (ParseError, ValueError, ArithmeticError, CellCapExceeded, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

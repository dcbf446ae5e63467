"""``hypodiv`` command line.

Exit codes: 0 success / positive verdict / pass, 1 negative verdict / fail,
2 usage or input error.
"""
from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from .constructibility import (
    ConstructibilityVerdict,
    DirectPoints,
    DumasCertificate,
    FactorizationWitness,
    GaussWantzelWitness,
    RationalRootExhaustion,
    ReductionChain,
    build_division_cubic,
    gauss_wantzel,
    tricuspoid_division_constructible,
)
from .exact import format_rational, parse_rational
from .geometry import HypocycloidShape, division_points
from .oracle import verify_division
from .polynomial import irreducible_by_dumas, newton_polygon, rational_roots, split_rational_roots
from .render import RenderSpec, render_svg
from .serialize import dumps_json, report_to_csv, report_to_json


class UsageError(Exception):
    pass


def _shape(text: str) -> HypocycloidShape:
    try:
        c = parse_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"--c: {exc}") from None
    if c <= 1:
        raise UsageError(f"--c must be a rational number > 1, got {text}")
    shape = HypocycloidShape.from_ratio(c)
    if shape.degenerate:
        print("warning: c = 2 is degenerate (the curve is the segment [-2, 2] traced twice)", file=sys.stderr)
    return shape


def _positive(n: int, flag: str = "--n") -> int:
    if n < 1:
        raise UsageError(f"{flag} must be a positive integer, got {n}")
    return n


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    try:
        Path(out).write_text(text)
    except OSError as exc:
        raise UsageError(f"cannot write {out}: {exc.strerror or exc}") from None


def cmd_divide(args) -> int:
    shape = _shape(args.c)
    n = _positive(args.n)
    if args.format == "json":
        text = report_to_json(division_points(shape, n))
    elif args.format == "csv":
        text = report_to_csv(division_points(shape, n))
    else:
        text = render_svg(RenderSpec(shape, n, show_division_circles=True))
    _emit(text, args.out)
    return 0


def _polygon_dict(poly, p: int) -> dict:
    polygon = newton_polygon(poly, p)
    return {
        "prime": p,
        "points": [[i, v] for i, v in polygon.points],
        "vertices": [[i, v] for i, v in polygon.vertices],
        "segments": [{"slope": format_rational(s), "length": length} for s, length in polygon.segments],
    }


def cmd_polynomial(args) -> int:
    try:
        n = parse_rational(args.n)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"--n: {exc}") from None
    try:
        poly = build_division_cubic(n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    dumas = irreducible_by_dumas(poly, args.p)
    fact = split_rational_roots(poly)
    reducible = any(f.degree < poly.degree for f, _ in fact.factors)
    payload = {
        "n": format_rational(n),
        "polynomial": str(poly),
        "coefficients": [format_rational(c) for c in poly.coefficients],
        "newton_polygon": _polygon_dict(poly, args.p),
        "dumas": "irreducible" if dumas else "indeterminate",
        "rational_roots": [format_rational(r) for r in rational_roots(poly)],
        "verdict": "reducible" if reducible else "irreducible",
        "factorization": {
            "unit": format_rational(fact.unit),
            "factors": [
                {
                    "polynomial": str(f),
                    "coefficients": [format_rational(c) for c in f.coefficients],
                    "multiplicity": m,
                }
                for f, m in fact.factors
            ],
        },
    }
    sys.stdout.write(dumps_json(payload))
    return 0


def describe_witness(verdict: ConstructibilityVerdict) -> str:
    w = verdict.witness
    if isinstance(w, GaussWantzelWitness):
        fac = " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in w.factors) or "1"
        return f"factorization {w.n} = {fac}"
    if isinstance(w, DirectPoints):
        pts = ", ".join(f"({format_rational(x)}, {format_rational(y)})" for x, y in w.points)
        return f"rational coordinates {pts}"
    if isinstance(w, FactorizationWitness):
        return f"f = {w.factorization}"
    if isinstance(w, DumasCertificate):
        return f"Dumas at p={w.prime}, slope {format_rational(w.slope)} on {w.poly}"
    if isinstance(w, RationalRootExhaustion):
        return f"no rational root among {len(w.candidates)} candidates of {w.poly}"
    if isinstance(w, ReductionChain):
        inner = ConstructibilityVerdict(verdict.subject, Fraction(w.chain[-1]), False, w.terminal)
        return f"reduction {' -> '.join(map(str, w.chain))}; {describe_witness(inner)}"
    return repr(w)


def cmd_constructible(args) -> int:
    n = _positive(args.n)
    if args.curve == "circle":
        verdict = gauss_wantzel(n)
    else:
        verdict = tricuspoid_division_constructible(n)
    print(f"constructible: {'true' if verdict.constructible else 'false'}")
    print(f"curve: {args.curve}")
    print(f"n: {n}")
    print(f"witness: {describe_witness(verdict)}")
    return 0 if verdict.constructible else 1


def cmd_verify(args) -> int:
    shape = _shape(args.c)
    n = _positive(args.n)
    if not args.tol > 0:
        raise UsageError("--tol must be positive")
    report = verify_division(shape, n, args.tol)
    print(f"c: {shape}")
    print(f"n: {n}")
    print(f"max_deviation: {report.max_deviation:.3e}")
    print(f"tol: {args.tol:g}")
    print(f"pass: {'true' if report.passed else 'false'}")
    return 0 if report.passed else 1


def cmd_render(args) -> int:
    shape = _shape(args.c)
    try:
        spec = RenderSpec(
            shape,
            n=args.n,
            width=args.width,
            height=args.height,
            show_circumcircle=args.circumcircle,
            show_division_circles=args.division_circles,
            samples=args.samples,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit(render_svg(spec), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hypodiv", description="Division points of rational hypocycloids.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("divide", help="n-division points of the c-hypocycloid")
    p.add_argument("--c", required=True, help="cusp ratio a/b, e.g. 3 or 5/2")
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--format", choices=("json", "csv", "svg"), default="json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_divide)

    p = sub.add_parser("polynomial", help="the tricuspoid division cubic f_n and its Newton polygon")
    p.add_argument("--n", required=True, help="integer or rational >= 3")
    p.add_argument("--p", type=int, default=3, help="prime for the Newton polygon (default 3)")
    p.set_defaults(func=cmd_polynomial)

    p = sub.add_parser("constructible", help="straightedge-and-compass verdict")
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--curve", choices=("tricuspoid", "circle"), default="tricuspoid")
    p.set_defaults(func=cmd_constructible)

    p = sub.add_parser("verify", help="check equal division by quadrature")
    p.add_argument("--c", required=True)
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--tol", type=float, default=1e-8)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", help="SVG drawing")
    p.add_argument("--c", required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--width", type=int, default=600)
    p.add_argument("--height", type=int, default=600)
    p.add_argument("--samples", type=int, default=720, help="curve samples per turn (>= 64)")
    p.add_argument("--no-circumcircle", dest="circumcircle", action="store_false")
    p.add_argument("--division-circles", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"hypodiv {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"hypodiv {args.command}: error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    sys.exit(main())

"""Command-line front end.

Three subcommands::

    inversive solve <problem> [-o report] [--all] [--tol RAD] [--pair 23|13|12]
    inversive render <problem> <report> [-o out.svg] [--show-inversion]
    inversive invert <input> [--pair]

Exit codes: 0 = success (solve: at least one solution), 1 = invalid input or
geometric error, 2 = valid problem with no solution.  Reports and SVGs are
byte-identical across runs for identical inputs; solve timing goes to
stderr only, so it never perturbs the report.
"""

from __future__ import annotations

import argparse
import math
import sys
import time

from . import fileio, steiner, svgout
from .errors import GeometryError, NoSolution, ProblemFileError
from .geom import Circle, GeneralizedCircle, Line, Point
from .inversion import Inversion, concentricizing_inversion, invert_generalized, invert_point
from .steiner import SteinerProblem

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_NO_SOLUTION = 2


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ProblemFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except GeometryError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="inversive",
        description="Construct circles meeting three given circles at prescribed angles.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="solve a problem file")
    p_solve.add_argument("input", help="problem file")
    p_solve.add_argument("-o", "--output", help="report file (default: stdout)")
    p_solve.add_argument("--all", action="store_true",
                         help="enumerate every sign variant, not just the canonical one")
    p_solve.add_argument("--tol", type=float, default=None,
                         help="verification tolerance in radians (default 1e-7)")
    p_solve.add_argument("--pair", choices=("23", "13", "12"), default=None,
                         help="force which circle pair is made concentric")
    p_solve.set_defaults(func=cmd_solve)

    p_render = sub.add_parser("render", help="draw a problem and its report as SVG")
    p_render.add_argument("input", help="problem file")
    p_render.add_argument("report", help="solution report file")
    p_render.add_argument("-o", "--output", help="SVG file (default: stdout)")
    p_render.add_argument("--show-inversion", action="store_true",
                          help="also draw the inversion circle and the inverted configuration")
    p_render.set_defaults(func=cmd_render)

    p_invert = sub.add_parser("invert", help="apply an inversion, or concentricize a pair")
    p_invert.add_argument("input", help="inversion/objects file")
    p_invert.add_argument("--pair", action="store_true",
                          help="treat the first two circles as a pair to concentricize")
    p_invert.set_defaults(func=cmd_invert)
    return parser


# -- solve ----------------------------------------------------------------------

def cmd_solve(args) -> int:
    with open(args.input, encoding="utf-8") as fh:
        problem, options = fileio.parse_problem(fh.read())
    tol = args.tol if args.tol is not None else (
        options.tolerance if options.tolerance is not None else steiner.VERIFY_TOL)
    enumerate_all = args.all or options.enumerate_all
    pair = args.pair if args.pair is not None else options.pair

    start = time.perf_counter()
    try:
        solutions = steiner.solve(problem, enumerate_all=enumerate_all,
                                  tol=tol, pair=pair)
    except NoSolution:
        report = fileio.SolutionReport(status="none", tolerance=tol)
        _write(args.output, fileio.serialize_report(report))
        return EXIT_NO_SOLUTION
    elapsed = time.perf_counter() - start

    report = _report_from_solutions(solutions, tol)
    _write(args.output, fileio.serialize_report(report))
    print(f"solved in {elapsed * 1e3:.1f} ms: {len(solutions)} solution(s)",
          file=sys.stderr)
    return EXIT_OK


def _report_from_solutions(solutions: list[steiner.SteinerSolution],
                           tol: float) -> fileio.SolutionReport:
    cfg = solutions[0].config
    limiting = None
    if cfg.inv is not None:
        limiting = (cfg.inv.center.x, cfg.inv.center.y)
    reported = []
    for sol in solutions:
        if isinstance(sol.circle, Circle):
            kind = "circle"
            params = (sol.circle.center.x, sol.circle.center.y, sol.circle.radius)
        else:
            kind = "line"
            params = (sol.circle.a, sol.circle.b, sol.circle.c)
        reported.append(fileio.ReportedSolution(
            kind=kind, params=params,
            signs=(sol.variant.s1, sol.variant.s2, sol.variant.s3),
            mirror=sol.variant.mirror,
            residuals_deg=tuple(math.degrees(r) for r in sol.residuals)))
    return fileio.SolutionReport(status="ok", tolerance=tol,
                                 solutions=tuple(reported), pair=cfg.pair,
                                 limiting_point=limiting)


# -- render ---------------------------------------------------------------------

def cmd_render(args) -> int:
    with open(args.input, encoding="utf-8") as fh:
        problem, _ = fileio.parse_problem(fh.read())
    with open(args.report, encoding="utf-8") as fh:
        report = fileio.parse_report(fh.read())

    solutions: list[GeneralizedCircle] = []
    for sol in report.solutions:
        if sol.kind == "circle":
            cx, cy, r = sol.params
            solutions.append(Circle(Point(cx, cy), r))
        else:
            a, b, c = sol.params
            solutions.append(Line.from_coefficients(a, b, c))

    inversion_circle = None
    images: list[GeneralizedCircle] = []
    if args.show_inversion and report.limiting_point is not None:
        inv = Inversion(Point(*report.limiting_point), 1.0)
        inversion_circle = Circle(inv.center, inv.radius)
        images = [invert_generalized(inv, c) for c in problem.circles]

    svg = svgout.render_svg(list(problem.circles), solutions,
                            inversion_circle=inversion_circle, images=images)
    _write(args.output, svg)
    return EXIT_OK


# -- invert ----------------------------------------------------------------------

def cmd_invert(args) -> int:
    with open(args.input, encoding="utf-8") as fh:
        data = fileio.parse_invert_input(fh.read())
    out: list[str] = []
    if args.pair:
        if len(data.circles) < 2:
            raise ProblemFileError(0, "--pair needs at least two circles")
        c1, c2 = data.circles[0], data.circles[1]
        result = concentricizing_inversion(c1, c2)
        inv = result.chosen
        for p in result.limiting_points:
            out.append(f"limiting-point {fileio.fmt(p.x)} {fileio.fmt(p.y)}")
        out.append(f"inversion-center {fileio.fmt(inv.center.x)} {fileio.fmt(inv.center.y)}")
        out.append(f"inversion-radius {fileio.fmt(inv.radius)}")
        g1 = invert_generalized(inv, c1)
        g2 = invert_generalized(inv, c2)
        residual = _concentricity_residual(g1, g2)
        out.append(f"concentricity-residual {fileio.fmt(residual)}")
    else:
        if data.inversion is None:
            raise ProblemFileError(0, "missing inversion line (or use --pair)")
        cx, cy, radius = data.inversion
        inv = Inversion(Point(cx, cy), radius)
    for c in data.circles:
        out.append(_describe(c) + " -> " + _describe(invert_generalized(inv, c)))
    for line in data.lines:
        out.append(_describe(line) + " -> " + _describe(invert_generalized(inv, line)))
    for p in data.points:
        out.append(_describe(p) + " -> " + _describe(invert_point(inv, p)))
    _write(None, "\n".join(out) + "\n")
    return EXIT_OK


def _concentricity_residual(g1: GeneralizedCircle, g2: GeneralizedCircle) -> float:
    if isinstance(g1, Circle) and isinstance(g2, Circle):
        return math.hypot(g1.center.x - g2.center.x, g1.center.y - g2.center.y)
    return math.inf


def _describe(obj) -> str:
    if isinstance(obj, Circle):
        return (f"circle {fileio.fmt(obj.center.x)} {fileio.fmt(obj.center.y)} "
                f"{fileio.fmt(obj.radius)}")
    if isinstance(obj, Line):
        return f"line {fileio.fmt(obj.a)} {fileio.fmt(obj.b)} {fileio.fmt(obj.c)}"
    return f"point {fileio.fmt(obj.x)} {fileio.fmt(obj.y)}"


def _write(path: str | None, content: str) -> None:
    if path is None:
        sys.stdout.write(content)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(content)


if __name__ == "__main__":
    sys.exit(main())

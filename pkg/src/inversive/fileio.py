"""Text formats: problem files, solution reports, and invert-command inputs.

All formats are line oriented; ``#`` starts a comment and blank lines are
ignored.  Numbers are written with 17 significant digits so every float
round-trips exactly, and identical inputs always serialize to identical
bytes.

Problem file (angles in degrees)::

    circle <cx> <cy> <r>        # exactly three
    angles <alpha> <beta> <gamma>
    tolerance <radians>         # optional solver options
    enumerate_all <true|false>
    pair <23|13|12>

Solution report::

    steiner-report v1
    status <ok|none>
    pair <23|13|12>             # present when status is ok
    limiting-point <x> <y>      # present when an inversion was used
    tolerance <radians>
    solutions <count>
    solution circle <cx> <cy> <r> signs <s1> <s2> <s3> mirror <0|1> residuals <r1> <r2> <r3>
    solution line <a> <b> <c> signs ... residuals ...

Report residuals are in degrees.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import ProblemFileError
from .geom import Circle, Line, Point
from .steiner import AngleSpec, SteinerProblem

REPORT_VERSION = "v1"


def fmt(x: float) -> str:
    """Serialize a float with 17 significant digits (exact round-trip)."""
    return "%.17g" % x


@dataclass(frozen=True, slots=True)
class SolverOptions:
    tolerance: float | None = None
    enumerate_all: bool = False
    pair: str | None = None


@dataclass(frozen=True, slots=True)
class ReportedSolution:
    kind: str                      # "circle" or "line"
    params: tuple[float, ...]      # (cx, cy, r) or (a, b, c)
    signs: tuple[int, int, int]
    mirror: bool
    residuals_deg: tuple[float, float, float]


@dataclass(frozen=True, slots=True)
class SolutionReport:
    status: str                    # "ok" or "none"
    tolerance: float
    solutions: tuple[ReportedSolution, ...] = ()
    pair: str | None = None
    limiting_point: tuple[float, float] | None = None


def _content_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((number, line))
    return out


def _parse_float(token: str, line: int, what: str) -> float:
    try:
        value = float(token)
    except ValueError:
        raise ProblemFileError(line, f"{what}: not a number: {token!r}") from None
    if not math.isfinite(value):
        raise ProblemFileError(line, f"{what}: must be finite, got {token!r}")
    return value


# -- problem files ------------------------------------------------------------

def parse_problem(text: str) -> tuple[SteinerProblem, SolverOptions]:
    """Parse a problem file; raises ProblemFileError with the offending line."""
    circles: list[Circle] = []
    angles: AngleSpec | None = None
    tolerance: float | None = None
    enumerate_all = False
    pair: str | None = None
    for number, line in _content_lines(text):
        tokens = line.split()
        key = tokens[0].lower()
        if key == "circle":
            if len(tokens) != 4:
                raise ProblemFileError(number, "circle needs: circle <cx> <cy> <r>")
            cx, cy, r = (_parse_float(t, number, "circle") for t in tokens[1:])
            if r <= 0.0:
                raise ProblemFileError(number, f"radius must be positive, got {fmt(r)}")
            if len(circles) == 3:
                raise ProblemFileError(number, "more than three circles")
            circles.append(Circle(Point(cx, cy), r))
        elif key == "angles":
            if len(tokens) != 4:
                raise ProblemFileError(number, "angles needs: angles <a> <b> <g> (degrees)")
            degs = [_parse_float(t, number, "angle") for t in tokens[1:]]
            for d in degs:
                if not 0.0 <= d <= 90.0:
                    raise ProblemFileError(number, f"angles must lie in [0, 90], got {fmt(d)}")
            angles = AngleSpec(*(math.radians(d) for d in degs))
        elif key == "tolerance":
            tolerance = _parse_float(tokens[1], number, "tolerance")
            if tolerance <= 0.0:
                raise ProblemFileError(number, "tolerance must be positive")
        elif key == "enumerate_all":
            token = tokens[1].lower()
            if token not in ("true", "false"):
                raise ProblemFileError(number, "enumerate_all needs true or false")
            enumerate_all = token == "true"
        elif key == "pair":
            if tokens[1] not in ("23", "13", "12"):
                raise ProblemFileError(number, "pair must be 23, 13 or 12")
            pair = tokens[1]
        else:
            raise ProblemFileError(number, f"unknown directive {tokens[0]!r}")
    if len(circles) != 3:
        raise ProblemFileError(0, f"expected three circles, found {len(circles)}")
    if angles is None:
        raise ProblemFileError(0, "missing angles line")
    problem = SteinerProblem(circles[0], circles[1], circles[2], angles)
    return problem, SolverOptions(tolerance, enumerate_all, pair)


def serialize_problem(problem: SteinerProblem, options: SolverOptions | None = None) -> str:
    lines = []
    for c in problem.circles:
        lines.append(f"circle {fmt(c.center.x)} {fmt(c.center.y)} {fmt(c.radius)}")
    a = problem.angles
    lines.append("angles " + " ".join(fmt(math.degrees(v)) for v in a.as_tuple()))
    if options is not None:
        if options.tolerance is not None:
            lines.append(f"tolerance {fmt(options.tolerance)}")
        if options.enumerate_all:
            lines.append("enumerate_all true")
        if options.pair is not None:
            lines.append(f"pair {options.pair}")
    return "\n".join(lines) + "\n"


# -- solution reports -----------------------------------------------------------

def serialize_report(report: SolutionReport) -> str:
    lines = [f"steiner-report {REPORT_VERSION}", f"status {report.status}"]
    if report.pair is not None:
        lines.append(f"pair {report.pair}")
    if report.limiting_point is not None:
        x, y = report.limiting_point
        lines.append(f"limiting-point {fmt(x)} {fmt(y)}")
    lines.append(f"tolerance {fmt(report.tolerance)}")
    lines.append(f"solutions {len(report.solutions)}")
    for sol in report.solutions:
        parts = ["solution", sol.kind]
        parts += [fmt(v) for v in sol.params]
        parts += ["signs"] + [f"{s:+d}" for s in sol.signs]
        parts += ["mirror", "1" if sol.mirror else "0"]
        parts += ["residuals"] + [fmt(r) for r in sol.residuals_deg]
        lines.append(" ".join(parts))
    return "\n".join(lines) + "\n"


def parse_report(text: str) -> SolutionReport:
    lines = _content_lines(text)
    if not lines or lines[0][1].split() != ["steiner-report", REPORT_VERSION]:
        raise ProblemFileError(1, "not a steiner-report v1 file")
    status: str | None = None
    pair: str | None = None
    limiting: tuple[float, float] | None = None
    tolerance: float | None = None
    count: int | None = None
    solutions: list[ReportedSolution] = []
    for number, line in lines[1:]:
        tokens = line.split()
        key = tokens[0]
        if key == "status":
            status = tokens[1]
        elif key == "pair":
            pair = tokens[1]
        elif key == "limiting-point":
            limiting = (_parse_float(tokens[1], number, "limiting-point"),
                        _parse_float(tokens[2], number, "limiting-point"))
        elif key == "tolerance":
            tolerance = _parse_float(tokens[1], number, "tolerance")
        elif key == "solutions":
            count = int(tokens[1])
        elif key == "solution":
            solutions.append(_parse_solution(tokens, number))
        else:
            raise ProblemFileError(number, f"unknown report line {key!r}")
    if status not in ("ok", "none"):
        raise ProblemFileError(0, f"missing or invalid status {status!r}")
    if tolerance is None:
        raise ProblemFileError(0, "missing tolerance")
    if count is None or count != len(solutions):
        raise ProblemFileError(0, "solution count does not match solution lines")
    return SolutionReport(status=status, tolerance=tolerance,
                          solutions=tuple(solutions), pair=pair,
                          limiting_point=limiting)


def _parse_solution(tokens: list[str], number: int) -> ReportedSolution:
    kind = tokens[1]
    if kind not in ("circle", "line"):
        raise ProblemFileError(number, f"solution kind must be circle or line, got {kind!r}")
    try:
        params = tuple(_parse_float(t, number, "solution") for t in tokens[2:5])
        at = tokens.index("signs")
        signs = tuple(int(tokens[at + k]) for k in (1, 2, 3))
        mirror = tokens[tokens.index("mirror") + 1] == "1"
        at = tokens.index("residuals")
        residuals = tuple(_parse_float(tokens[at + k], number, "residual") for k in (1, 2, 3))
    except (ValueError, IndexError):
        raise ProblemFileError(number, "malformed solution line") from None
    if any(s not in (-1, 1) for s in signs):
        raise ProblemFileError(number, "signs must be +1 or -1")
    return ReportedSolution(kind=kind, params=params, signs=signs,
                            mirror=mirror, residuals_deg=residuals)


# -- invert-command input ---------------------------------------------------------

@dataclass(frozen=True, slots=True)
class InvertInput:
    """Either an explicit inversion plus objects, or a leading circle pair."""

    inversion: tuple[float, float, float] | None  # center x, y, radius
    circles: tuple[Circle, ...] = ()
    lines: tuple[Line, ...] = ()
    points: tuple[Point, ...] = ()


def parse_invert_input(text: str) -> InvertInput:
    inversion = None
    circles: list[Circle] = []
    lines_out: list[Line] = []
    points: list[Point] = []
    for number, line in _content_lines(text):
        tokens = line.split()
        key = tokens[0].lower()
        if key == "inversion":
            if len(tokens) != 4:
                raise ProblemFileError(number, "inversion needs: inversion <cx> <cy> <R>")
            cx, cy, r = (_parse_float(t, number, "inversion") for t in tokens[1:])
            if r <= 0.0:
                raise ProblemFileError(number, "inversion radius must be positive")
            inversion = (cx, cy, r)
        elif key == "circle":
            if len(tokens) != 4:
                raise ProblemFileError(number, "circle needs: circle <cx> <cy> <r>")
            cx, cy, r = (_parse_float(t, number, "circle") for t in tokens[1:])
            if r <= 0.0:
                raise ProblemFileError(number, "radius must be positive")
            circles.append(Circle(Point(cx, cy), r))
        elif key == "line":
            if len(tokens) != 4:
                raise ProblemFileError(number, "line needs: line <a> <b> <c>")
            a, b, c = (_parse_float(t, number, "line") for t in tokens[1:])
            try:
                lines_out.append(Line.from_coefficients(a, b, c))
            except ValueError as exc:
                raise ProblemFileError(number, str(exc)) from None
        elif key == "point":
            if len(tokens) != 3:
                raise ProblemFileError(number, "point needs: point <x> <y>")
            points.append(Point(_parse_float(tokens[1], number, "point"),
                                _parse_float(tokens[2], number, "point")))
        else:
            raise ProblemFileError(number, f"unknown directive {tokens[0]!r}")
    return InvertInput(inversion=inversion, circles=tuple(circles),
                       lines=tuple(lines_out), points=tuple(points))

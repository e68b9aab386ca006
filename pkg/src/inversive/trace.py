"""Replayable compass-and-straightedge construction traces.

A Trace is a straight-line program over geometric objects: each step names
an elementary construction (line through two points, circle from center and
radius, an intersection with a recorded branch choice, ...) and refers to
earlier steps by index.  Replaying a trace on new given points is fully
deterministic; when an intersection branch recorded at build time does not
exist for the new givens, replay raises BranchMiss.

Branch selectors index into the intersection points sorted by (y, x), the
same canonical order the analytic intersection routines use.  The programs
in this module are arranged so that every output is correct under either
resolution of that ordering; see the individual builders.

The serialized text format is versioned and line oriented::

    trace v1
    0 given <x> <y>
    1 given <x> <y>
    2 line_through 0 1
    3 intersect_cc 2 4 branch 0
    ...
    outputs 7 9

Given steps record the coordinates used at build time so a parsed trace can
reproduce its recorded results exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

from . import geom
from .errors import BranchMiss, GeometryError
from .geom import Circle, Line, Point

FORMAT_VERSION = "v1"

STEP_KINDS = (
    "given_point",
    "line_through",
    "circle_center_point",
    "circle_center_radius_of",
    "intersect_ll",
    "intersect_lc",
    "intersect_cc",
    "midpoint",
    "perpendicular_at",
    "parallel_through",
)

_BRANCHED = ("intersect_lc", "intersect_cc")


@dataclass(frozen=True, slots=True)
class TraceStep:
    """One elementary construction step.

    ``operands`` are indices of earlier steps; ``branch`` selects among the
    canonically ordered intersection points for the branched kinds; ``slot``
    is the given-point position for ``given_point`` steps.  ``result`` is
    the object produced when the trace was built.
    """

    kind: str
    operands: tuple[int, ...] = ()
    branch: int | None = None
    slot: int | None = None
    result: object = None


@dataclass
class Trace:
    """An ordered construction program with designated output steps."""

    steps: list[TraceStep]
    outputs: tuple[int, ...]
    givens: tuple[Point, ...] = ()

    def __post_init__(self):
        for index, step in enumerate(self.steps):
            if step.kind not in STEP_KINDS:
                raise ValueError(f"step {index}: unknown kind {step.kind!r}")
            if any(op >= index or op < 0 for op in step.operands):
                raise ValueError(f"step {index}: operands must precede the step")
            if step.kind in _BRANCHED and step.branch not in (0, 1):
                raise ValueError(f"step {index}: branch selector must be 0 or 1")
        for out in self.outputs:
            if not 0 <= out < len(self.steps):
                raise ValueError(f"output index {out} out of range")

    @property
    def given_count(self) -> int:
        return sum(1 for s in self.steps if s.kind == "given_point")

    def recorded_results(self) -> list[object]:
        return [self.steps[i].result for i in self.outputs]


# -- replay -------------------------------------------------------------------

def replay(trace: Trace, givens: list[Point] | tuple[Point, ...]) -> list[object]:
    """Execute the trace on the supplied given points; return the outputs."""
    if len(givens) != trace.given_count:
        raise ValueError(f"trace expects {trace.given_count} givens, got {len(givens)}")
    objects: list[object] = []
    for index, step in enumerate(trace.steps):
        objects.append(_execute(step, index, objects, givens))
    return [objects[i] for i in trace.outputs]


def _execute(step: TraceStep, index: int, objects: list[object],
             givens) -> object:
    args = [objects[i] for i in step.operands]
    try:
        if step.kind == "given_point":
            return givens[step.slot]
        if step.kind == "line_through":
            return geom.line_through_points(_point(args[0]), _point(args[1]))
        if step.kind == "circle_center_point":
            center, through = _point(args[0]), _point(args[1])
            return Circle(center, geom.distance(center, through))
        if step.kind == "circle_center_radius_of":
            center = _point(args[0])
            radius = geom.distance(_point(args[1]), _point(args[2]))
            return Circle(center, radius)
        if step.kind == "intersect_ll":
            return geom.line_line_intersection(_line(args[0]), _line(args[1]))
        if step.kind == "intersect_lc":
            points = geom.line_circle_intersection(_line(args[0]), _circle(args[1]))
            return _pick(points, step.branch, index)
        if step.kind == "intersect_cc":
            points = geom.circle_circle_intersection(_circle(args[0]), _circle(args[1]))
            return _pick(points, step.branch, index)
        if step.kind == "midpoint":
            return geom.midpoint(_point(args[0]), _point(args[1]))
        if step.kind == "perpendicular_at":
            return geom.perpendicular_at(_line(args[0]), _point(args[1]))
        if step.kind == "parallel_through":
            return geom.parallel_through(_line(args[0]), _point(args[1]))
    except BranchMiss:
        raise
    except (GeometryError, ValueError) as exc:
        raise BranchMiss(f"step {index} ({step.kind}): {exc}") from exc
    raise ValueError(f"step {index}: unknown kind {step.kind!r}")


def _pick(points: list[Point], branch: int, index: int) -> Point:
    if branch >= len(points):
        raise BranchMiss(f"step {index}: intersection branch {branch} does not "
                         f"exist ({len(points)} points)")
    return points[branch]


def _point(obj) -> Point:
    if not isinstance(obj, Point):
        raise ValueError(f"expected a point operand, got {type(obj).__name__}")
    return obj


def _line(obj) -> Line:
    if not isinstance(obj, Line):
        raise ValueError(f"expected a line operand, got {type(obj).__name__}")
    return obj


def _circle(obj) -> Circle:
    if not isinstance(obj, Circle):
        raise ValueError(f"expected a circle operand, got {type(obj).__name__}")
    return obj


# -- building -----------------------------------------------------------------

class _Builder:
    """Appends steps while executing them, so recorded results stay in sync."""

    def __init__(self):
        self.steps: list[TraceStep] = []
        self.objects: list[object] = []
        self.givens: list[Point] = []

    def given(self, p: Point) -> int:
        slot = len(self.givens)
        self.givens.append(p)
        step = TraceStep(kind="given_point", slot=slot, result=p)
        self.steps.append(step)
        self.objects.append(p)
        return len(self.steps) - 1

    def add(self, kind: str, *operands: int, branch: int | None = None) -> int:
        step = TraceStep(kind=kind, operands=tuple(operands), branch=branch)
        result = _execute(step, len(self.steps), self.objects, self.givens)
        self.steps.append(TraceStep(kind=kind, operands=tuple(operands),
                                    branch=branch, result=result))
        self.objects.append(result)
        return len(self.steps) - 1

    def build(self, *outputs: int) -> Trace:
        return Trace(steps=self.steps, outputs=tuple(outputs),
                     givens=tuple(self.givens))


# -- the construction programs --------------------------------------------------

def program_circumcircle() -> Trace:
    """Circle through three given points via two perpendicular bisectors.

    Givens: the three points.  11 steps, output: the circle.  Replay on
    collinear points raises BranchMiss (the bisectors are parallel).
    """
    b = _Builder()
    pa = b.given(Point(1.0, 0.0))
    pb = b.given(Point(0.0, 1.0))
    pc = b.given(Point(-1.0, 0.0))
    m1 = b.add("midpoint", pa, pb)
    lab = b.add("line_through", pa, pb)
    bis1 = b.add("perpendicular_at", lab, m1)
    m2 = b.add("midpoint", pb, pc)
    lbc = b.add("line_through", pb, pc)
    bis2 = b.add("perpendicular_at", lbc, m2)
    center = b.add("intersect_ll", bis1, bis2)
    circ = b.add("circle_center_point", center, pa)
    return b.build(circ)


def program_fourth_proportional() -> Trace:
    """Segment of length a*b/c from marked lengths on two rays.

    Givens: O, then A and C on one ray with |OA| = a, |OC| = c, then B on a
    second ray with |OB| = b.  A parallel to BC through A cuts the ray OB at
    X with |OX| = a*b/c (similar triangles).  8 steps, output: X.
    """
    b = _Builder()
    o = b.given(Point(0.0, 0.0))
    pa = b.given(Point(2.0, 0.0))
    pc = b.given(Point(4.0, 0.0))
    pb = b.given(Point(3.0 * 0.5, 3.0 * math.sqrt(3.0) / 2.0))
    lbc = b.add("line_through", pb, pc)
    par = b.add("parallel_through", lbc, pa)
    lob = b.add("line_through", o, pb)
    x = b.add("intersect_ll", par, lob)
    return b.build(x)


def program_right_triangle_legs() -> Trace:
    """Legs c*sin(angle) and c*cos(angle) from a hypotenuse and a drawn angle.

    Givens: hypotenuse endpoints H1, H2 (|H1 H2| = c), then the angle as
    drawn rays: vertex V and ray points U1, U2.  The hypotenuse length is
    laid off from V along the U1 ray (either side; the angle between the
    ray *lines* is the same acute angle), and the foot F of the
    perpendicular from that mark Z onto the U2 ray line closes the right
    triangle: |VF| = c*cos(angle), |FZ| = c*sin(angle).  11 steps,
    outputs: Z then F.
    """
    b = _Builder()
    h1 = b.given(Point(0.0, 0.0))
    h2 = b.given(Point(2.0, 0.0))
    v = b.given(Point(5.0, 1.0))
    u1 = b.given(Point(6.0, 1.0))
    u2 = b.given(Point(5.0 + math.cos(math.pi / 6), 1.0 + math.sin(math.pi / 6)))
    reach = b.add("circle_center_radius_of", v, h1, h2)
    l1 = b.add("line_through", v, u1)
    z = b.add("intersect_lc", l1, reach, branch=0)
    l2 = b.add("line_through", v, u2)
    perp = b.add("perpendicular_at", l2, z)
    f = b.add("intersect_ll", perp, l2)
    return b.build(z, f)


def program_invert_point() -> Trace:
    """Inverse of a point strictly outside the inversion circle.

    Givens: center O, a point S on the inversion circle (fixing its radius),
    and the point P outside.  The circle on diameter [OP] meets the
    inversion circle at a tangent point A; the foot of the perpendicular
    from A onto OP is the inverse P'.  Either tangent point gives the same
    foot.  10 steps, output: P'.
    """
    b = _Builder()
    o = b.given(Point(0.0, 0.0))
    s = b.given(Point(2.0, 0.0))
    p = b.given(Point(4.0, 0.0))
    inv_circle = b.add("circle_center_point", o, s)
    m = b.add("midpoint", o, p)
    thales = b.add("circle_center_point", m, o)
    a = b.add("intersect_cc", inv_circle, thales, branch=0)
    lop = b.add("line_through", o, p)
    perp = b.add("perpendicular_at", lop, a)
    p_inv = b.add("intersect_ll", perp, lop)
    return b.build(p_inv)


def program_invert_point_interior() -> Trace:
    """Inverse of a point strictly inside the inversion circle (not the center).

    Givens: center O, a point S on the inversion circle, and the interior
    point P'.  Erect the perpendicular to OP' at P'; it meets the inversion
    circle at A, and the tangent at A (perpendicular to OA) cuts the line
    OP' at the inverse P.  10 steps, output: P.
    """
    b = _Builder()
    o = b.given(Point(0.0, 0.0))
    s = b.given(Point(2.0, 0.0))
    p_inv = b.given(Point(1.0, 0.0))
    inv_circle = b.add("circle_center_point", o, s)
    lop = b.add("line_through", o, p_inv)
    chord = b.add("perpendicular_at", lop, p_inv)
    a = b.add("intersect_lc", chord, inv_circle, branch=0)
    loa = b.add("line_through", o, a)
    tangent = b.add("perpendicular_at", loa, a)
    p = b.add("intersect_ll", tangent, lop)
    return b.build(p)


def program_concentricizer(equal_radii: bool = False) -> Trace:
    """Limiting points of two external non-intersecting circles.

    Givens: O1, a point P1 on the first circle, O2, a point P2 on the
    second.  Both variants construct the midpoints of the two common outer
    tangent segments, whose join is the radical axis; its meet C with the
    center line carries the circle through the tangent point D1, and that
    circle cuts the center line in the two limiting points.

    The default (distinct radii, 39 steps) realizes the tangent direction
    through the right triangle with hypotenuse [O1 O2] and one side of
    length |r1 - r2|: that length is laid off along the center line from
    O1 (two concentric marks share their lexicographic branch side), the
    right-angle vertex E comes from the circle on diameter [O1 O2], the
    tangent point A on the first circle is the single meet of that circle
    with the radius-r2 circle around E (internally tangent by
    construction), and the tangent point B on the second circle is A
    translated by the vector from E to O2 (a parallelogram).

    With ``equal_radii`` (23 steps) the outer tangents are parallel to the
    center line and the tangent points sit on the perpendiculars at the
    centers.  Outputs: the two limiting points in canonical (y, x) order.
    """
    b = _Builder()
    if equal_radii:
        o1 = b.given(Point(0.0, 0.0))
        p1 = b.given(Point(1.0, 0.0))
        o2 = b.given(Point(4.0, 0.0))
        p2 = b.given(Point(5.0, 0.0))
        c1 = b.add("circle_center_point", o1, p1)
        c2 = b.add("circle_center_point", o2, p2)
        axis = b.add("line_through", o1, o2)
        perp1 = b.add("perpendicular_at", axis, o1)
        a = b.add("intersect_lc", perp1, c1, branch=0)
        a2 = b.add("intersect_lc", perp1, c1, branch=1)
        perp2 = b.add("perpendicular_at", axis, o2)
        bb = b.add("intersect_lc", perp2, c2, branch=0)
        bb2 = b.add("intersect_lc", perp2, c2, branch=1)
        m1 = b.add("midpoint", a, bb)
        m2 = b.add("midpoint", a2, bb2)
    else:
        o1 = b.given(Point(0.0, 0.0))
        p1 = b.given(Point(2.0, 0.0))
        o2 = b.given(Point(6.0, 0.0))
        p2 = b.given(Point(7.0, 0.0))
        c1 = b.add("circle_center_point", o1, p1)
        b.add("circle_center_point", o2, p2)  # the second given circle
        axis = b.add("line_through", o1, o2)
        u = b.add("intersect_lc", axis, c1, branch=0)
        r2_at_o1 = b.add("circle_center_radius_of", o1, o2, p2)
        v = b.add("intersect_lc", axis, r2_at_o1, branch=0)
        helper = b.add("circle_center_radius_of", o1, u, v)
        mid = b.add("midpoint", o1, o2)
        thales = b.add("circle_center_point", mid, o1)
        m1 = _tangent_midpoint(b, o1, o2, p2, c1, thales, helper, branch=0)
        m2 = _tangent_midpoint(b, o1, o2, p2, c1, thales, helper, branch=1)
    rad_axis = b.add("line_through", m1, m2)
    c = b.add("intersect_ll", rad_axis, axis)
    mc = b.add("midpoint", c, o1)
    thales_c = b.add("circle_center_point", mc, o1)
    d1 = b.add("intersect_cc", c1, thales_c, branch=0)
    ortho = b.add("circle_center_point", c, d1)
    l1 = b.add("intersect_lc", axis, ortho, branch=0)
    l2 = b.add("intersect_lc", axis, ortho, branch=1)
    return b.build(l1, l2)


def _tangent_midpoint(b: _Builder, o1: int, o2: int, p2: int, c1: int,
                      thales: int, helper: int, branch: int) -> int:
    # One outer tangent segment [A B] and its midpoint, from the right-angle
    # vertex E on the chosen side of the center line.
    e = b.add("intersect_cc", thales, helper, branch=branch)
    around_e = b.add("circle_center_radius_of", e, o2, p2)
    a = b.add("intersect_cc", c1, around_e, branch=0)
    l_eo2 = b.add("line_through", e, o2)
    l_ea = b.add("line_through", e, a)
    par_a = b.add("parallel_through", l_eo2, a)
    par_o2 = b.add("parallel_through", l_ea, o2)
    bb = b.add("intersect_ll", par_a, par_o2)
    return b.add("midpoint", a, bb)


# -- serialization ----------------------------------------------------------------

def serialize_trace(trace: Trace) -> str:
    """Versioned text form: one step per line, outputs at the end."""
    lines = [f"trace {FORMAT_VERSION}"]
    for index, step in enumerate(trace.steps):
        if step.kind == "given_point":
            p = trace.givens[step.slot]
            lines.append(f"{index} given {_fmt(p.x)} {_fmt(p.y)}")
        else:
            parts = [str(index), step.kind] + [str(op) for op in step.operands]
            if step.branch is not None:
                parts += ["branch", str(step.branch)]
            lines.append(" ".join(parts))
    lines.append("outputs " + " ".join(str(i) for i in trace.outputs))
    return "\n".join(lines) + "\n"


def parse_trace(text: str) -> Trace:
    """Rebuild a trace from its serialized form (recorded results included,
    recomputed by executing the steps on the stored givens)."""
    lines = [ln for ln in (raw.strip() for raw in text.splitlines())
             if ln and not ln.startswith("#")]
    if not lines or lines[0].split() != ["trace", FORMAT_VERSION]:
        raise ValueError("not a trace file (missing 'trace v1' header)")
    builder = _Builder()
    outputs: tuple[int, ...] | None = None
    for ln in lines[1:]:
        parts = ln.split()
        if parts[0] == "outputs":
            outputs = tuple(int(tok) for tok in parts[1:])
            continue
        if outputs is not None:
            raise ValueError("steps after the outputs line")
        index = int(parts[0])
        if index != len(builder.steps):
            raise ValueError(f"non-sequential step index {index}")
        kind = parts[1]
        if kind == "given":
            builder.given(Point(float(parts[2]), float(parts[3])))
            continue
        if kind not in STEP_KINDS:
            raise ValueError(f"unknown step kind {kind!r}")
        branch = None
        operand_tokens = parts[2:]
        if "branch" in operand_tokens:
            at = operand_tokens.index("branch")
            branch = int(operand_tokens[at + 1])
            operand_tokens = operand_tokens[:at]
        builder.add(kind, *(int(tok) for tok in operand_tokens), branch=branch)
    if outputs is None:
        raise ValueError("missing outputs line")
    return builder.build(*outputs)


def _fmt(x: float) -> str:
    return "%.17g" % x

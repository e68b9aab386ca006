"""Planar primitives: points, circles, lines, and their incidence operations.

Everything here is a pure function of its arguments.  Degeneracy decisions
(tangency, collinearity, concentricity) all run through one knob: a relative
tolerance EPS scaled by the extent of the objects involved.  Pass ``eps`` to
any tolerance-aware operation to override the default.

Angles between curves are always the acute angle between tangent lines at an
intersection point, reported in radians within [0, pi/2].
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

from .errors import (
    CollinearPoints,
    ConcentricCircles,
    IdenticalCircles,
    NoIntersection,
)

EPS = 1e-9
"""Default relative degeneracy tolerance, scaled by instance extent."""

_UNIT_TOL = 1e-12  # how exactly a Line normal must be unit length


@dataclass(frozen=True, slots=True)
class Point:
    """A point of the plane with finite coordinates."""

    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"non-finite point ({self.x!r}, {self.y!r})")


@dataclass(frozen=True, slots=True)
class Circle:
    """A proper circle: a center and a strictly positive finite radius."""

    center: Point
    radius: float

    def __post_init__(self):
        if not (math.isfinite(self.radius) and self.radius > 0.0):
            raise ValueError(f"circle radius must be positive, got {self.radius!r}")


@dataclass(frozen=True, slots=True)
class Line:
    """The locus a*x + b*y = c with unit normal (a, b).

    Construct through :meth:`from_coefficients` (or the line_* helpers),
    which normalizes and picks the canonical orientation: the first
    component of (a, b) that is not negligibly small is positive.  That
    makes equal lines produced by different routes compare nearly equal.
    """

    a: float
    b: float
    c: float

    def __post_init__(self):
        if not (math.isfinite(self.a) and math.isfinite(self.b) and math.isfinite(self.c)):
            raise ValueError("non-finite line coefficients")
        if abs(math.hypot(self.a, self.b) - 1.0) > _UNIT_TOL:
            raise ValueError("line normal must be unit length; use Line.from_coefficients")

    @classmethod
    def from_coefficients(cls, a: float, b: float, c: float) -> "Line":
        n = math.hypot(a, b)
        if n == 0.0 or not math.isfinite(n):
            raise ValueError("line normal must be nonzero and finite")
        a, b, c = a / n, b / n, c / n
        # Canonical orientation; |a| below _UNIT_TOL counts as zero so that
        # vertical-ish lines orient by b.
        if a < -_UNIT_TOL or (abs(a) <= _UNIT_TOL and b < 0.0):
            a, b, c = -a, -b, -c
        return cls(a, b, c)

    def side(self, p: Point) -> float:
        """Signed distance from p to the line (positive on the normal side)."""
        return self.a * p.x + self.b * p.y - self.c

    def foot(self, p: Point) -> Point:
        """Orthogonal projection of p onto the line."""
        s = self.side(p)
        return Point(p.x - s * self.a, p.y - s * self.b)

    def direction(self) -> tuple[float, float]:
        """A unit vector along the line."""
        return (-self.b, self.a)


GeneralizedCircle = Union[Circle, Line]
"""A circle or a line: the class of objects closed under inversion."""


# -- scale and tolerance ----------------------------------------------------

def bounding_scale(*items: Point | Circle) -> float:
    """Diagonal of the bounding box of the given points/circles, floored at 1.

    This is the length that relative tolerances are scaled by.  Lines are
    unbounded and deliberately excluded.
    """
    xs: list[float] = []
    ys: list[float] = []
    for item in items:
        if isinstance(item, Point):
            xs.append(item.x)
            ys.append(item.y)
        elif isinstance(item, Circle):
            xs.extend((item.center.x - item.radius, item.center.x + item.radius))
            ys.extend((item.center.y - item.radius, item.center.y + item.radius))
        else:
            raise TypeError(f"bounding_scale: unsupported object {type(item).__name__}")
    if not xs:
        return 1.0
    diag = math.hypot(max(xs) - min(xs), max(ys) - min(ys))
    return max(diag, 1.0)


def _tol(eps: float | None, *items: Point | Circle) -> float:
    return (EPS if eps is None else eps) * bounding_scale(*items)


# -- basic measures ---------------------------------------------------------

def distance(p: Point, q: Point) -> float:
    """Euclidean distance between two points."""
    return math.hypot(p.x - q.x, p.y - q.y)


def midpoint(p: Point, q: Point) -> Point:
    return Point(0.5 * (p.x + q.x), 0.5 * (p.y + q.y))


def power_of_point(p: Point, c: Circle) -> float:
    """Power of p with respect to c: |p - center|^2 - radius^2.

    Positive outside the circle (the square of the tangent length), zero on
    it, negative inside.
    """
    dx = p.x - c.center.x
    dy = p.y - c.center.y
    return dx * dx + dy * dy - c.radius * c.radius


def law_of_cosines_side(a: float, b: float, gamma: float) -> float:
    """Third side of a triangle with sides a, b enclosing the angle gamma."""
    if a <= 0.0 or b <= 0.0:
        raise ValueError("sides must be positive")
    if not 0.0 <= gamma <= math.pi:
        raise ValueError("enclosed angle must lie in [0, pi]")
    rad = a * a + b * b - 2.0 * a * b * math.cos(gamma)
    return math.sqrt(max(rad, 0.0))


# -- angles -----------------------------------------------------------------

def _clamped_acos(x: float) -> float:
    return math.acos(min(1.0, max(-1.0, x)))


def angle_between_circles(c1: Circle, c2: Circle, eps: float | None = None) -> float:
    """Acute intersection angle of two circles, in radians.

    Requires the circles to meet: |r1 - r2| <= d <= r1 + r2 within
    tolerance.  Tangency counts as meeting at one point and returns 0.
    """
    t = _tol(eps, c1, c2)
    d = distance(c1.center, c2.center)
    r1, r2 = c1.radius, c2.radius
    if d > r1 + r2 + t or d < abs(r1 - r2) - t:
        raise NoIntersection(f"circles do not meet (d={d}, radii {r1}, {r2})")
    return _clamped_acos(abs(r1 * r1 + r2 * r2 - d * d) / (2.0 * r1 * r2))


def angle_between_line_circle(line: Line, c: Circle, eps: float | None = None) -> float:
    """Acute angle between a line and a circle at an intersection point."""
    t = _tol(eps, c)
    h = abs(line.side(c.center))
    if h > c.radius + t:
        raise NoIntersection(f"line misses circle (distance {h}, radius {c.radius})")
    return _clamped_acos(h / c.radius)


def angle_between_lines(l1: Line, l2: Line) -> float:
    """Acute angle between two lines."""
    return _clamped_acos(abs(l1.a * l2.a + l1.b * l2.b))


def angle_between(g1: GeneralizedCircle, g2: GeneralizedCircle,
                  eps: float | None = None) -> float:
    """Acute intersection angle between two generalized circles."""
    if isinstance(g1, Circle) and isinstance(g2, Circle):
        return angle_between_circles(g1, g2, eps)
    if isinstance(g1, Line) and isinstance(g2, Line):
        return angle_between_lines(g1, g2)
    line, circ = (g1, g2) if isinstance(g1, Line) else (g2, g1)
    return angle_between_line_circle(line, circ, eps)


# -- constructors -----------------------------------------------------------

def line_through_points(p: Point, q: Point) -> Line:
    """The line through two distinct points."""
    dx, dy = q.x - p.x, q.y - p.y
    if dx == 0.0 and dy == 0.0:
        raise ValueError("line through coincident points is undefined")
    # normal is the direction rotated by 90 degrees
    return Line.from_coefficients(dy, -dx, dy * p.x - dx * p.y)


def perpendicular_at(line: Line, p: Point) -> Line:
    """Line through p perpendicular to the given line."""
    dx, dy = line.direction()
    return Line.from_coefficients(dx, dy, dx * p.x + dy * p.y)


def parallel_through(line: Line, p: Point) -> Line:
    """Line through p parallel to the given line."""
    return Line.from_coefficients(line.a, line.b, line.a * p.x + line.b * p.y)


def circle_through_three_points(a: Point, b: Point, c: Point,
                                eps: float | None = None) -> Circle:
    """Circumcircle of three non-collinear points."""
    t = _tol(eps, a, b, c)
    cross = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)
    if abs(cross) <= t * t:
        raise CollinearPoints("the three points are collinear (or nearly so)")
    sa = a.x * a.x + a.y * a.y
    sb = b.x * b.x + b.y * b.y
    sc = c.x * c.x + c.y * c.y
    d = 2.0 * (a.x * (b.y - c.y) + b.x * (c.y - a.y) + c.x * (a.y - b.y))
    ux = (sa * (b.y - c.y) + sb * (c.y - a.y) + sc * (a.y - b.y)) / d
    uy = (sa * (c.x - b.x) + sb * (a.x - c.x) + sc * (b.x - a.x)) / d
    center = Point(ux, uy)
    radius = (distance(center, a) + distance(center, b) + distance(center, c)) / 3.0
    return Circle(center, radius)


# -- intersections ----------------------------------------------------------

def _sorted_points(points: list[Point]) -> list[Point]:
    # Canonical enumeration order: by y, then x.
    return sorted(points, key=lambda p: (p.y, p.x))


def circle_circle_intersection(c1: Circle, c2: Circle,
                               eps: float | None = None) -> list[Point]:
    """Intersection points of two circles (0, 1 or 2), sorted by (y, x).

    Tangency within tolerance yields exactly one point.  Coinciding circles
    raise IdenticalCircles since every point would qualify.
    """
    t = _tol(eps, c1, c2)
    d = distance(c1.center, c2.center)
    r1, r2 = c1.radius, c2.radius
    if d <= t and abs(r1 - r2) <= t:
        raise IdenticalCircles("the circles coincide within tolerance")
    if d > r1 + r2 + t or d < abs(r1 - r2) - t or d == 0.0:
        return []
    ex = (c2.center.x - c1.center.x) / d
    ey = (c2.center.y - c1.center.y) / d
    a = (d * d + r1 * r1 - r2 * r2) / (2.0 * d)
    fx = c1.center.x + a * ex
    fy = c1.center.y + a * ey
    if d >= r1 + r2 - t or d <= abs(r1 - r2) + t:
        return [Point(fx, fy)]
    h = math.sqrt(max(r1 * r1 - a * a, 0.0))
    return _sorted_points([Point(fx - h * ey, fy + h * ex),
                           Point(fx + h * ey, fy - h * ex)])


def line_circle_intersection(line: Line, c: Circle,
                             eps: float | None = None) -> list[Point]:
    """Intersection points of a line and a circle (0, 1 or 2), sorted by (y, x)."""
    t = _tol(eps, c)
    s = line.side(c.center)
    if abs(s) > c.radius + t:
        return []
    fx = c.center.x - s * line.a
    fy = c.center.y - s * line.b
    if abs(s) >= c.radius - t:
        return [Point(fx, fy)]
    h = math.sqrt(max(c.radius * c.radius - s * s, 0.0))
    dx, dy = line.direction()
    return _sorted_points([Point(fx - h * dx, fy - h * dy),
                           Point(fx + h * dx, fy + h * dy)])


def line_line_intersection(l1: Line, l2: Line) -> Point:
    """The single intersection point of two non-parallel lines."""
    det = l1.a * l2.b - l2.a * l1.b
    if abs(det) <= _UNIT_TOL:
        raise NoIntersection("lines are parallel")
    x = (l1.c * l2.b - l2.c * l1.b) / det
    y = (l1.a * l2.c - l2.a * l1.c) / det
    return Point(x, y)


def radical_axis(c1: Circle, c2: Circle, eps: float | None = None) -> Line:
    """Locus of points with equal power with respect to both circles.

    Perpendicular to the line of centers; requires distinct centers.
    """
    t = _tol(eps, c1, c2)
    d = distance(c1.center, c2.center)
    if d <= t:
        raise ConcentricCircles("concentric circles have no radical axis")
    ex = (c2.center.x - c1.center.x) / d
    ey = (c2.center.y - c1.center.y) / d
    along = (d * d + c1.radius * c1.radius - c2.radius * c2.radius) / (2.0 * d)
    offset = ex * c1.center.x + ey * c1.center.y + along
    return Line.from_coefficients(ex, ey, offset)

"""Inversion in a circle and the concentricizing construction.

An inversion with center O and radius R sends a point P != O to the point P'
on the ray from O through P with |OP| * |OP'| = R^2.  It is an involution on
the punctured plane, maps generalized circles to generalized circles, and
preserves intersection angles.

The second half of the module builds, for two non-intersecting circles, the
inversion that makes them concentric: radical axis, the point C where it
crosses the center line, the circle around C orthogonal to both inputs, and
that circle's two intersections with the center line (the limiting points).
Inverting in a circle centered at either limiting point makes the pair
concentric.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import geom
from .errors import CenterPoint, ConcentricInput, IntersectingCircles
from .geom import Circle, GeneralizedCircle, Line, Point

__all__ = [
    "Inversion",
    "ConcentricizingResult",
    "invert_point",
    "invert_circle",
    "invert_line",
    "invert_generalized",
    "concentricizing_inversion",
]


@dataclass(frozen=True, slots=True)
class Inversion:
    """Inversion map determined by its center and positive radius."""

    center: Point
    radius: float

    def __post_init__(self):
        if not (math.isfinite(self.radius) and self.radius > 0.0):
            raise ValueError(f"inversion radius must be positive, got {self.radius!r}")


@dataclass(frozen=True, slots=True)
class ConcentricizingResult:
    """Everything the concentricizing construction produces.

    limiting_points are sorted by (x, y); ``chosen`` is the inversion
    (radius 1) centered at one of them.  orthogonal_circle crosses both
    inputs at right angles; radical_axis carries equal-power points.
    """

    limiting_points: tuple[Point, Point]
    chosen: Inversion
    orthogonal_circle: Circle
    radical_axis: Line


def invert_point(inv: Inversion, p: Point, eps: float | None = None) -> Point:
    """Image of a point; the point may not coincide with the center."""
    vx = p.x - inv.center.x
    vy = p.y - inv.center.y
    d2 = vx * vx + vy * vy
    t = (geom.EPS if eps is None else eps) * geom.bounding_scale(
        Circle(inv.center, inv.radius), p)
    if d2 <= t * t:
        raise CenterPoint("cannot invert the inversion center")
    f = inv.radius * inv.radius / d2
    return Point(inv.center.x + f * vx, inv.center.y + f * vy)


def invert_circle(inv: Inversion, c: Circle, eps: float | None = None) -> GeneralizedCircle:
    """Image of a circle: a circle, or a line when c passes through the center.

    The circle branch uses the closed form through the power of the center:
    the image of a circle with power p (seen from the inversion center) is
    the circle scaled by R^2 / p about the center.
    """
    ox, oy = inv.center.x, inv.center.y
    r2 = inv.radius * inv.radius
    p = geom.power_of_point(inv.center, c)
    scale = geom.bounding_scale(Circle(inv.center, inv.radius), c)
    t = (geom.EPS if eps is None else eps) * scale
    if abs(p) <= t * scale:
        # Boundary passes through the center: the image is a straight line
        # perpendicular to the center-to-center direction, through the image
        # of the point of c farthest from the center.
        d = geom.distance(inv.center, c.center)
        ux = (c.center.x - ox) / d
        uy = (c.center.y - oy) / d
        far = d + c.radius
        img = r2 / far
        return Line.from_coefficients(ux, uy, ux * (ox + img * ux) + uy * (oy + img * uy))
    f = r2 / p
    cx = ox + f * (c.center.x - ox)
    cy = oy + f * (c.center.y - oy)
    return Circle(Point(cx, cy), abs(f) * c.radius)


def invert_line(inv: Inversion, line: Line, eps: float | None = None) -> GeneralizedCircle:
    """Image of a line: itself if it passes through the center, else a circle
    through the center whose diameter joins the center to the image of the
    line's closest point."""
    s = line.side(inv.center)
    t = (geom.EPS if eps is None else eps) * geom.bounding_scale(
        Circle(inv.center, inv.radius))
    if abs(s) <= t:
        return line
    r2 = inv.radius * inv.radius
    half = r2 / (2.0 * s)
    center = Point(inv.center.x - half * line.a, inv.center.y - half * line.b)
    return Circle(center, abs(half))


def invert_generalized(inv: Inversion, g: GeneralizedCircle,
                       eps: float | None = None) -> GeneralizedCircle:
    """Dispatch over the circle/line union; applying twice restores the input."""
    if isinstance(g, Circle):
        return invert_circle(inv, g, eps)
    if isinstance(g, Line):
        return invert_line(inv, g, eps)
    raise TypeError(f"cannot invert object of type {type(g).__name__}")


def concentricizing_inversion(c1: Circle, c2: Circle, avoid: Point | None = None,
                              eps: float | None = None) -> ConcentricizingResult:
    """Inversion turning two non-intersecting circles into concentric ones.

    The circles must be strictly separated or strictly nested (tangent pairs
    are rejected: the orthogonal circle would shrink to a point).  ``avoid``
    selects between the two limiting points: the one farther from ``avoid``
    becomes the inversion center, which keeps other nearby geometry away
    from the center.  Without ``avoid`` the lexicographically smaller
    limiting point is chosen.  The inversion radius is fixed at 1; any
    radius produces concentric images.
    """
    t = geom._tol(eps, c1, c2)
    d = geom.distance(c1.center, c2.center)
    r1, r2 = c1.radius, c2.radius
    if d <= t:
        raise ConcentricInput("the circles are already concentric")
    if not (d > r1 + r2 + t or d < abs(r1 - r2) - t):
        raise IntersectingCircles(
            "concentricizing needs strictly non-intersecting circles "
            f"(d={d}, radii {r1}, {r2})")

    ex = (c2.center.x - c1.center.x) / d
    ey = (c2.center.y - c1.center.y) / d
    along = (d * d + r1 * r1 - r2 * r2) / (2.0 * d)
    cx = c1.center.x + along * ex
    cy = c1.center.y + along * ey
    foot = Point(cx, cy)
    tangent_sq = along * along - r1 * r1
    if tangent_sq <= 0.0:  # cannot happen for separated/nested circles
        raise IntersectingCircles("radical-axis foot lies inside a circle")
    tangent = math.sqrt(tangent_sq)

    axis = Line.from_coefficients(ex, ey, ex * c1.center.x + ey * c1.center.y + along)
    ortho = Circle(foot, tangent)
    pa = Point(cx - tangent * ex, cy - tangent * ey)
    pb = Point(cx + tangent * ex, cy + tangent * ey)
    limiting = tuple(sorted((pa, pb), key=lambda p: (p.x, p.y)))

    if avoid is None:
        center = limiting[0]
    else:
        center = max(limiting, key=lambda p: (geom.distance(p, avoid), p.x, p.y))
    return ConcentricizingResult(
        limiting_points=limiting,
        chosen=Inversion(center, 1.0),
        orthogonal_circle=ortho,
        radical_axis=axis,
    )

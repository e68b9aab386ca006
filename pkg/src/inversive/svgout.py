"""Deterministic SVG output for problems and their solutions.

Styling follows the usual figure conventions: given circles solid, solution
circles/lines dashed, the inversion circle and the inverted images in their
own stroke classes.  The viewBox is the bounding box of everything drawn
plus a 10% margin.  No external assets; identical inputs yield identical
bytes.
"""

from __future__ import annotations

from .geom import Circle, GeneralizedCircle, Line, Point

_STYLE = """\
    circle, line { fill: none; stroke-width: 0.02; }
    .given { stroke: #1a1a1a; }
    .solution { stroke: #c02020; stroke-dasharray: 0.12 0.08; }
    .inversion { stroke: #208020; stroke-dasharray: 0.03 0.05; }
    .image { stroke: #2040c0; }\
"""


def _fmt(x: float) -> str:
    return "%.9g" % x


class _Scene:
    def __init__(self):
        self.elements: list[tuple[str, GeneralizedCircle]] = []
        self.xs: list[float] = []
        self.ys: list[float] = []

    def add(self, css: str, obj: GeneralizedCircle) -> None:
        self.elements.append((css, obj))
        if isinstance(obj, Circle):
            self.xs += [obj.center.x - obj.radius, obj.center.x + obj.radius]
            self.ys += [obj.center.y - obj.radius, obj.center.y + obj.radius]

    def bounds(self) -> tuple[float, float, float, float]:
        if not self.xs:
            return (-1.0, -1.0, 2.0, 2.0)
        x0, x1 = min(self.xs), max(self.xs)
        y0, y1 = min(self.ys), max(self.ys)
        margin = 0.1 * max(x1 - x0, y1 - y0, 1.0)
        return (x0 - margin, y0 - margin,
                (x1 - x0) + 2 * margin, (y1 - y0) + 2 * margin)


def _clip_line(line: Line, x0: float, y0: float, w: float, h: float) -> tuple[Point, Point] | None:
    # Chord of the line across the viewBox rectangle.
    dx, dy = line.direction()
    anchor = line.foot(Point(x0 + w / 2.0, y0 + h / 2.0))
    slack = 1e-9 * max(w, h)
    ts: list[float] = []
    for bound, origin, along in ((x0, anchor.x, dx), (x0 + w, anchor.x, dx),
                                 (y0, anchor.y, dy), (y0 + h, anchor.y, dy)):
        if abs(along) < 1e-15:
            continue
        t = (bound - origin) / along
        px, py = anchor.x + t * dx, anchor.y + t * dy
        if x0 - slack <= px <= x0 + w + slack and y0 - slack <= py <= y0 + h + slack:
            ts.append(t)
    if len(ts) < 2:
        return None
    t0, t1 = min(ts), max(ts)
    return (Point(anchor.x + t0 * dx, anchor.y + t0 * dy),
            Point(anchor.x + t1 * dx, anchor.y + t1 * dy))


def render_svg(given: list[Circle],
               solutions: list[GeneralizedCircle],
               inversion_circle: Circle | None = None,
               images: list[GeneralizedCircle] | None = None) -> str:
    """SVG document showing the given circles, solutions, and (optionally)
    the inversion circle with the inverted configuration."""
    scene = _Scene()
    for c in given:
        scene.add("given", c)
    for g in solutions:
        scene.add("solution", g)
    if inversion_circle is not None:
        scene.add("inversion", inversion_circle)
    for g in images or []:
        scene.add("image", g)

    x0, y0, w, h = scene.bounds()
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="{_fmt(x0)} {_fmt(y0)} {_fmt(w)} {_fmt(h)}">',
        "  <style>",
        _STYLE,
        "  </style>",
    ]
    for css, obj in scene.elements:
        if isinstance(obj, Circle):
            parts.append(
                f'  <circle class="{css}" cx="{_fmt(obj.center.x)}" '
                f'cy="{_fmt(obj.center.y)}" r="{_fmt(obj.radius)}"/>')
        else:
            chord = _clip_line(obj, x0, y0, w, h)
            if chord is None:
                continue
            p, q = chord
            parts.append(
                f'  <line class="{css}" x1="{_fmt(p.x)}" y1="{_fmt(p.y)}" '
                f'x2="{_fmt(q.x)}" y2="{_fmt(q.y)}"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"

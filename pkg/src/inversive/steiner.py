"""Solver for the three-circle problem with prescribed intersection angles.

Given three pairwise non-overlapping circles whose centers form a proper
triangle, and three angles in [0, pi/2], find every circle (or line) meeting
circle i at the prescribed angle i.  The classical tangency problem is the
special case of three zero angles.

Method: invert so that two of the circles become concentric.  In that frame
a candidate radius follows from a closed form, the candidate center from two
distances laid off with the law of cosines, and the answer is the inverse
image of that circle.  Sign choices on the cosine terms and the mirror
choice of the center enumerate the solution branches; every candidate is
verified against the original circles before it is reported.

When all three angles are right the candidate in the inverted frame is a
line through the two image centers instead of a circle.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, replace

from . import geom
from .errors import (
    CoincidentCenters,
    DegenerateImage,
    DegenerateRadius,
    GeometryError,
    ImaginaryDistance,
    ImproperTriangle,
    InfeasibleVariant,
    MissedCircle,
    NoIntersection,
    NoPlacement,
    NoSolution,
    OrthogonalDegenerate,
    OverlappingCircles,
    TangentPair,
)
from .geom import Circle, GeneralizedCircle, Line, Point
from .inversion import Inversion, concentricizing_inversion, invert_circle, invert_generalized

VERIFY_TOL = 1e-7
"""Default verification tolerance for achieved angles, in radians."""

_RIGHT_COS = 1e-10  # cosines below this count as a right angle

_ANGLE_SLACK = 1e-12  # admission slack for the [0, pi/2] range

PAIR_CHOICES = ("23", "13", "12")
"""Concentricizing pair preference order (circle indices, 1-based)."""


def _is_right(angle: float) -> bool:
    return math.cos(angle) < _RIGHT_COS


@dataclass(frozen=True, slots=True)
class AngleSpec:
    """Prescribed angles (radians) against circles 1, 2, 3 respectively."""

    alpha: float
    beta: float
    gamma: float

    def __post_init__(self):
        for name, value in (("alpha", self.alpha), ("beta", self.beta),
                            ("gamma", self.gamma)):
            if not math.isfinite(value) or not -_ANGLE_SLACK <= value <= math.pi / 2 + _ANGLE_SLACK:
                raise ValueError(f"{name} must lie in [0, pi/2], got {value!r}")

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.alpha, self.beta, self.gamma)


@dataclass(frozen=True, slots=True)
class SteinerProblem:
    """Three circles with their prescribed intersection angles."""

    c1: Circle
    c2: Circle
    c3: Circle
    angles: AngleSpec

    @property
    def circles(self) -> tuple[Circle, Circle, Circle]:
        return (self.c1, self.c2, self.c3)


@dataclass(frozen=True, slots=True)
class SignVariant:
    """One solution branch: a sign for each cosine term plus the mirror
    choice between the two candidate-center placements."""

    s1: int = 1
    s2: int = 1
    s3: int = 1
    mirror: bool = False

    def __post_init__(self):
        if any(s not in (-1, 1) for s in (self.s1, self.s2, self.s3)):
            raise ValueError("signs must be +1 or -1")


CANONICAL_VARIANT = SignVariant()


@dataclass(frozen=True, slots=True)
class InvertedConfiguration:
    """The problem after the concentricizing inversion.

    Labels are arranged so that the images of circles 2 and 3 are concentric
    with r2p < r3p; ``angles`` is relabeled to match, ``pair`` records which
    original pair (1-based indices) was concentricized, and ``swapped`` says
    whether the 2/3 labels were exchanged.  ``inv`` is None when the input
    pair was already concentric and no inversion was applied.
    """

    inv: Inversion | None
    c1p: Circle
    c2p: Circle
    c3p: Circle
    concentric_center: Point
    r1p: float
    r2p: float
    r3p: float
    angles: AngleSpec
    pair: str = "23"
    swapped: bool = False


@dataclass(frozen=True, slots=True)
class SteinerSolution:
    """A verified answer circle (or line) with its provenance.

    residuals are |achieved - prescribed| angles in radians against the
    original circles 1, 2, 3.  r_prime, d1, d2 are the inverted-frame radius
    and center distances; they are None for the all-right-angles branch,
    whose inverted-frame candidate is a line.
    """

    circle: GeneralizedCircle
    variant: SignVariant
    residuals: tuple[float, float, float]
    config: InvertedConfiguration
    r_prime: float | None = None
    d1: float | None = None
    d2: float | None = None


# -- validation ---------------------------------------------------------------

def validate(problem: SteinerProblem, eps: float | None = None) -> None:
    """Check the solvable-instance assumptions; raise on the first violation.

    The circles must have non-degenerate radii, centers forming a proper
    triangle, and pairwise center distances at least the radius sums
    (tangency allowed).
    """
    circles = problem.circles
    t = geom._tol(eps, *circles)
    for i, c in enumerate(circles, start=1):
        if c.radius <= t:
            raise DegenerateRadius(f"circle {i} has degenerate radius {c.radius}")
    o1, o2, o3 = (c.center for c in circles)
    cross = (o2.x - o1.x) * (o3.y - o1.y) - (o2.y - o1.y) * (o3.x - o1.x)
    if abs(cross) <= t * t:
        raise ImproperTriangle("circle centers are collinear (or nearly so)")
    for i, j in ((1, 2), (1, 3), (2, 3)):
        ci, cj = circles[i - 1], circles[j - 1]
        if geom.distance(ci.center, cj.center) < ci.radius + cj.radius - t:
            raise OverlappingCircles(i, j)


# -- concentricizing ----------------------------------------------------------

def concentricize(problem: SteinerProblem, eps: float | None = None,
                  pair_label: str = "23") -> InvertedConfiguration:
    """Map the problem through an inversion making circles 2 and 3 concentric.

    The image of circle 1 must stay a circle; if it degenerates to a line
    for the preferred limiting point, the other one is tried, and only when
    both fail is DegenerateImage raised.  Tangent pairs are rejected (their
    orthogonal circle degenerates).  An already-concentric pair passes
    through untouched with ``inv=None``.
    """
    c1, c2, c3 = problem.circles
    t = geom._tol(eps, c1, c2, c3)
    d = geom.distance(c2.center, c3.center)
    if d <= t:
        cfg = InvertedConfiguration(
            inv=None, c1p=c1, c2p=c2, c3p=c3, concentric_center=c2.center,
            r1p=c1.radius, r2p=c2.radius, r3p=c3.radius,
            angles=problem.angles, pair=pair_label)
        return _relabel(cfg)
    if abs(d - (c2.radius + c3.radius)) <= t or abs(d - abs(c2.radius - c3.radius)) <= t:
        raise TangentPair(f"circles of pair {pair_label} are tangent")

    result = concentricizing_inversion(c2, c3, avoid=c1.center, eps=eps)
    chosen = result.chosen
    candidates = [chosen] + [Inversion(p, 1.0) for p in result.limiting_points
                             if p != chosen.center]
    last_error: GeometryError | None = None
    for inv in candidates:
        images = [invert_circle(inv, c, eps) for c in (c1, c2, c3)]
        if not all(isinstance(g, Circle) for g in images):
            last_error = DegenerateImage(
                "a given circle passes through the limiting point "
                f"{inv.center} of pair {pair_label}")
            continue
        g1, g2, g3 = images
        center = geom.midpoint(g2.center, g3.center)
        cfg = InvertedConfiguration(
            inv=inv, c1p=g1, c2p=g2, c3p=g3, concentric_center=center,
            r1p=g1.radius, r2p=g2.radius, r3p=g3.radius,
            angles=problem.angles, pair=pair_label)
        return _relabel(cfg)
    raise last_error if last_error is not None else DegenerateImage("no usable limiting point")


def _relabel(cfg: InvertedConfiguration) -> InvertedConfiguration:
    # Arrange the concentric pair so r2p < r3p, carrying the angles along.
    if cfg.r2p <= cfg.r3p:
        return cfg
    ang = cfg.angles
    return replace(cfg, c2p=cfg.c3p, c3p=cfg.c2p, r2p=cfg.r3p, r3p=cfg.r2p,
                   angles=AngleSpec(ang.alpha, ang.gamma, ang.beta),
                   swapped=not cfg.swapped)


# -- candidate construction in the inverted frame ------------------------------

def solve_radius(cfg: InvertedConfiguration, angles: AngleSpec,
                 variant: SignVariant, eps: float | None = None) -> float:
    """Radius of the candidate circle in the inverted frame.

    r' = (r3p^2 - r2p^2) / (2 (s2 r2p cos(beta) + s3 r3p cos(gamma))).
    Raises OrthogonalDegenerate when both cosines vanish (route to
    solve_orthogonal) and InfeasibleVariant when this sign choice gives a
    non-positive radius.
    """
    cb = math.cos(angles.beta)
    cg = math.cos(angles.gamma)
    if cb < _RIGHT_COS and cg < _RIGHT_COS:
        raise OrthogonalDegenerate("both pair angles are right angles")
    den = variant.s2 * cfg.r2p * cb + variant.s3 * cfg.r3p * cg
    if abs(den) <= 1e-12 * (cfg.r2p + cfg.r3p):
        raise InfeasibleVariant("vanishing radius denominator for this sign choice")
    r = (cfg.r3p * cfg.r3p - cfg.r2p * cfg.r2p) / (2.0 * den)
    t = (geom.EPS if eps is None else eps) * geom.bounding_scale(cfg.c2p, cfg.c3p)
    if r <= t:
        raise InfeasibleVariant(f"non-positive candidate radius {r}")
    return r


def _center_distances(cfg: InvertedConfiguration, angles: AngleSpec,
                      variant: SignVariant, r_prime: float) -> tuple[float, float]:
    d1 = _lay_off(r_prime, cfg.r1p, angles.alpha, variant.s1)
    d2 = _lay_off(r_prime, cfg.r2p, angles.beta, variant.s2)
    return d1, d2


def _lay_off(r: float, ri: float, angle: float, sign: int) -> float:
    # Distance between centers of circles with radii r, ri meeting at the
    # given angle; sign +1 is the convex (supplementary-angle) branch.
    rad = r * r + ri * ri + 2.0 * sign * r * ri * math.cos(angle)
    if rad < 0.0:
        if rad < -(1e-9 * (r + ri)) ** 2:
            raise ImaginaryDistance(f"negative distance radicand {rad}")
        rad = 0.0
    return math.sqrt(rad)


def solve_center(cfg: InvertedConfiguration, angles: AngleSpec, variant: SignVariant,
                 r_prime: float, eps: float | None = None) -> list[Point]:
    """Candidate centers in the inverted frame (at most two, mirror images).

    The center lies at distance d1 from the image of circle 1 and d2 from
    the common center of the concentric pair; the two intersection points of
    those distance circles are returned sorted by (y, x), and the variant's
    mirror flag picks between them downstream.
    """
    if r_prime <= 0.0:
        raise ValueError("r_prime must be positive")
    d1, d2 = _center_distances(cfg, angles, variant, r_prime)
    t = geom._tol(eps, cfg.c1p, cfg.c2p, cfg.c3p)
    if d1 <= t or d2 <= t:
        raise NoPlacement("candidate center would coincide with an image center")
    o1 = cfg.c1p.center
    oc = cfg.concentric_center
    if geom.distance(o1, oc) <= t:
        # Image of circle 1 concentric with the pair: any direction works
        # when the distances agree, so return one antipodal representative
        # pair; otherwise there is no placement.
        if abs(d1 - d2) <= t:
            return geom._sorted_points([Point(oc.x + d1, oc.y), Point(oc.x - d1, oc.y)])
        raise NoPlacement("concentric placement circles with different radii")
    points = geom.circle_circle_intersection(Circle(o1, d1), Circle(oc, d2), eps)
    if not points:
        raise NoPlacement(f"distance circles d1={d1}, d2={d2} do not meet")
    return points


def solve_orthogonal(cfg: InvertedConfiguration, eps: float | None = None) -> Line:
    """All-right-angles branch: in the inverted frame the answer is the line
    through the image of circle 1's center and the common center."""
    t = geom._tol(eps, cfg.c1p, cfg.c2p, cfg.c3p)
    if geom.distance(cfg.c1p.center, cfg.concentric_center) <= t:
        raise CoincidentCenters("image centers coincide; no orthogonal line")
    return geom.line_through_points(cfg.c1p.center, cfg.concentric_center)


# -- verification ---------------------------------------------------------------

def verify(candidate: GeneralizedCircle, problem: SteinerProblem,
           eps: float | None = None) -> tuple[float, float, float]:
    """Residuals |achieved - prescribed| (radians) against circles 1, 2, 3.

    Computed directly in the original, un-inverted plane.  Raises
    MissedCircle(i) if the candidate fails to reach circle i, or coincides
    with it (a circle does not intersect itself at a well-defined angle).
    """
    t = geom._tol(eps, *problem.circles)
    residuals = []
    for i, (given, prescribed) in enumerate(
            zip(problem.circles, problem.angles.as_tuple()), start=1):
        if isinstance(candidate, Circle):
            if (geom.distance(candidate.center, given.center) <= t
                    and abs(candidate.radius - given.radius) <= t):
                raise MissedCircle(i, f"candidate coincides with circle {i}")
        try:
            achieved = geom.angle_between(candidate, given, eps)
        except NoIntersection as exc:
            raise MissedCircle(i, f"candidate does not reach circle {i}: {exc}") from exc
        residuals.append(abs(achieved - prescribed))
    return tuple(residuals)


# -- top-level solve --------------------------------------------------------------

def solve(problem: SteinerProblem, enumerate_all: bool = False,
          tol: float = VERIFY_TOL, pair: str | None = None,
          eps: float | None = None) -> list[SteinerSolution]:
    """All verified solutions of the problem, deterministically ordered.

    With ``enumerate_all`` every sign triple is tried (16 candidates before
    verification and deduplication); otherwise only the all-plus triple with
    both mirror placements.  ``pair`` forces which circle pair ("23", "13"
    or "12") is made concentric; by default the pairs are tried in that
    order, skipping pairs that are tangent, map circle 1 to a line, or carry
    two right angles.  Raises NoSolution when nothing verifies within
    ``tol`` radians.
    """
    validate(problem, eps)
    angles = problem.angles.as_tuple()
    all_right = all(_is_right(a) for a in angles)

    order = [pair] if pair is not None else list(PAIR_CHOICES)
    cfg = None
    last_error: GeometryError | None = None
    for label in order:
        if label not in PAIR_CHOICES:
            raise ValueError(f"pair must be one of {PAIR_CHOICES}, got {label!r}")
        i, j = int(label[0]), int(label[1])
        if not all_right and _is_right(angles[i - 1]) and _is_right(angles[j - 1]):
            continue  # the radius denominator would vanish for every sign
        try:
            cfg = concentricize(_permuted(problem, label), eps, pair_label=label)
            break
        except (TangentPair, DegenerateImage) as exc:
            last_error = exc
    if cfg is None:
        raise last_error if last_error is not None else NoSolution("no usable pair")

    if all_right:
        solutions = [_solve_right_angles(cfg, problem, tol, eps)]
    else:
        solutions = _enumerate_variants(cfg, problem, enumerate_all, tol, eps)
    if not solutions:
        raise NoSolution("no sign variant produced a verified solution")
    return _dedup_sorted(solutions, geom.bounding_scale(*problem.circles))


def _solve_right_angles(cfg: InvertedConfiguration, problem: SteinerProblem,
                        tol: float, eps: float | None) -> SteinerSolution:
    line = solve_orthogonal(cfg, eps)
    candidate = invert_generalized(cfg.inv, line, eps) if cfg.inv is not None else line
    residuals = verify(candidate, problem, eps)
    if max(residuals) > tol:
        raise NoSolution(f"orthogonal candidate missed tolerance: {residuals}")
    return SteinerSolution(circle=candidate, variant=CANONICAL_VARIANT,
                           residuals=residuals, config=cfg)


def _enumerate_variants(cfg: InvertedConfiguration, problem: SteinerProblem,
                        enumerate_all: bool, tol: float,
                        eps: float | None) -> list[SteinerSolution]:
    triples = (list(itertools.product((1, -1), repeat=3)) if enumerate_all
               else [(1, 1, 1)])
    found: list[SteinerSolution] = []
    for s1, s2, s3 in triples:
        base = SignVariant(s1, s2, s3)
        try:
            r_prime = solve_radius(cfg, cfg.angles, base, eps)
            points = solve_center(cfg, cfg.angles, base, r_prime, eps)
        except (OrthogonalDegenerate, InfeasibleVariant, NoPlacement,
                ImaginaryDistance):
            continue
        d1, d2 = _center_distances(cfg, cfg.angles, base, r_prime)
        for mirror_index, center in enumerate(points[:2]):
            variant = SignVariant(s1, s2, s3, mirror=bool(mirror_index))
            inner = Circle(center, r_prime)
            candidate = (invert_generalized(cfg.inv, inner, eps)
                         if cfg.inv is not None else inner)
            try:
                residuals = verify(candidate, problem, eps)
            except MissedCircle:
                continue
            if max(residuals) <= tol:
                found.append(SteinerSolution(
                    circle=candidate, variant=variant, residuals=residuals,
                    config=cfg, r_prime=r_prime, d1=d1, d2=d2))
    return found


def _permuted(problem: SteinerProblem, pair: str) -> SteinerProblem:
    """Relabel circles so the requested pair sits in slots 2 and 3."""
    if pair == "23":
        return problem
    c = problem.circles
    a = problem.angles.as_tuple()
    if pair == "13":
        order = (1, 0, 2)
    else:  # "12"
        order = (2, 0, 1)
    k, i, j = order
    return SteinerProblem(c[k], c[i], c[j], AngleSpec(a[k], a[i], a[j]))


def _solution_key(sol: SteinerSolution) -> tuple:
    g = sol.circle
    if isinstance(g, Circle):
        return (0, g.radius, g.center.x, g.center.y)
    return (1, g.a, g.b, g.c)


def _dedup_sorted(solutions: list[SteinerSolution], scale: float) -> list[SteinerSolution]:
    t = 1e-7 * scale
    ordered = sorted(solutions, key=_solution_key)
    kept: list[SteinerSolution] = []
    for sol in ordered:
        if any(_same_generalized(sol.circle, other.circle, t) for other in kept):
            continue
        kept.append(sol)
    return kept


def _same_generalized(g1: GeneralizedCircle, g2: GeneralizedCircle, t: float) -> bool:
    if isinstance(g1, Circle) and isinstance(g2, Circle):
        return (geom.distance(g1.center, g2.center) <= t
                and abs(g1.radius - g2.radius) <= t)
    if isinstance(g1, Line) and isinstance(g2, Line):
        return (abs(g1.a - g2.a) <= 1e-7 and abs(g1.b - g2.b) <= 1e-7
                and abs(g1.c - g2.c) <= t)
    return False

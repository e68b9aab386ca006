"""Exception hierarchy for the inversive package.

Every condition a caller might want to branch on gets its own class; all of
them derive from GeometryError so the CLI can catch the lot in one place.
"""

from __future__ import annotations


class GeometryError(Exception):
    """Base class for all geometric failures raised by this package."""


# -- primitive incidence ----------------------------------------------------

class NoIntersection(GeometryError):
    """The queried objects do not meet (beyond tolerance)."""


class CollinearPoints(GeometryError):
    """Three points are collinear where a proper triangle is required."""


class IdenticalCircles(GeometryError):
    """Two circles coincide within tolerance."""


class ConcentricCircles(GeometryError):
    """Two circles share a center, so no radical axis exists."""


# -- inversion --------------------------------------------------------------

class CenterPoint(GeometryError):
    """The point to invert coincides with the inversion center."""


class IntersectingCircles(GeometryError):
    """A concentricizing inversion needs strictly non-intersecting circles."""


class ConcentricInput(GeometryError):
    """The circle pair is already concentric; no inversion is needed."""


# -- Steiner solver ---------------------------------------------------------

class ImproperTriangle(GeometryError):
    """The three circle centers fail to form a proper triangle."""


class OverlappingCircles(GeometryError):
    """Two of the given circles overlap (center distance below radius sum)."""

    def __init__(self, i: int, j: int, message: str | None = None):
        self.pair = (i, j)
        super().__init__(message or f"circles {i} and {j} overlap")


class DegenerateRadius(GeometryError):
    """A given radius is too small (or not finite) at the instance scale."""


class TangentPair(GeometryError):
    """The pair chosen for concentricizing is tangent; its orthogonal
    circle degenerates to a point."""


class DegenerateImage(GeometryError):
    """The third circle maps to a line for both limiting points."""


class OrthogonalDegenerate(GeometryError):
    """Both angles of the concentricized pair are right angles, so the
    radius formula has a vanishing denominator."""


class InfeasibleVariant(GeometryError):
    """The sign variant yields a non-positive candidate radius."""


class NoPlacement(GeometryError):
    """The two distance circles locating the candidate center do not meet."""


class ImaginaryDistance(GeometryError):
    """A distance radicand came out negative (defensive; only reachable
    through roundoff with negative signs)."""


class CoincidentCenters(GeometryError):
    """The two centers the orthogonal-case line should join coincide."""


class MissedCircle(GeometryError):
    """A candidate solution does not reach one of the given circles."""

    def __init__(self, index: int, message: str | None = None):
        self.index = index
        super().__init__(message or f"candidate does not intersect circle {index}")


class NoSolution(GeometryError):
    """No sign variant produced a verified solution."""


# -- construction traces ----------------------------------------------------

class BranchMiss(GeometryError):
    """A recorded trace step cannot be replayed on the supplied givens
    (missing intersection branch, parallel lines, degenerate operands)."""


# -- file formats -----------------------------------------------------------

class ProblemFileError(GeometryError):
    """A problem or report file failed to parse; carries the line number."""

    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")

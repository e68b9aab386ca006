"""Circle inversion and the three-circle problem with prescribed angles.

The package solves, verifies and draws the generalized tangency problem:
given three circles and three angles in [0, 90 degrees], construct every
circle (or line) meeting circle i at angle i.  It also records replayable
compass-and-straightedge traces for the constructions the solver's
correctness rests on.
"""

from . import errors
from .geom import (
    EPS,
    Circle,
    GeneralizedCircle,
    Line,
    Point,
    angle_between,
    angle_between_circles,
    bounding_scale,
    circle_circle_intersection,
    circle_through_three_points,
    distance,
    law_of_cosines_side,
    midpoint,
    power_of_point,
    radical_axis,
)
from .inversion import (
    ConcentricizingResult,
    Inversion,
    concentricizing_inversion,
    invert_circle,
    invert_generalized,
    invert_line,
    invert_point,
)
from .steiner import (
    VERIFY_TOL,
    AngleSpec,
    InvertedConfiguration,
    SignVariant,
    SteinerProblem,
    SteinerSolution,
    concentricize,
    solve,
    solve_center,
    solve_orthogonal,
    solve_radius,
    validate,
    verify,
)
from .trace import (
    Trace,
    TraceStep,
    parse_trace,
    program_circumcircle,
    program_concentricizer,
    program_fourth_proportional,
    program_invert_point,
    program_invert_point_interior,
    program_right_triangle_legs,
    replay,
    serialize_trace,
)

__version__ = "0.1.0"

__all__ = [
    "errors",
    "EPS",
    "Point",
    "Circle",
    "Line",
    "GeneralizedCircle",
    "distance",
    "midpoint",
    "power_of_point",
    "law_of_cosines_side",
    "angle_between",
    "angle_between_circles",
    "bounding_scale",
    "circle_circle_intersection",
    "circle_through_three_points",
    "radical_axis",
    "Inversion",
    "ConcentricizingResult",
    "invert_point",
    "invert_circle",
    "invert_line",
    "invert_generalized",
    "concentricizing_inversion",
    "VERIFY_TOL",
    "AngleSpec",
    "SteinerProblem",
    "SignVariant",
    "InvertedConfiguration",
    "SteinerSolution",
    "validate",
    "concentricize",
    "solve_radius",
    "solve_center",
    "solve_orthogonal",
    "verify",
    "solve",
    "Trace",
    "TraceStep",
    "replay",
    "serialize_trace",
    "parse_trace",
    "program_circumcircle",
    "program_fourth_proportional",
    "program_right_triangle_legs",
    "program_invert_point",
    "program_invert_point_interior",
    "program_concentricizer",
]

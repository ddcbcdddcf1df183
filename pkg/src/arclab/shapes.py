"""Analytic constructors for the figures the library studies.

All shapes live on the fixed frame K = (-1/2, 0), L = (1/2, 0) with the
reference circle of unit diameter on segment KL.  The two unit circles
centered at K and L intersect at C = (0, sqrt(3)/2) and D = (0, -sqrt(3)/2);
every figure sharing the diameter KL must fit inside their lens-shaped
intersection.  Expected closed-form values are attached to each shape so the
kernel can be audited against them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .geometry import (
    Circle,
    DEFAULT_TOL,
    Figure,
    Point,
    Tolerance,
    arc,
    circle_figure,
    figure,
    segment,
)
from .littlewood import RadialProfile

SQRT3 = math.sqrt(3.0)

K = Point(-0.5, 0.0)
L = Point(0.5, 0.0)
C = Point(0.0, 0.5 * SQRT3)
D = Point(0.0, -0.5 * SQRT3)

#: Unit-diameter circle on the segment KL.
REFERENCE_CIRCLE = Circle(Point(0.0, 0.0), 0.5)

# Closed forms used across the package.
MIXED_TRIANGLE_AREA = (8.0 * math.pi - 6.0 * SQRT3) / 24.0  # = pi/3 - sqrt(3)/4
MIXED_TRIANGLE_EXTERIOR = (5.0 * math.pi - 6.0 * SQRT3) / 24.0
#: Largest exterior fraction attainable by a convex figure sharing the diameter KL.
MU_MAX = MIXED_TRIANGLE_EXTERIOR / MIXED_TRIANGLE_AREA  # (5 pi - 6 sqrt 3)/(8 pi - 6 sqrt 3)
REULEAUX_AREA = 0.5 * (math.pi - SQRT3)
LENS_AREA = 2.0 * math.pi / 3.0 - 0.5 * SQRT3  # two-circle lens, centers 1 apart, radius 1
#: Exterior fraction of the equilateral triangle KLC: 1/2 - pi/(6 sqrt 3).
TRIANGLE_KLC_MU = 0.5 - math.pi / (6.0 * SQRT3)


@dataclass(frozen=True)
class NamedShape:
    """A figure plus the reference circle it is measured against and its
    documented closed-form properties (area/perimeter/diameter/mu)."""

    name: str
    figure: Figure
    reference_circle: Circle | None = None
    expected: dict[str, float] = field(default_factory=dict)


def unit_circle(tol: Tolerance = DEFAULT_TOL) -> NamedShape:
    """The unit-diameter disc itself, the area-bound extremal shape."""
    return NamedShape(
        name="unit_circle",
        figure=circle_figure(REFERENCE_CIRCLE, tol),
        reference_circle=REFERENCE_CIRCLE,
        expected={
            "area": math.pi / 4.0,  # pi r^2, r = 1/2
            "perimeter": math.pi,  # 2 pi r
            "diameter": 1.0,
            "mu": 0.0,  # nothing lies outside itself
        },
    )


def mixed_triangle(tol: Tolerance = DEFAULT_TOL) -> NamedShape:
    """Segment KL plus the two unit arcs through C: the mu-maximizing figure."""
    fig = figure([segment(K, L), arc(L, C, K, 1.0), arc(C, K, L, 1.0)], tol)
    return NamedShape(
        name="mixed_triangle",
        figure=fig,
        reference_circle=REFERENCE_CIRCLE,
        expected={
            "area": MIXED_TRIANGLE_AREA,  # 0.61418484930437814
            "perimeter": 1.0 + 2.0 * math.pi / 3.0,
            "diameter": 1.0,
            "mu": MU_MAX,  # 0.36061742713125646
        },
    )


def lens(tol: Tolerance = DEFAULT_TOL) -> NamedShape:
    """Intersection of the two unit discs centered at K and L (region KDLC)."""
    fig = figure([arc(D, C, K, 1.0), arc(C, D, L, 1.0)], tol)
    return NamedShape(
        name="lens",
        figure=fig,
        reference_circle=REFERENCE_CIRCLE,
        expected={
            "area": LENS_AREA,  # 1.2283696986087567
            "perimeter": 4.0 * math.pi / 3.0,  # two arcs of 2 pi/3 each
            "diameter": SQRT3,  # |CD|, from the circle-intersection algebra
            # The lens is two mirrored copies of the mixed triangle, so its
            # exterior fraction equals the same maximum: (LENS - pi/4)/LENS.
            "mu": (LENS_AREA - math.pi / 4.0) / LENS_AREA,
        },
    )


def reuleaux(tol: Tolerance = DEFAULT_TOL) -> NamedShape:
    """Constant-width curve of width 1 on the equilateral triangle K, L, C."""
    fig = figure([arc(K, L, C, 1.0), arc(L, C, K, 1.0), arc(C, K, L, 1.0)], tol)
    return NamedShape(
        name="reuleaux",
        figure=fig,
        reference_circle=REFERENCE_CIRCLE,
        expected={
            "area": REULEAUX_AREA,  # equilateral triangle + three circular segments
            "perimeter": math.pi,  # constant width d has perimeter pi d (Barbier)
            "diameter": 1.0,
            # Upper boundary matches the mixed triangle, lower bulge stays
            # inside the reference disc, so the exterior area is the same.
            "mu": MIXED_TRIANGLE_EXTERIOR / REULEAUX_AREA,
        },
    )


def isosceles(apex_angle: float, tol: Tolerance = DEFAULT_TOL) -> NamedShape:
    """Triangle with unit legs KL and KM and the given apex angle at K.

    Valid for apex_angle in (0, pi/3]; at pi/3 the triangle is equilateral
    (M = C) and the base equals the legs, the boundary case of "legs longer
    than the base".  The diameter is 1 by construction.
    """
    if not (0.0 < apex_angle <= math.pi / 3.0 + 1e-12):
        raise ValueError(f"apex angle must lie in (0, pi/3], got {apex_angle!r}")
    m_pt = Point(-0.5 + math.cos(apex_angle), math.sin(apex_angle))
    fig = figure([segment(K, L), segment(L, m_pt), segment(m_pt, K)], tol)
    expected = {
        "area": 0.5 * math.sin(apex_angle),  # (1/2) |KL| |KM| sin(angle)
        "diameter": 1.0,
        "perimeter": 2.0 + 2.0 * math.sin(0.5 * apex_angle),
    }
    if abs(apex_angle - math.pi / 3.0) <= 1e-12:
        expected["mu"] = TRIANGLE_KLC_MU
    return NamedShape(
        name=f"isosceles_{apex_angle:.6f}",
        figure=fig,
        reference_circle=REFERENCE_CIRCLE,
        expected=expected,
    )


def exterior_crescent(tol: Tolerance = DEFAULT_TOL) -> NamedShape:
    """Closure of the mixed triangle minus the reference disc.

    Bounded below by the upper semicircle of the reference circle (a concave
    edge of the figure, hence traversed clockwise) and above by the two unit
    arcs through C; touches the circle at K and L.
    """
    fig = figure(
        [
            arc(K, L, REFERENCE_CIRCLE.center, REFERENCE_CIRCLE.radius, "cw"),
            arc(L, C, K, 1.0),
            arc(C, K, L, 1.0),
        ],
        tol,
    )
    return NamedShape(
        name="exterior_crescent",
        figure=fig,
        reference_circle=REFERENCE_CIRCLE,
        expected={
            "area": MIXED_TRIANGLE_EXTERIOR,  # 0.22148576760565427
            "perimeter": 0.5 * math.pi + 2.0 * math.pi / 3.0,
            "diameter": 1.0,
            "mu": 1.0,  # all of it lies outside the circle
        },
    )


class DegenerateProfileError(ValueError):
    """Radial profile does not describe a usable figure."""


def radial_figure(profile: RadialProfile, tol: Tolerance = DEFAULT_TOL) -> NamedShape:
    """Polygon through (rho(theta) cos(theta), rho(theta) sin(theta)).

    The origin is a boundary point; rho may vanish at the ends of the range.
    """
    pts = [Point(0.0, 0.0)]
    for t, r in zip(profile.theta, profile.rho):
        p = Point(r * math.cos(t), r * math.sin(t))
        if math.hypot(p.x - pts[-1].x, p.y - pts[-1].y) > tol.geom_eps:
            pts.append(p)
    if len(pts) > 1 and math.hypot(pts[-1].x, pts[-1].y) <= tol.geom_eps:
        pts.pop()
    if len(pts) < 3:
        raise DegenerateProfileError("profile collapses to fewer than three distinct points")
    try:
        fig = figure([segment(a, b) for a, b in zip(pts, pts[1:] + pts[:1])], tol)
    except Exception as exc:
        raise DegenerateProfileError(f"profile does not bound a valid figure: {exc}") from exc
    return NamedShape(name="radial_figure", figure=fig, reference_circle=None, expected={})


def library(tol: Tolerance = DEFAULT_TOL) -> list[NamedShape]:
    """Every parameterless library shape plus the equilateral isosceles case."""
    return [
        unit_circle(tol),
        mixed_triangle(tol),
        lens(tol),
        reuleaux(tol),
        exterior_crescent(tol),
        isosceles(math.pi / 3.0, tol),
    ]


# Shapes that share the diameter KL with the reference circle, i.e. have
# diameter 1 attained at K and L.  The lens (diameter |CD| > 1) does not.
SHARES_KL = ("unit_circle", "mixed_triangle", "reuleaux", "exterior_crescent", "isosceles")

_REGISTRY = {
    "unit_circle": unit_circle,
    "mixed_triangle": mixed_triangle,
    "lens": lens,
    "reuleaux": reuleaux,
    "exterior_crescent": exterior_crescent,
}


def shape_names() -> list[str]:
    return sorted(_REGISTRY) + ["isosceles"]


def get_shape(name: str, tol: Tolerance = DEFAULT_TOL) -> NamedShape:
    """Look up a shape by name; "isosceles" takes an optional ":<apex>" suffix."""
    if name in _REGISTRY:
        return _REGISTRY[name](tol)
    if name == "isosceles":
        return isosceles(math.pi / 3.0, tol)
    if name.startswith("isosceles:"):
        return isosceles(float(name.split(":", 1)[1]), tol)
    raise KeyError(f"unknown shape {name!r}; known: {', '.join(shape_names())}")

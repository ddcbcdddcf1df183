"""Figure-vs-disc measurements: intersection area, exterior area, and the
exterior fraction mu = area outside the circle / total area.

The intersection uses a per-edge accumulation: each boundary piece
contributes the signed area of the pie region (center, piece, center)
clipped to the disc.  Segments are handled exactly; arcs concentric with the
clip circle lie on its boundary and contribute exact sectors; other arcs are
flattened to chords at arc_max_sagitta first, so the reported error bound is
perimeter * sagitta.  For edges that stay outside the disc the sector terms
telescope, which makes the headline identities come out near-exact anyway.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .geometry import (
    Circle,
    DEFAULT_TOL,
    DegenerateFigureError,
    Figure,
    Tolerance,
    _arc_angles,
    _edge_samples,
    _require_closed,
    area,
    diameter,
    perimeter,
)

QUARTER_PI = 0.25 * math.pi


@dataclass(frozen=True)
class MuReport:
    """Exterior-fraction measurement of a figure against a reference circle."""

    total_area: float
    interior_area: float
    exterior_area: float
    mu: float
    method: str  # "analytic" when no arc had to be flattened, else "clipped"
    est_error: float

    def to_dict(self) -> dict:
        return {
            "total_area": self.total_area,
            "interior_area": self.interior_area,
            "exterior_area": self.exterior_area,
            "mu": self.mu,
            "method": self.method,
            "est_error": self.est_error,
        }


def _segment_clip_term(ax: float, ay: float, bx: float, by: float, r: float) -> float:
    """Signed area of triangle(origin, A, B) clipped to the disc of radius r
    centered at the origin."""
    dx, dy = bx - ax, by - ay
    a = dx * dx + dy * dy
    if a == 0.0:
        return 0.0
    b = 2.0 * (ax * dx + ay * dy)
    c = ax * ax + ay * ay - r * r
    ts = [0.0, 1.0]
    disc = b * b - 4.0 * a * c
    if disc > 0.0:
        q = -0.5 * (b + math.copysign(math.sqrt(disc), b))
        for t in (q / a, c / q if q != 0.0 else math.inf):
            if 1e-12 < t < 1.0 - 1e-12:
                ts.append(t)
    ts.sort()
    total = 0.0
    for t0, t1 in zip(ts, ts[1:]):
        if t1 - t0 <= 0.0:
            continue
        px, py = ax + t0 * dx, ay + t0 * dy
        qx, qy = ax + t1 * dx, ay + t1 * dy
        tm = 0.5 * (t0 + t1)
        mx, my = ax + tm * dx, ay + tm * dy
        if mx * mx + my * my <= r * r:
            total += 0.5 * (px * qy - qx * py)
        else:
            total += 0.5 * r * r * math.atan2(px * qy - qx * py, px * qx + py * qy)
    return total


def _concentric(e, c: Circle, tol: Tolerance) -> bool:
    eps = max(tol.geom_eps, 1e-12 * c.radius)
    return (
        math.hypot(e.center.x - c.center.x, e.center.y - c.center.y) <= eps
        and abs(e.radius - c.radius) <= eps
    )


def _intersection_raw(f: Figure, c: Circle, tol: Tolerance, max_sagitta: float) -> tuple[float, bool]:
    """(signed intersection area, whether any arc was flattened)."""
    ox, oy, r = c.center.x, c.center.y, c.radius
    total = 0.0
    clipped = False
    for e in f.edges:
        if e.kind == "arc" and _concentric(e, c, tol):
            total += 0.5 * r * r * _arc_angles(e)[1]  # exact sector on the clip boundary
            continue
        if e.kind == "segment":
            total += _segment_clip_term(e.start.x - ox, e.start.y - oy, e.end.x - ox, e.end.y - oy, r)
            continue
        clipped = True
        pts = [p for p, _t in _edge_samples(e, max_sagitta)]
        for a, b in zip(pts, pts[1:]):
            total += _segment_clip_term(a.x - ox, a.y - oy, b.x - ox, b.y - oy, r)
    return total, clipped


def disc_intersection_area(
    f: Figure,
    c: Circle,
    tol: Tolerance = DEFAULT_TOL,
    max_sagitta: float | None = None,
) -> float:
    """Area of the figure's intersection with the closed disc."""
    _require_closed(f)
    s = tol.arc_max_sagitta if max_sagitta is None else max_sagitta
    raw, _clipped = _intersection_raw(f, c, tol, s)
    return min(max(raw, 0.0), area(f))


def exterior_area(
    f: Figure,
    c: Circle,
    tol: Tolerance = DEFAULT_TOL,
    max_sagitta: float | None = None,
) -> float:
    """Area of the figure lying outside the disc, never negative."""
    return mu(f, c, tol, max_sagitta).exterior_area


def mu(
    f: Figure,
    c: Circle,
    tol: Tolerance = DEFAULT_TOL,
    max_sagitta: float | None = None,
) -> MuReport:
    """Full exterior-fraction report for a positive-area figure."""
    _require_closed(f)
    total = area(f)
    if total <= tol.geom_eps:
        raise DegenerateFigureError("mu is undefined for a zero-area figure")
    s = tol.arc_max_sagitta if max_sagitta is None else max_sagitta
    raw, clipped = _intersection_raw(f, c, tol, s)
    est = perimeter(f) * s if clipped else 1e-14 * max(1.0, total)
    if raw < -est or raw > total + est:
        raise ArithmeticError(
            f"intersection {raw!r} outside [0, area={total!r}] by more than est_error; inconsistent clip"
        )
    interior = min(max(raw, 0.0), total)
    # Snap values that are indistinguishable from the range endpoints so the
    # all-outside and all-inside cases report mu exactly 1 or 0.
    snap = max(est, 1e-12 * max(1.0, total))
    if interior <= snap:
        interior = 0.0
    elif total - interior <= snap:
        interior = total
    ext = total - interior
    return MuReport(
        total_area=total,
        interior_area=interior,
        exterior_area=ext,
        mu=ext / total,
        method="clipped" if clipped else "analytic",
        est_error=est,
    )


@dataclass(frozen=True)
class LittlewoodCheck:
    """Outcome of the diameter-vs-area bound for one figure."""

    status: str  # "ok" | "violated" | "not_applicable"
    area: float
    bound: float
    diameter: float

    @property
    def ok(self) -> bool:
        return self.status == "ok"


def littlewood_check(f: Figure, tol: Tolerance = DEFAULT_TOL) -> LittlewoodCheck:
    """If the figure's diameter is at most 1, assert area <= pi/4 + area_tol.

    Figures with diameter > 1 are outside the bound's hypothesis and are
    reported not_applicable.
    """
    _require_closed(f)
    d = diameter(f, tol)
    a = area(f)
    if d > 1.0 + tol.geom_eps:
        return LittlewoodCheck("not_applicable", a, QUARTER_PI, d)
    status = "ok" if a <= QUARTER_PI + tol.area_tol else "violated"
    return LittlewoodCheck(status, a, QUARTER_PI, d)

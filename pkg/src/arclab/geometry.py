"""Plane-geometry kernel for figures bounded by line segments and circular arcs.

A Figure is a closed, simple, positively oriented boundary stored as an
ordered list of edges.  Areas and perimeters are computed in closed form
(polygon shoelace over the edge chords plus a signed circular-segment term
per arc), so figures built from exact arcs reproduce textbook identities to
near machine precision.  Diameter uses exact extremal candidates on arcs
with a discretized safety net, and point containment uses crossing parity
on y-monotone boundary pieces so arcs never have to be approximated.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Literal, NamedTuple, Sequence

TWO_PI = 2.0 * math.pi

# Angular slack used when deciding whether an angle lies on an arc's span.
_ANGLE_EPS = 1e-9


class InvalidFigureError(ValueError):
    """The boundary violates a structural invariant (open, self-crossing, degenerate)."""


class DegenerateFigureError(ValueError):
    """The figure has no usable area for the requested operation."""


class Point(NamedTuple):
    x: float
    y: float


def dist(a: Point, b: Point) -> float:
    return math.hypot(a.x - b.x, a.y - b.y)


def _orient(a: Point, b: Point, c: Point) -> float:
    """Twice the signed area of triangle abc (positive for a left turn)."""
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)


@dataclass(frozen=True)
class Tolerance:
    """Numerical tolerances threaded through every kernel operation.

    geom_eps is a length, area_tol an area, arc_max_sagitta the largest
    chord-to-arc deviation allowed when an arc must be flattened.
    """

    geom_eps: float = 1e-12
    area_tol: float = 1e-9
    arc_max_sagitta: float = 1e-9

    def __post_init__(self) -> None:
        for name in ("geom_eps", "area_tol", "arc_max_sagitta"):
            if not (getattr(self, name) > 0.0) or not math.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be a finite positive number")


DEFAULT_TOL = Tolerance()


@dataclass(frozen=True)
class Circle:
    center: Point
    radius: float

    def __post_init__(self) -> None:
        if not math.isfinite(self.radius) or self.radius <= 0.0:
            raise ValueError("circle radius must be finite and positive")
        if not (math.isfinite(self.center.x) and math.isfinite(self.center.y)):
            raise ValueError("circle center must be finite")


@dataclass(frozen=True)
class Edge:
    """One boundary piece: a straight segment or a circular arc.

    Arcs are traversed from start to end around center in the given
    orientation; a full circle is a single arc with start == end and
    full_turn set.
    """

    kind: Literal["segment", "arc"]
    start: Point
    end: Point
    center: Point | None = None
    radius: float | None = None
    orientation: Literal["ccw", "cw"] | None = None
    full_turn: bool = False


def _require_finite(p: Point) -> Point:
    if not (math.isfinite(p.x) and math.isfinite(p.y)):
        raise ValueError(f"non-finite point {p}")
    return p


def segment(start: Sequence[float], end: Sequence[float]) -> Edge:
    a = _require_finite(Point(*start))
    b = _require_finite(Point(*end))
    return Edge("segment", a, b)


def arc(
    start: Sequence[float],
    end: Sequence[float],
    center: Sequence[float],
    radius: float | None = None,
    orientation: Literal["ccw", "cw"] = "ccw",
    full_turn: bool = False,
) -> Edge:
    a = _require_finite(Point(*start))
    b = _require_finite(Point(*end))
    c = _require_finite(Point(*center))
    ra = dist(a, c)
    rb = dist(b, c)
    r = float(radius) if radius is not None else 0.5 * (ra + rb)
    if not math.isfinite(r) or r <= 0.0:
        raise ValueError("arc radius must be finite and positive")
    tol = 1e-12 * max(r, 1.0)
    if abs(ra - r) > tol or abs(rb - r) > tol:
        raise ValueError(
            f"arc endpoints must lie on the circle: |start-center|={ra!r}, "
            f"|end-center|={rb!r}, radius={r!r}"
        )
    if orientation not in ("ccw", "cw"):
        raise ValueError(f"unknown arc orientation {orientation!r}")
    if full_turn and dist(a, b) > tol:
        raise ValueError("full-turn arc must have start == end")
    return Edge("arc", a, b, c, r, orientation, full_turn)


def _edge_reversed(e: Edge) -> Edge:
    if e.kind == "segment":
        return Edge("segment", e.end, e.start)
    flipped = "cw" if e.orientation == "ccw" else "ccw"
    return Edge("arc", e.end, e.start, e.center, e.radius, flipped, e.full_turn)


def _arc_angles(e: Edge) -> tuple[float, float]:
    """Start angle and signed sweep (positive ccw) of an arc edge."""
    a0 = math.atan2(e.start.y - e.center.y, e.start.x - e.center.x)
    if e.full_turn:
        return a0, TWO_PI if e.orientation == "ccw" else -TWO_PI
    a1 = math.atan2(e.end.y - e.center.y, e.end.x - e.center.x)
    if e.orientation == "ccw":
        return a0, (a1 - a0) % TWO_PI
    return a0, -((a0 - a1) % TWO_PI)


def _arc_point(e: Edge, ang: float) -> Point:
    return Point(e.center.x + e.radius * math.cos(ang), e.center.y + e.radius * math.sin(ang))


def _angle_on_arc(e: Edge, ang: float) -> bool:
    """Whether the absolute angle falls inside the arc's swept span."""
    if e.full_turn:
        return True
    a0, sw = _arc_angles(e)
    if sw >= 0.0:
        return (ang - a0) % TWO_PI <= sw + _ANGLE_EPS
    return (a0 - ang) % TWO_PI <= -sw + _ANGLE_EPS


def _tangent(e: Edge, at_start: bool) -> tuple[float, float]:
    """Unit tangent in the direction of travel at an edge endpoint."""
    if e.kind == "segment":
        dx, dy = e.end.x - e.start.x, e.end.y - e.start.y
    else:
        p = e.start if at_start else e.end
        rx, ry = p.x - e.center.x, p.y - e.center.y
        dx, dy = (-ry, rx) if e.orientation == "ccw" else (ry, -rx)
    n = math.hypot(dx, dy)
    return dx / n, dy / n


def _max_chord_angle(radius: float, max_sagitta: float) -> float:
    """Largest arc angle a single chord may subtend at the given sagitta."""
    if max_sagitta >= 2.0 * radius:
        return 0.5 * math.pi
    return max(2.0 * math.acos(max(-1.0, 1.0 - max_sagitta / radius)), 1e-7)


def _edge_samples(e: Edge, max_sagitta: float) -> list[tuple[Point, float]]:
    """Boundary points along the edge with their edge parameters in [0, 1]."""
    if e.kind == "segment":
        return [(e.start, 0.0), (e.end, 1.0)]
    a0, sw = _arc_angles(e)
    n = max(1, math.ceil(abs(sw) / _max_chord_angle(e.radius, max_sagitta)))
    if abs(sw) > math.pi:
        n = max(n, 4)
    out: list[tuple[Point, float]] = [(e.start, 0.0)]
    for k in range(1, n):
        t = k / n
        out.append((_arc_point(e, a0 + sw * t), t))
    out.append((e.start if e.full_turn else e.end, 1.0))
    return out


@dataclass(frozen=True)
class Figure:
    """Closed, simple, positively oriented boundary. Build via figure()."""

    edges: tuple[Edge, ...]

    @property
    def vertices(self) -> tuple[Point, ...]:
        return tuple(e.start for e in self.edges)


# ---------------------------------------------------------------------------
# construction and validation


def _collinear_segments(a: Edge, b: Edge) -> bool:
    """Genuinely collinear consecutive segments (turn below fp noise), same heading."""
    if a.kind != "segment" or b.kind != "segment":
        return False
    turn_area = abs(_orient(a.start, a.end, b.end))
    la, lb = dist(a.start, a.end), dist(b.start, b.end)
    if turn_area > 1e-14 * la * lb:
        return False
    forward = (a.end.x - a.start.x) * (b.end.x - b.start.x) + (a.end.y - a.start.y) * (b.end.y - b.start.y)
    return forward > 0.0


def _merge_collinear(edges: list[Edge]) -> list[Edge]:
    out: list[Edge] = []
    for e in edges:
        if out and _collinear_segments(out[-1], e):
            out[-1] = Edge("segment", out[-1].start, e.end)
        else:
            out.append(e)
    if len(out) > 2 and _collinear_segments(out[-1], out[0]):
        out[0] = Edge("segment", out[-1].start, out[0].end)
        out.pop()
    return out


def _signed_area(edges: Sequence[Edge]) -> float:
    """Shoelace over edge chords plus signed circular-segment terms for arcs."""
    total = 0.0
    for e in edges:
        total += 0.5 * (e.start.x * e.end.y - e.end.x * e.start.y)
        if e.kind == "arc":
            sw = _arc_angles(e)[1]
            total += 0.5 * e.radius * e.radius * (sw - math.sin(sw))
    return total


def _polyline(edges: Sequence[Edge], max_sagitta: float) -> list[Point]:
    pts: list[Point] = []
    for e in edges:
        for p, _t in _edge_samples(e, max_sagitta)[:-1]:
            pts.append(p)
    return pts


def _segments_cross(p1: Point, p2: Point, p3: Point, p4: Point, eps: float) -> bool:
    d1 = _orient(p3, p4, p1)
    d2 = _orient(p3, p4, p2)
    d3 = _orient(p1, p2, p3)
    d4 = _orient(p1, p2, p4)
    return ((d1 > eps and d2 < -eps) or (d1 < -eps and d2 > eps)) and (
        (d3 > eps and d4 < -eps) or (d3 < -eps and d4 > eps)
    )


def _polyline_simple(pts: list[Point], eps: float) -> bool:
    m = len(pts)
    if m > 1200:  # validation net only; subsampling keeps the check O(1200^2)
        step = m / 1200.0
        pts = [pts[int(i * step)] for i in range(1200)]
        m = len(pts)
    for i in range(m):
        a, b = pts[i], pts[(i + 1) % m]
        for j in range(i + 1, m):
            if j == i or (j + 1) % m == i or (i + 1) % m == j:
                continue
            c, d = pts[j], pts[(j + 1) % m]
            if _segments_cross(a, b, c, d, eps):
                return False
    return True


def figure(edges: Iterable[Edge], tol: Tolerance = DEFAULT_TOL, validate: bool = True) -> Figure:
    """Assemble and validate a Figure from an edge cycle.

    Negatively oriented input is reversed rather than rejected; zero-length
    edges are rejected; consecutive collinear segments are merged.
    """
    es = list(edges)
    if not es:
        raise InvalidFigureError("figure needs at least one edge")
    for e in es:
        if e.kind not in ("segment", "arc"):
            raise InvalidFigureError(f"unknown edge kind {e.kind!r}")
        if not e.full_turn and dist(e.start, e.end) <= tol.geom_eps:
            raise InvalidFigureError(f"zero-length edge at {e.start}")
    for i, e in enumerate(es):
        nxt = es[(i + 1) % len(es)]
        if dist(e.end, nxt.start) > 1e-12:
            raise InvalidFigureError(
                f"boundary not closed between edge {i} end {e.end} and edge {(i + 1) % len(es)} start {nxt.start}"
            )
    area2 = _signed_area(es)
    if abs(area2) <= tol.geom_eps:
        raise InvalidFigureError("figure has zero area")
    if area2 < 0.0:
        es = [_edge_reversed(e) for e in reversed(es)]
    es = _merge_collinear(es)
    fig = Figure(tuple(es))
    if validate:
        pts = _polyline(es, max(1e-3, tol.arc_max_sagitta))
        span = max(
            max(p.x for p in pts) - min(p.x for p in pts),
            max(p.y for p in pts) - min(p.y for p in pts),
        )
        if not _polyline_simple(pts, 1e-15 * max(span, 1.0) ** 2):
            raise InvalidFigureError("boundary is self-intersecting")
    return fig


def circle_figure(c: Circle, tol: Tolerance = DEFAULT_TOL) -> Figure:
    """The full disc boundary as a single counterclockwise full-turn arc."""
    start = Point(c.center.x + c.radius, c.center.y)
    return figure([arc(start, start, c.center, c.radius, "ccw", full_turn=True)], tol, validate=False)


def _require_closed(f: Figure) -> None:
    if not f.edges:
        raise InvalidFigureError("empty figure")
    for i, e in enumerate(f.edges):
        nxt = f.edges[(i + 1) % len(f.edges)]
        if dist(e.end, nxt.start) > 1e-12:
            raise InvalidFigureError("boundary not closed")


# ---------------------------------------------------------------------------
# scalar measurements


def area(f: Figure) -> float:
    """Enclosed area, exact for segment/arc boundaries."""
    _require_closed(f)
    a = _signed_area(f.edges)
    if a <= 0.0:
        raise InvalidFigureError("figure is not positively oriented")
    return a


def perimeter(f: Figure) -> float:
    """Total boundary length: segment lengths plus radius times swept angle."""
    _require_closed(f)
    total = 0.0
    for e in f.edges:
        if e.kind == "segment":
            total += dist(e.start, e.end)
        else:
            total += e.radius * abs(_arc_angles(e)[1])
    return total


def _hull_of_points(pts: list[Point]) -> list[Point]:
    """Counterclockwise convex hull (Andrew's monotone chain, strict turns)."""
    uniq = sorted(set(pts))
    if len(uniq) <= 2:
        return uniq
    lower: list[Point] = []
    for p in uniq:
        while len(lower) >= 2 and _orient(lower[-2], lower[-1], p) <= 0.0:
            lower.pop()
        lower.append(p)
    upper: list[Point] = []
    for p in reversed(uniq):
        while len(upper) >= 2 and _orient(upper[-2], upper[-1], p) <= 0.0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def _calipers_max_dist(hull: list[Point]) -> float:
    """Maximum pairwise distance over a convex polygon via rotating calipers."""
    n = len(hull)
    if n == 1:
        return 0.0
    if n == 2:
        return dist(hull[0], hull[1])
    best = 0.0
    j = 1
    for i in range(n):
        nxt = hull[(i + 1) % n]
        while True:
            jn = (j + 1) % n
            cur = _orient(hull[i], nxt, hull[j])
            step = _orient(hull[i], nxt, hull[jn])
            if step > cur:
                j = jn
            else:
                break
        best = max(best, dist(hull[i], hull[j]), dist(nxt, hull[j]))
    return best


def diameter(f: Figure, tol: Tolerance = DEFAULT_TOL) -> float:
    """Supremum of pairwise boundary distances.

    Exact for segment/arc boundaries: besides vertex pairs it enumerates arc
    extremal candidates (far point of each arc from each vertex, center-line
    points between arc pairs, antipodal pairs on arcs sweeping >= pi), and
    keeps a coarse discretized rotating-calipers pass as a safety net.
    """
    _require_closed(f)
    samples = _polyline(list(f.edges), 1e-4)
    best = _calipers_max_dist(_hull_of_points(samples))

    verts: list[Point] = []
    for e in f.edges:
        verts.append(e.start)
        verts.append(e.end)
    verts = list(set(verts))
    arcs = [e for e in f.edges if e.kind == "arc"]

    for a_edge in arcs:
        a0, sw = _arc_angles(a_edge)
        if abs(sw) >= math.pi - 1e-12:
            best = max(best, 2.0 * a_edge.radius)
        for v in verts:
            d = dist(v, a_edge.center)
            if d <= tol.geom_eps:
                continue
            ang = math.atan2(a_edge.center.y - v.y, a_edge.center.x - v.x)
            if _angle_on_arc(a_edge, ang):
                best = max(best, d + a_edge.radius)
    for i in range(len(arcs)):
        for j in range(i + 1, len(arcs)):
            e1, e2 = arcs[i], arcs[j]
            d = dist(e1.center, e2.center)
            if d <= tol.geom_eps:
                continue  # concentric pair: covered by the discretized net
            ang1 = math.atan2(e1.center.y - e2.center.y, e1.center.x - e2.center.x)
            ang2 = math.atan2(e2.center.y - e1.center.y, e2.center.x - e1.center.x)
            if _angle_on_arc(e1, ang1) and _angle_on_arc(e2, ang2):
                best = max(best, d + e1.radius + e2.radius)
    return best


def is_convex(f: Figure, tol: Tolerance = DEFAULT_TOL) -> bool:
    """True iff all junction turns are left/straight, every arc bulges outward,
    and the tangent direction makes exactly one full turn."""
    _require_closed(f)
    total = 0.0
    n = len(f.edges)
    for i, e in enumerate(f.edges):
        if e.kind == "arc":
            sw = _arc_angles(e)[1]
            if sw < 0.0:
                return False  # inward-bulging arc in a ccw boundary
            total += sw
        tin = _tangent(e, at_start=False)
        tout = _tangent(f.edges[(i + 1) % n], at_start=True)
        turn = math.atan2(tin[0] * tout[1] - tin[1] * tout[0], tin[0] * tout[0] + tin[1] * tout[1])
        if turn < -_ANGLE_EPS:
            return False
        total += turn
    return abs(total - TWO_PI) <= 1e-6


# ---------------------------------------------------------------------------
# containment via y-monotone boundary pieces

_SEG_PIECE = 0
_ARC_PIECE = 1


@lru_cache(maxsize=256)
def _monotone_pieces(f: Figure) -> tuple[tuple, ...]:
    """Boundary decomposed into y-monotone pieces.

    Segments: (SEG, x1, y1, x2, y2).  Arc pieces never cross the circle's
    top/bottom, so each lies in one x half-plane: (ARC, cx, cy, r, ya, yb, side).
    """
    pieces: list[tuple] = []
    for e in f.edges:
        if e.kind == "segment":
            if e.start.y != e.end.y:
                pieces.append((_SEG_PIECE, e.start.x, e.start.y, e.end.x, e.end.y))
            continue
        a0, sw = _arc_angles(e)
        breaks = [0.0, 1.0]
        for extreme in (0.5 * math.pi, 1.5 * math.pi):
            if abs(sw) < 1e-15:
                continue
            # parameters where the arc passes the circle top/bottom
            base = (extreme - a0) % TWO_PI if sw > 0 else (a0 - extreme) % TWO_PI
            t = base / abs(sw)
            while t < 1.0 - 1e-12:
                if t > 1e-12:
                    breaks.append(t)
                t += TWO_PI / abs(sw)
        breaks.sort()
        for t0, t1 in zip(breaks, breaks[1:]):
            if t1 - t0 <= 1e-12:
                continue
            ang0, ang1 = a0 + sw * t0, a0 + sw * t1
            ya = e.center.y + e.radius * math.sin(ang0)
            yb = e.center.y + e.radius * math.sin(ang1)
            side = 1.0 if math.cos(a0 + sw * 0.5 * (t0 + t1)) > 0.0 else -1.0
            if ya != yb:
                pieces.append((_ARC_PIECE, e.center.x, e.center.y, e.radius, ya, yb, side))
    return tuple(pieces)


def _crossings_odd(f: Figure, p: Point) -> bool:
    inside = False
    for piece in _monotone_pieces(f):
        if piece[0] == _SEG_PIECE:
            _, x1, y1, x2, y2 = piece
            ylo, yhi = (y1, y2) if y1 < y2 else (y2, y1)
            if not (ylo <= p.y < yhi):
                continue
            xat = x1 + (p.y - y1) * (x2 - x1) / (y2 - y1)
        else:
            _, cx, cy, r, ya, yb, side = piece
            ylo, yhi = (ya, yb) if ya < yb else (yb, ya)
            if not (ylo <= p.y < yhi):
                continue
            xat = cx + side * math.sqrt(max(0.0, r * r - (p.y - cy) ** 2))
        if xat > p.x:
            inside = not inside
    return inside


def _point_edge_distance(p: Point, e: Edge) -> float:
    if e.kind == "segment":
        vx, vy = e.end.x - e.start.x, e.end.y - e.start.y
        wx, wy = p.x - e.start.x, p.y - e.start.y
        L2 = vx * vx + vy * vy
        t = 0.0 if L2 == 0.0 else max(0.0, min(1.0, (wx * vx + wy * vy) / L2))
        return math.hypot(wx - t * vx, wy - t * vy)
    d = dist(p, e.center)
    if d <= 1e-300:
        return e.radius
    ang = math.atan2(p.y - e.center.y, p.x - e.center.x)
    if _angle_on_arc(e, ang):
        return abs(d - e.radius)
    return min(dist(p, e.start), dist(p, e.end))


def contains(f: Figure, p: Point | Sequence[float], tol: Tolerance = DEFAULT_TOL) -> str:
    """Classify a point as "inside", "boundary" or "outside"."""
    _require_closed(f)
    pt = Point(*p)
    for e in f.edges:
        if _point_edge_distance(pt, e) <= tol.geom_eps:
            return "boundary"
    return "inside" if _crossings_odd(f, pt) else "outside"


# ---------------------------------------------------------------------------
# discretization, bounding box, convex hull


def discretize(f: Figure, max_sagitta: float, tol: Tolerance = DEFAULT_TOL) -> Figure:
    """Replace every arc by a chord chain whose sagitta is at most max_sagitta.

    Segment edges pass through unchanged; the vertex count of the result is
    len(result.edges).
    """
    if not (max_sagitta > 0.0):
        raise ValueError("max_sagitta must be positive")
    _require_closed(f)
    edges: list[Edge] = []
    for e in f.edges:
        if e.kind == "segment":
            edges.append(e)
            continue
        pts = [p for p, _t in _edge_samples(e, max_sagitta)]
        for a, b in zip(pts, pts[1:]):
            edges.append(Edge("segment", a, b))
    return figure(edges, tol, validate=False)


def bounding_box(f: Figure) -> tuple[Point, Point]:
    """Tight axis-aligned bounding box (arc extremes handled exactly)."""
    _require_closed(f)
    xs: list[float] = []
    ys: list[float] = []
    for e in f.edges:
        xs.extend((e.start.x, e.end.x))
        ys.extend((e.start.y, e.end.y))
        if e.kind == "arc":
            for k, ang in enumerate((0.0, 0.5 * math.pi, math.pi, 1.5 * math.pi)):
                if _angle_on_arc(e, ang):
                    p = _arc_point(e, ang)
                    xs.append(p.x)
                    ys.append(p.y)
    return Point(min(xs), min(ys)), Point(max(xs), max(ys))


def convex_hull(f: Figure, tol: Tolerance = DEFAULT_TOL, max_sagitta: float = 1e-6) -> Figure:
    """Convex hull as a Figure.

    Convex input is returned unchanged.  Otherwise the hull of the sampled
    boundary is rebuilt, restoring each original outward arc wherever a run
    of its samples survives on the hull, so arc geometry on the hull stays
    exact; bridge segments connect the runs.
    """
    _require_closed(f)
    if is_convex(f, tol):
        return f

    tags: dict[Point, list[tuple[int, float]]] = {}
    pts: list[Point] = []
    steps: dict[int, float] = {}
    for idx, e in enumerate(f.edges):
        samples = _edge_samples(e, max_sagitta)
        steps[idx] = 1.0 / (len(samples) - 1)
        for p, t in samples:
            if p not in tags:
                tags[p] = []
                pts.append(p)
            tags[p].append((idx, t))
    hull = _hull_of_points(pts)
    if len(hull) < 3:
        raise DegenerateFigureError("hull collapsed to fewer than three points")

    n = len(hull)

    def _common_arc(i: int) -> int | None:
        """Outward arc continuing from hull[i] to hull[i+1] across adjacent samples."""
        a, b = hull[i], hull[(i + 1) % n]
        for idx, ta in tags[a]:
            e = f.edges[idx]
            if e.kind != "arc" or _arc_angles(e)[1] <= 0.0:
                continue
            for jdx, tb in tags[b]:
                if jdx == idx and 0.5 * steps[idx] < tb - ta < 1.5 * steps[idx]:
                    return idx
        return None

    start = next((i for i in range(n) if _common_arc((i - 1) % n) is None), None)
    if start is None:  # hull is one closed arc run: a full circle
        e = f.edges[_common_arc(0)]
        return figure([arc(hull[0], hull[0], e.center, e.radius, "ccw", full_turn=True)], tol)

    order = [hull[(start + k) % n] for k in range(n)]
    edges: list[Edge] = []
    i = 0
    while i < n:
        a = order[i]
        b = order[(i + 1) % n]
        idx = _common_arc((start + i) % n)
        if idx is None:
            edges.append(Edge("segment", a, b))
            i += 1
            continue
        j = i
        while j < n and _common_arc((start + j) % n) == idx:
            j += 1
        e = f.edges[idx]
        edges.append(arc(order[i], order[j % n], e.center, e.radius, "ccw"))
        i = j
    return figure(edges, tol)


# ---------------------------------------------------------------------------
# JSON wire format


def figure_to_json(f: Figure, indent: int | None = None) -> str:
    """Serialize to the edge-list JSON schema (floats lossless via repr)."""
    out = []
    for e in f.edges:
        if e.kind == "segment":
            out.append({"kind": "segment", "start": [e.start.x, e.start.y], "end": [e.end.x, e.end.y]})
        else:
            out.append(
                {
                    "kind": "arc",
                    "start": [e.start.x, e.start.y],
                    "end": [e.end.x, e.end.y],
                    "center": [e.center.x, e.center.y],
                    "radius": e.radius,
                    "orientation": e.orientation,
                    "full_turn": e.full_turn,
                }
            )
    return json.dumps({"edges": out}, indent=indent)


def figure_from_json(text: str, tol: Tolerance = DEFAULT_TOL) -> Figure:
    """Parse and validate a figure from its JSON wire format."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidFigureError(f"bad figure JSON: {exc}") from exc
    if not isinstance(doc, dict) or "edges" not in doc:
        raise InvalidFigureError('figure JSON must be an object with an "edges" list')
    edges: list[Edge] = []
    for entry in doc["edges"]:
        kind = entry.get("kind")
        if kind == "segment":
            edges.append(segment(entry["start"], entry["end"]))
        elif kind == "arc":
            edges.append(
                arc(
                    entry["start"],
                    entry["end"],
                    entry["center"],
                    entry.get("radius"),
                    entry.get("orientation", "ccw"),
                    bool(entry.get("full_turn", False)),
                )
            )
        else:
            raise InvalidFigureError(f"unknown edge kind {kind!r}")
    return figure(edges, tol)

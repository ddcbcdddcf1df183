"""Shared fuzz generators for the test suite."""

import math

import numpy as np

from arclab.geometry import Figure, Point, figure, segment
from arclab.geometry import _hull_of_points
from arclab.littlewood import RadialProfile, profile


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(key=np.array([seed, 0], dtype=np.uint64)))


def random_convex_polygon(rng: np.random.Generator, n_points: int = 12, diameter_cap: float = 1.0) -> Figure:
    """Convex hull of random points, rescaled so the diameter is <= diameter_cap."""
    while True:
        pts = rng.random((n_points, 2)) * 2.0 - 1.0
        hull = _hull_of_points([Point(float(x), float(y)) for x, y in pts])
        if len(hull) >= 3:
            break
    d = max(math.dist(a, b) for a in hull for b in hull)
    s = (diameter_cap - 1e-12) / d
    hull = [Point(p.x * s, p.y * s) for p in hull]
    return figure([segment(a, b) for a, b in zip(hull, hull[1:] + hull[:1])])


def random_convex_profile(rng: np.random.Generator, n_nodes: int = 64) -> RadialProfile:
    """Radial profile of a random convex polygon with diameter <= 1, origin on
    the boundary and the supporting line at the origin rotated onto the x-axis."""
    fig = random_convex_polygon(rng, n_points=10)
    verts = list(fig.vertices)
    base = min(range(len(verts)), key=lambda i: (verts[i].y, verts[i].x))
    o = verts[base]
    shifted = [(p.x - o.x, p.y - o.y) for p in verts[base:] + verts[:base]]
    # rotate so the first outgoing edge lies along theta = 0
    ax, ay = shifted[1]
    rot = -math.atan2(ay, ax)
    cr, sr = math.cos(rot), math.sin(rot)
    poly = [(x * cr - y * sr, x * sr + y * cr) for x, y in shifted]

    thetas = np.linspace(0.0, math.pi, n_nodes)
    rhos = []
    for t in thetas:
        dx, dy = math.cos(t), math.sin(t)
        best = 0.0
        for (x1, y1), (x2, y2) in zip(poly, poly[1:] + poly[:1]):
            ex, ey = x2 - x1, y2 - y1
            det = ex * dy - ey * dx  # solve s*(dx,dy) = P1 + u*(ex,ey)
            if abs(det) < 1e-15:
                continue
            s = (ex * y1 - ey * x1) / det
            u = (dx * y1 - dy * x1) / det
            if s > best and -1e-12 <= u <= 1.0 + 1e-12:
                best = s
        rhos.append(max(best, 0.0))
    rhos[-1] = 0.0
    return profile(thetas, rhos)

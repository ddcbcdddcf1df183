"""Stochastic search for the convex figure maximizing the exterior fraction.

Candidates are polygons: latent points plus the fixed diameter endpoints
K and L.  The derived figure is the convex chain over the points (upper
envelope above the axis, optionally a lower envelope below), so convexity
is enforced by construction; feasibility (every point within distance 1 of
both K and L) is enforced by projection onto the lens of the two unit
discs.  Hill climbing mutates one point per step with a decaying Gaussian
step and accepts only strict improvements of mu, which makes each restart's
history monotone and the whole run deterministic for a fixed seed.

The hot loop is numba-compiled; restarts draw independent streams seeded
seed + restart index and the best trace wins (ties to the lowest index).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numba import njit

from .geometry import (
    DEFAULT_TOL,
    Figure,
    Point,
    Tolerance,
    contains,
    diameter,
    figure,
    segment,
)
from .measures import mu as measure_mu
from .shapes import K, L, MU_MAX, REFERENCE_CIRCLE

_REF_R = 0.5  # reference circle: radius 1/2 centered at the origin
_Y_EPS = 1e-9  # points closer to the axis than this join no chain


class RepairRejected(ValueError):
    """Candidate cannot be repaired into a feasible figure."""


# ---------------------------------------------------------------------------
# numba kernels


@njit(cache=True)
def _project_lens(x: float, y: float) -> tuple[float, float]:
    """Nearest-feasible pull into the intersection of the two unit discs
    (alternating projections; snaps to the lens corner if they stall)."""
    for _ in range(16):
        moved = False
        dk = math.sqrt((x + 0.5) ** 2 + y * y)
        if dk > 1.0:
            x = -0.5 + (x + 0.5) / dk
            y = y / dk
            moved = True
        dl = math.sqrt((x - 0.5) ** 2 + y * y)
        if dl > 1.0:
            x = 0.5 + (x - 0.5) / dl
            y = y / dl
            moved = True
        if not moved:
            return x, y
    corner = 0.8660254037844386 if y >= 0.0 else -0.8660254037844386
    return 0.0, corner


@njit(cache=True)
def _build_chain(pts: np.ndarray, allow_lower: bool, vx: np.ndarray, vy: np.ndarray) -> int:
    """Write the ccw polygon cycle K -> lower chain -> L -> upper chain into
    vx/vy and return the vertex count (0 when no point survives)."""
    n = pts.shape[0]
    upper_idx = np.empty(n, np.int64)
    lower_idx = np.empty(n, np.int64)
    nu = 0
    nl = 0
    for i in range(n):
        if pts[i, 1] > _Y_EPS:
            upper_idx[nu] = i
            nu += 1
        elif allow_lower and pts[i, 1] < -_Y_EPS:
            lower_idx[nl] = i
            nl += 1
    if nu + nl == 0:
        return 0

    # upper envelope K..L (x ascending, right turns only)
    ux = np.empty(nu + 2, np.float64)
    uy = np.empty(nu + 2, np.float64)
    ux[0] = -0.5
    uy[0] = 0.0
    if nu > 0:
        xs = np.empty(nu, np.float64)
        for k in range(nu):
            xs[k] = pts[upper_idx[k], 0]
        order = np.argsort(xs)
        m = 1
        for k in range(nu):
            px = pts[upper_idx[order[k]], 0]
            py = pts[upper_idx[order[k]], 1]
            while m >= 2 and (ux[m - 1] - ux[m - 2]) * (py - uy[m - 2]) - (uy[m - 1] - uy[m - 2]) * (
                px - ux[m - 2]
            ) >= 0.0:
                m -= 1
            ux[m] = px
            uy[m] = py
            m += 1
        while m >= 2 and (ux[m - 1] - ux[m - 2]) * (0.0 - uy[m - 2]) - (uy[m - 1] - uy[m - 2]) * (
            0.5 - ux[m - 2]
        ) >= 0.0:
            m -= 1
        ux[m] = 0.5
        uy[m] = 0.0
        m += 1
        n_up = m
    else:
        ux[1] = 0.5
        uy[1] = 0.0
        n_up = 2

    # lower envelope K..L (x ascending, left turns only)
    lx = np.empty(nl + 2, np.float64)
    ly = np.empty(nl + 2, np.float64)
    lx[0] = -0.5
    ly[0] = 0.0
    if nl > 0:
        xs2 = np.empty(nl, np.float64)
        for k in range(nl):
            xs2[k] = pts[lower_idx[k], 0]
        order2 = np.argsort(xs2)
        m = 1
        for k in range(nl):
            px = pts[lower_idx[order2[k]], 0]
            py = pts[lower_idx[order2[k]], 1]
            while m >= 2 and (lx[m - 1] - lx[m - 2]) * (py - ly[m - 2]) - (ly[m - 1] - ly[m - 2]) * (
                px - lx[m - 2]
            ) <= 0.0:
                m -= 1
            lx[m] = px
            ly[m] = py
            m += 1
        while m >= 2 and (lx[m - 1] - lx[m - 2]) * (0.0 - ly[m - 2]) - (ly[m - 1] - ly[m - 2]) * (
            0.5 - lx[m - 2]
        ) <= 0.0:
            m -= 1
        lx[m] = 0.5
        ly[m] = 0.0
        m += 1
        n_lo = m
    else:
        lx[1] = 0.5
        ly[1] = 0.0
        n_lo = 2

    if n_up == 2 and n_lo == 2:
        return 0  # bare segment K-L

    # cycle: K, interior lower asc, L, interior upper desc
    out = 0
    for k in range(n_lo - 1):
        vx[out] = lx[k]
        vy[out] = ly[k]
        out += 1
    for k in range(n_up - 1, 0, -1):
        vx[out] = ux[k]
        vy[out] = uy[k]
        out += 1
    return out


@njit(cache=True)
def _poly_measures(vx: np.ndarray, vy: np.ndarray, m: int) -> tuple[float, float]:
    """(total area, area inside the reference disc) of the ccw polygon."""
    total = 0.0
    interior = 0.0
    r = _REF_R
    r2 = r * r
    for i in range(m):
        ax = vx[i]
        ay = vy[i]
        j = i + 1
        if j == m:
            j = 0
        bx = vx[j]
        by = vy[j]
        total += 0.5 * (ax * by - bx * ay)
        # clip triangle (origin, A, B) to the disc
        dx = bx - ax
        dy = by - ay
        qa = dx * dx + dy * dy
        if qa == 0.0:
            continue
        qb = 2.0 * (ax * dx + ay * dy)
        qc = ax * ax + ay * ay - r2
        t1 = 2.0
        t2 = 2.0
        disc = qb * qb - 4.0 * qa * qc
        if disc > 0.0:
            sq = math.sqrt(disc)
            if qb >= 0.0:
                qq = -0.5 * (qb + sq)
            else:
                qq = -0.5 * (qb - sq)
            ta = qq / qa
            tb = qc / qq if qq != 0.0 else 2.0
            if 1e-12 < ta < 1.0 - 1e-12:
                t1 = ta
            if 1e-12 < tb < 1.0 - 1e-12:
                t2 = tb
            if t2 < t1:
                t1, t2 = t2, t1
        tprev = 0.0
        for step in range(3):
            if step == 0:
                tnext = t1 if t1 < 1.0 else 1.0
            elif step == 1:
                tnext = t2 if t2 < 1.0 else 1.0
            else:
                tnext = 1.0
            if tnext > tprev:
                px = ax + tprev * dx
                py = ay + tprev * dy
                qx = ax + tnext * dx
                qy = ay + tnext * dy
                tm = 0.5 * (tprev + tnext)
                mx = ax + tm * dx
                my = ay + tm * dy
                if mx * mx + my * my <= r2:
                    interior += 0.5 * (px * qy - qx * py)
                else:
                    interior += 0.5 * r2 * math.atan2(px * qy - qx * py, px * qx + py * qy)
                tprev = tnext
            if tprev >= 1.0:
                break
    return total, interior


@njit(cache=True)
def _max_pairwise_sq(vx: np.ndarray, vy: np.ndarray, m: int) -> float:
    best = 0.0
    for i in range(m):
        for j in range(i + 1, m):
            d = (vx[i] - vx[j]) ** 2 + (vy[i] - vy[j]) ** 2
            if d > best:
                best = d
    return best


@njit(cache=True)
def _climb(
    n_points: int,
    iters: int,
    seed: int,
    sigma0: float,
    decay: float,
    allow_lower: bool,
    hist_it: np.ndarray,
    hist_mu: np.ndarray,
) -> tuple[float, np.ndarray, int, int, int, int]:
    np.random.seed(seed)
    pts = np.empty((n_points, 2), np.float64)
    for i in range(n_points):
        while True:
            x = np.random.uniform(-0.5, 0.5)
            y = np.random.uniform(0.0, 0.8660254)
            if (x + 0.5) ** 2 + y * y <= 1.0 and (x - 0.5) ** 2 + y * y <= 1.0:
                break
        if allow_lower and (i & 1) == 1:
            y = -y
        pts[i, 0] = x
        pts[i, 1] = y

    vx = np.empty(n_points + 2, np.float64)
    vy = np.empty(n_points + 2, np.float64)
    diam_limit = (1.0 + 1e-9) ** 2

    mu_cur = -1.0
    m = _build_chain(pts, allow_lower, vx, vy)
    if m >= 3 and (not allow_lower or _max_pairwise_sq(vx, vy, m) <= diam_limit):
        total, interior = _poly_measures(vx, vy, m)
        if total > 1e-15:
            ext = total - interior
            if ext < 0.0:
                ext = 0.0
            mu_cur = ext / total
    hcount = 0
    hist_it[hcount] = 0
    hist_mu[hcount] = mu_cur
    hcount += 1

    rej_degen = 0
    rej_diam = 0
    rej_noimp = 0
    for it in range(1, iters + 1):
        sigma = sigma0 * decay ** (100.0 * it / iters)
        j = np.random.randint(0, n_points)
        ox = pts[j, 0]
        oy = pts[j, 1]
        nx = ox + sigma * np.random.normal()
        ny = oy + sigma * np.random.normal()
        if not allow_lower and ny < 0.0:
            ny = -ny
        nx, ny = _project_lens(nx, ny)
        pts[j, 0] = nx
        pts[j, 1] = ny
        m = _build_chain(pts, allow_lower, vx, vy)
        if m < 3:
            pts[j, 0] = ox
            pts[j, 1] = oy
            rej_degen += 1
            continue
        if allow_lower and _max_pairwise_sq(vx, vy, m) > diam_limit:
            pts[j, 0] = ox
            pts[j, 1] = oy
            rej_diam += 1
            continue
        total, interior = _poly_measures(vx, vy, m)
        if total <= 1e-15:
            pts[j, 0] = ox
            pts[j, 1] = oy
            rej_degen += 1
            continue
        ext = total - interior
        if ext < 0.0:
            ext = 0.0
        mu_new = ext / total
        if mu_new > mu_cur:
            mu_cur = mu_new
            hist_it[hcount] = it
            hist_mu[hcount] = mu_new
            hcount += 1
        else:
            pts[j, 0] = ox
            pts[j, 1] = oy
            rej_noimp += 1
    return mu_cur, pts, hcount, rej_degen, rej_diam, rej_noimp


# ---------------------------------------------------------------------------
# public API


@dataclass(frozen=True)
class OptConfig:
    """Hill-climbing configuration.  The Gaussian step size decays from
    step_initial by a factor step_decay applied 100 times over the run."""

    n_points: int
    iterations: int
    seed: int = 0
    step_initial: float = 0.08
    step_decay: float = 0.93
    restarts: int = 1
    allow_lower: bool = False

    def __post_init__(self) -> None:
        if self.n_points < 1:
            raise ValueError("n_points must be >= 1")
        if self.iterations < 1:
            raise ValueError("iterations must be >= 1")
        if not (0.0 < self.step_decay < 1.0):
            raise ValueError("step_decay must lie in (0, 1)")
        if self.step_initial <= 0.0:
            raise ValueError("step_initial must be positive")
        if self.restarts < 1:
            raise ValueError("restarts must be >= 1")


@dataclass(frozen=True)
class Candidate:
    """Latent search points; the figure is the convex chain they induce."""

    upper_points: tuple[Point, ...]
    lower_points: tuple[Point, ...] = ()


@dataclass(frozen=True)
class OptTrace:
    best_mu: float
    best_figure: Figure
    history: tuple[tuple[int, float], ...]
    constraint_rejections: dict[str, int]
    best_restart: int
    config: OptConfig

    def to_dict(self, include_figure: bool = True) -> dict:
        out = {
            "best_mu": self.best_mu,
            "history": [[i, v] for i, v in self.history],
            "constraint_rejections": dict(self.constraint_rejections),
            "best_restart": self.best_restart,
            "config": {
                "n_points": self.config.n_points,
                "iterations": self.config.iterations,
                "seed": self.config.seed,
                "step_initial": self.config.step_initial,
                "step_decay": self.config.step_decay,
                "restarts": self.config.restarts,
                "allow_lower": self.config.allow_lower,
            },
        }
        if include_figure:
            from .geometry import figure_to_json
            import json

            out["best_figure"] = json.loads(figure_to_json(self.best_figure))
        return out


def _chain_figure(pts: np.ndarray, allow_lower: bool, tol: Tolerance = DEFAULT_TOL) -> Figure:
    vx = np.empty(pts.shape[0] + 2, np.float64)
    vy = np.empty(pts.shape[0] + 2, np.float64)
    m = _build_chain(np.asarray(pts, np.float64), allow_lower, vx, vy)
    if m < 3:
        raise RepairRejected("no point survives the convex chain")
    verts = [Point(float(vx[i]), float(vy[i])) for i in range(m)]
    return figure([segment(a, b) for a, b in zip(verts, verts[1:] + verts[:1])], tol)


def candidate_points(c: Candidate) -> np.ndarray:
    pts = list(c.upper_points) + list(c.lower_points)
    return np.array([[p.x, p.y] for p in pts], dtype=np.float64).reshape(-1, 2)


def repair(c: Candidate, tol: Tolerance = DEFAULT_TOL) -> Candidate:
    """Project every point into the lens and keep only the convex chain.

    Raises RepairRejected when no point survives or the repaired figure
    violates the unit-diameter constraint.
    """
    raw = candidate_points(c)
    if raw.size == 0:
        raise RepairRejected("candidate has no points")
    proj = np.empty_like(raw)
    for i, (x, y) in enumerate(raw):
        proj[i] = _project_lens(float(x), float(y))
    allow_lower = bool(np.any(proj[:, 1] < -_Y_EPS))
    vx = np.empty(proj.shape[0] + 2, np.float64)
    vy = np.empty(proj.shape[0] + 2, np.float64)
    m = _build_chain(proj, allow_lower, vx, vy)
    if m < 3:
        raise RepairRejected("no point survives the convex chain")
    if _max_pairwise_sq(vx, vy, m) > (1.0 + 1e-9) ** 2:
        raise RepairRejected("repaired candidate exceeds the unit diameter")
    upper = tuple(Point(float(x), float(y)) for x, y in zip(vx[:m], vy[:m]) if y > _Y_EPS)
    lower = tuple(Point(float(x), float(y)) for x, y in zip(vx[:m], vy[:m]) if y < -_Y_EPS)
    return Candidate(upper_points=upper, lower_points=lower)


def candidate_figure(c: Candidate, tol: Tolerance = DEFAULT_TOL) -> Figure:
    """Polygonal figure induced by a candidate's convex chains."""
    return _chain_figure(candidate_points(c), bool(c.lower_points), tol)


def optimize_mu(cfg: OptConfig, tol: Tolerance = DEFAULT_TOL) -> OptTrace:
    """Run seeded hill climbing with restarts and return the best trace.

    best_mu can never exceed the proven bound; this is asserted, not assumed.
    """
    best: tuple[float, np.ndarray, list[tuple[int, float]], dict[str, int], int] | None = None
    for k in range(cfg.restarts):
        seed_k = (cfg.seed + k) & 0x7FFFFFFF
        hist_it = np.empty(cfg.iterations + 1, np.int64)
        hist_mu = np.empty(cfg.iterations + 1, np.float64)
        mu_k, pts, hn, r_deg, r_diam, r_noimp = _climb(
            cfg.n_points,
            cfg.iterations,
            seed_k,
            cfg.step_initial,
            cfg.step_decay,
            cfg.allow_lower,
            hist_it,
            hist_mu,
        )
        if best is None or mu_k > best[0]:
            history = [(int(hist_it[i]), float(hist_mu[i])) for i in range(hn)]
            rejections = {
                "degenerate": int(r_deg),
                "diameter": int(r_diam),
                "no_improvement": int(r_noimp),
            }
            best = (float(mu_k), pts.copy(), history, rejections, k)
    best_mu, pts, history, rejections, k_best = best
    if best_mu <= 0.0:
        raise RepairRejected("search never produced a feasible figure")
    fig = _chain_figure(pts, cfg.allow_lower, tol)
    assert best_mu <= MU_MAX + 1e-6, f"mu bound violated: {best_mu!r}"
    return OptTrace(
        best_mu=best_mu,
        best_figure=fig,
        history=tuple(history),
        constraint_rejections=rejections,
        best_restart=k_best,
        config=cfg,
    )


# ---------------------------------------------------------------------------
# executable version of the optimality argument


@dataclass(frozen=True)
class ArcBulgeCheck:
    edge_index: int
    eps: float
    max_unit_distance: float  # max over dist(P', K), dist(P', L) for the pushed midpoint
    violated: bool


@dataclass(frozen=True)
class StripCheck:
    height: float
    mu_before: float
    mu_after: float
    mu_decreased: bool
    diameter_after: float


@dataclass(frozen=True)
class PerturbationAudit:
    figure_name: str
    arc_bulge: tuple[ArcBulgeCheck, ...]
    strip: tuple[StripCheck, ...]

    def to_dict(self) -> dict:
        return {
            "figure": self.figure_name,
            "arc_bulge": [
                {
                    "edge_index": a.edge_index,
                    "eps": a.eps,
                    "max_unit_distance": a.max_unit_distance,
                    "violated": a.violated,
                }
                for a in self.arc_bulge
            ],
            "strip": [
                {
                    "height": s.height,
                    "mu_before": s.mu_before,
                    "mu_after": s.mu_after,
                    "mu_decreased": s.mu_decreased,
                    "diameter_after": s.diameter_after,
                }
                for s in self.strip
            ],
        }


def _strip_figure(f: Figure, h: float, tol: Tolerance) -> Figure:
    """The figure with a thin strip of height h appended below the axis."""
    xh = math.sqrt(1.0 - h * h) - 0.5  # corners stay within distance 1 of K and L
    bottom = None
    for i, e in enumerate(f.edges):
        if e.kind == "segment" and e.start == K and e.end == L:
            bottom = i
            break
    if bottom is not None:
        edges = list(f.edges)
        replacement = [
            segment(K, Point(-xh, -h)),
            segment(Point(-xh, -h), Point(xh, -h)),
            segment(Point(xh, -h), L),
        ]
        edges = replacement + edges[bottom + 1 :] + edges[:bottom]
        return figure(edges, tol)
    # no straight bottom edge: fall back to the hull of boundary samples
    # plus the strip corners
    from .geometry import _edge_samples, _hull_of_points

    pts = [p for e in f.edges for p, _t in _edge_samples(e, 1e-6)]
    pts += [Point(-xh, -h), Point(xh, -h)]
    hull = _hull_of_points(pts)
    return figure([segment(a, b) for a, b in zip(hull, hull[1:] + hull[:1])], tol)


def perturbation_audit(
    f: Figure,
    name: str = "figure",
    eps_values: tuple[float, ...] = (1e-3, 1e-2),
    strip_heights: tuple[float, ...] = (1e-3, 1e-2),
    tol: Tolerance = DEFAULT_TOL,
) -> PerturbationAudit:
    """Run the two boundary perturbations that pin the extremal figure down:
    (a) bulging an arc side outward breaks the unit-distance constraints;
    (b) adding area below the diameter dilutes mu.

    The input must share the diameter KL: K and L on the boundary, diameter 1.
    """
    if contains(f, K, tol) != "boundary" or contains(f, L, tol) != "boundary":
        raise ValueError("figure does not share the diameter KL (endpoints not on boundary)")
    if abs(diameter(f, tol) - 1.0) > 1e-6:
        raise ValueError("figure does not share the diameter KL (diameter differs from 1)")

    from .geometry import _arc_angles, _arc_point

    bulges: list[ArcBulgeCheck] = []
    for idx, e in enumerate(f.edges):
        if e.kind != "arc":
            continue
        a0, sw = _arc_angles(e)
        if sw <= 0.0:
            continue  # concave edges have no outward bulge to audit
        mid = _arc_point(e, a0 + 0.5 * sw)
        nx = (mid.x - e.center.x) / e.radius
        ny = (mid.y - e.center.y) / e.radius
        for eps in eps_values:
            pushed = Point(mid.x + eps * nx, mid.y + eps * ny)
            dmax = max(math.hypot(pushed.x - K.x, pushed.y - K.y), math.hypot(pushed.x - L.x, pushed.y - L.y))
            bulges.append(ArcBulgeCheck(idx, eps, dmax, dmax > 1.0 + tol.geom_eps))

    mu_before = measure_mu(f, REFERENCE_CIRCLE, tol).mu
    strips: list[StripCheck] = []
    for h in strip_heights:
        fat = _strip_figure(f, h, tol)
        mu_after = measure_mu(fat, REFERENCE_CIRCLE, tol).mu
        strips.append(StripCheck(h, mu_before, mu_after, mu_after < mu_before, diameter(fat, tol)))

    return PerturbationAudit(name, tuple(bulges), tuple(strips))

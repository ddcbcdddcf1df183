"""Radial-coordinate area functional and the right-angle chord bound.

With the origin O on the boundary and rho(theta) the boundary distance for
theta in [0, pi], the enclosed area is (1/2) the integral of rho^2.  Pairing
theta with theta + pi/2 turns the integrand into the squared length of the
right-angled chord PQ through O, which is at most the squared diameter, so
area <= (pi/4) * max PQ^2, with equality for the circle rho = sin(theta).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

HALF_PI = 0.5 * math.pi


@dataclass(frozen=True)
class RadialProfile:
    """Sampled boundary distance rho(theta), theta strictly increasing over
    [0, pi], linear interpolation between samples."""

    theta: tuple[float, ...]
    rho: tuple[float, ...]

    def __post_init__(self) -> None:
        th = np.asarray(self.theta, dtype=float)
        r = np.asarray(self.rho, dtype=float)
        if th.ndim != 1 or th.shape != r.shape:
            raise ValueError("theta and rho must be 1-d sequences of equal length")
        if th.size < 8:
            raise ValueError(f"profile needs at least 8 samples, got {th.size}")
        if not (np.all(np.isfinite(th)) and np.all(np.isfinite(r))):
            raise ValueError("profile samples must be finite")
        if np.any(r < 0.0):
            raise ValueError("rho samples must be non-negative")
        if np.any(np.diff(th) <= 0.0):
            raise ValueError("theta samples must be strictly increasing")
        if abs(th[0]) > 1e-12 or abs(th[-1] - math.pi) > 1e-12:
            raise ValueError("theta must start at 0 and end at pi")


def profile(theta: Sequence[float], rho: Sequence[float]) -> RadialProfile:
    return RadialProfile(tuple(float(t) for t in theta), tuple(float(r) for r in rho))


def profile_from_json(doc: dict) -> RadialProfile:
    """Build a profile from the {"theta": [...], "rho": [...]} wire format."""
    try:
        return profile(doc["theta"], doc["rho"])
    except KeyError as exc:
        raise ValueError(f'profile JSON needs "theta" and "rho" lists: missing {exc}') from exc


def _grid_with_halfpi(p: RadialProfile) -> tuple[np.ndarray, np.ndarray]:
    """Sample grid of rho^2 with a node inserted at pi/2 (linear in rho^2, so
    the trapezoid total is unchanged)."""
    th = np.asarray(p.theta)
    g = np.asarray(p.rho) ** 2
    if np.any(np.abs(th - HALF_PI) <= 1e-15):
        return th, g
    k = int(np.searchsorted(th, HALF_PI))
    gm = g[k - 1] + (g[k] - g[k - 1]) * (HALF_PI - th[k - 1]) / (th[k] - th[k - 1])
    return np.insert(th, k, HALF_PI), np.insert(g, k, gm)


def radial_area(p: RadialProfile) -> float:
    """(1/2) integral of rho^2 over [0, pi] by composite trapezoid."""
    direct = 0.5 * float(np.trapezoid(np.asarray(p.rho) ** 2, np.asarray(p.theta)))
    paired = radial_area_paired(p)
    scale = max(1.0, abs(direct))
    if abs(direct - paired) > 1e-12 * scale:
        raise AssertionError(
            f"direct and paired quadratures disagree: {direct!r} vs {paired!r}"
        )
    return direct


def radial_area_paired(p: RadialProfile) -> float:
    """Same quadrature reassociated as (1/2) integral over [0, pi/2] of
    rho(theta)^2 + rho(theta + pi/2)^2."""
    th, g = _grid_with_halfpi(p)
    left = th <= HALF_PI + 1e-15
    right = th >= HALF_PI - 1e-15
    return 0.5 * (float(np.trapezoid(g[left], th[left])) + float(np.trapezoid(g[right], th[right])))


def max_chord_sq(p: RadialProfile) -> float:
    """Max over the grid of rho(theta)^2 + rho(theta + pi/2)^2, theta in [0, pi/2]:
    the squared length of the longest right-angled chord through the origin."""
    th = np.asarray(p.theta)
    r = np.asarray(p.rho)
    lo = th[th <= HALF_PI + 1e-15]
    hi = th[th >= HALF_PI - 1e-15] - HALF_PI
    grid = np.unique(np.concatenate([lo, hi]))
    r1 = np.interp(grid, th, r)
    r2 = np.interp(grid + HALF_PI, th, r)
    return float(np.max(r1 * r1 + r2 * r2))


def quadrature_tolerance(p: RadialProfile) -> float:
    """Half-grid Richardson estimate of the trapezoid error, with a small floor."""
    th = np.asarray(p.theta)
    g = np.asarray(p.rho) ** 2
    if th.size < 5:
        return 1e-9
    coarse = 0.5 * float(np.trapezoid(g[::2], th[::2]))
    fine = 0.5 * float(np.trapezoid(g, th))
    return abs(fine - coarse) / 3.0 + 1e-12


@dataclass(frozen=True)
class BoundReport:
    area: float
    paired_area: float
    max_chord_sq: float
    bound: float
    quad_tol: float
    ok: bool


def littlewood_bound(p: RadialProfile) -> BoundReport:
    """Check area <= (pi/4) * max PQ^2 in its scale-free form."""
    a = radial_area(p)
    paired = radial_area_paired(p)
    chord2 = max_chord_sq(p)
    qtol = quadrature_tolerance(p)
    bound = 0.25 * math.pi * chord2
    return BoundReport(a, paired, chord2, bound, qtol, a <= bound + qtol)

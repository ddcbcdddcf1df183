"""Monte Carlo ground truth for areas and exterior fractions.

Plain rejection sampling in the figure's tight bounding box.  Streams come
from numpy's counter-based Philox generator keyed by (seed, chunk index), so
estimates are bitwise reproducible for a fixed seed and the chunk reduction
is an order-independent sum of integer hit counts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .geometry import (
    _SEG_PIECE,
    Circle,
    DegenerateFigureError,
    Figure,
    Point,
    _monotone_pieces,
    bounding_box,
)

_CHUNK = 1_000_000
_MIN_SAMPLES = 10_000


@dataclass(frozen=True)
class McEstimate:
    value: float
    std_error: float
    samples: int
    seed: int
    bounding_box: tuple[Point, Point]
    rng: str = "philox4x64 (numpy), key = (seed, chunk)"

    def to_dict(self) -> dict:
        lo, hi = self.bounding_box
        return {
            "value": self.value,
            "std_error": self.std_error,
            "samples": self.samples,
            "seed": self.seed,
            "bounding_box": [[lo.x, lo.y], [hi.x, hi.y]],
            "rng": self.rng,
        }


def _chunk_points(seed: int, index: int, m: int, lo: Point, hi: Point) -> tuple[np.ndarray, np.ndarray]:
    key = np.array([seed & 0xFFFFFFFFFFFFFFFF, index], dtype=np.uint64)
    gen = np.random.Generator(np.random.Philox(key=key))
    u = gen.random((m, 2))
    return lo.x + (hi.x - lo.x) * u[:, 0], lo.y + (hi.y - lo.y) * u[:, 1]


def inside_mask(f: Figure, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
    """Vectorized crossing-parity containment (boundary points unspecified)."""
    inside = np.zeros(xs.shape, dtype=bool)
    for piece in _monotone_pieces(f):
        if piece[0] == _SEG_PIECE:
            _, x1, y1, x2, y2 = piece
            ylo, yhi = (y1, y2) if y1 < y2 else (y2, y1)
            band = (ys >= ylo) & (ys < yhi)
            if not band.any():
                continue
            xat = x1 + (ys[band] - y1) * (x2 - x1) / (y2 - y1)
        else:
            _, cx, cy, r, ya, yb, side = piece
            ylo, yhi = (ya, yb) if ya < yb else (yb, ya)
            band = (ys >= ylo) & (ys < yhi)
            if not band.any():
                continue
            dy = ys[band] - cy
            xat = cx + side * np.sqrt(np.maximum(0.0, r * r - dy * dy))
        hits = np.zeros(xs.shape, dtype=bool)
        hits[band] = xat > xs[band]
        inside ^= hits
    return inside


def _check_n(n: int) -> None:
    if n < _MIN_SAMPLES:
        raise ValueError(f"need at least {_MIN_SAMPLES} samples, got {n}")


def mc_area(f: Figure, n: int, seed: int) -> McEstimate:
    """Estimate area(f) as hit fraction times bounding-box area."""
    _check_n(n)
    lo, hi = bounding_box(f)
    box_area = (hi.x - lo.x) * (hi.y - lo.y)
    if box_area <= 0.0:
        raise DegenerateFigureError("bounding box has zero area")
    hits = 0
    done = 0
    index = 0
    while done < n:
        m = min(_CHUNK, n - done)
        xs, ys = _chunk_points(seed, index, m, lo, hi)
        hits += int(inside_mask(f, xs, ys).sum())
        done += m
        index += 1
    p = hits / n
    return McEstimate(
        value=p * box_area,
        std_error=box_area * math.sqrt(p * (1.0 - p) / n),
        samples=n,
        seed=seed,
        bounding_box=(lo, hi),
    )


def mc_mu(f: Figure, c: Circle, n: int, seed: int) -> McEstimate:
    """Estimate the exterior fraction: among samples inside the figure, the
    fraction lying outside the disc (box area cancels)."""
    _check_n(n)
    lo, hi = bounding_box(f)
    if (hi.x - lo.x) * (hi.y - lo.y) <= 0.0:
        raise DegenerateFigureError("bounding box has zero area")
    m_in = 0
    k_out = 0
    done = 0
    index = 0
    r2 = c.radius * c.radius
    while done < n:
        m = min(_CHUNK, n - done)
        xs, ys = _chunk_points(seed, index, m, lo, hi)
        mask = inside_mask(f, xs, ys)
        m_in += int(mask.sum())
        dx, dy = xs[mask] - c.center.x, ys[mask] - c.center.y
        k_out += int((dx * dx + dy * dy > r2).sum())
        done += m
        index += 1
    if m_in == 0:
        raise DegenerateFigureError("no samples landed inside the figure")
    q = k_out / m_in
    return McEstimate(
        value=q,
        std_error=math.sqrt(q * (1.0 - q) / m_in),
        samples=n,
        seed=seed,
        bounding_box=(lo, hi),
    )

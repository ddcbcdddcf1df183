"""Intersection, exterior area, mu, and the diameter-area bound check."""

import math

import pytest

from arclab import geometry as g
from arclab import measures as ms
from arclab import shapes

PI = math.pi
REF = shapes.REFERENCE_CIRCLE


def test_disc_intersection_examples():
    assert ms.disc_intersection_area(shapes.mixed_triangle().figure, REF) == pytest.approx(PI / 8, abs=1e-9)
    circ = shapes.unit_circle().figure
    assert ms.disc_intersection_area(circ, REF) == pytest.approx(PI / 4, abs=1e-12)
    assert ms.disc_intersection_area(shapes.exterior_crescent().figure, REF) == pytest.approx(0.0, abs=1e-9)


def test_exterior_area_examples():
    assert ms.exterior_area(shapes.mixed_triangle().figure, REF) == pytest.approx(
        (5 * PI - 6 * math.sqrt(3)) / 24, abs=1e-9
    )
    assert ms.exterior_area(shapes.unit_circle().figure, REF) == 0.0
    assert ms.exterior_area(shapes.isosceles(PI / 3).figure, REF) > 0.0


def test_mu_examples():
    r = ms.mu(shapes.mixed_triangle().figure, REF)
    assert r.mu == pytest.approx(shapes.MU_MAX, abs=1e-9)
    assert f"{r.mu:.2f}" == "0.36"
    assert ms.mu(shapes.unit_circle().figure, REF).mu == 0.0
    assert ms.mu(shapes.exterior_crescent().figure, REF).mu == 1.0


def test_mu_report_invariants():
    for s in shapes.library():
        r = ms.mu(s.figure, REF)
        assert r.total_area == pytest.approx(r.interior_area + r.exterior_area, abs=max(r.est_error, 1e-12))
        assert 0.0 <= r.mu <= 1.0
        assert r.mu == pytest.approx(r.exterior_area / r.total_area, rel=1e-12)
        assert r.method in ("analytic", "clipped")


def test_mu_method_tags():
    assert ms.mu(shapes.isosceles(PI / 3).figure, REF).method == "analytic"  # pure polygon
    assert ms.mu(shapes.mixed_triangle().figure, REF).method == "clipped"  # flattened unit arcs
    assert ms.mu(shapes.unit_circle().figure, REF).method == "analytic"  # concentric arc


def test_mu_bound_over_convex_library_shapes_sharing_kl():
    for s in shapes.library():
        if not any(s.name.startswith(p) for p in shapes.SHARES_KL):
            continue
        if not g.is_convex(s.figure):
            continue
        assert ms.mu(s.figure, REF).mu <= shapes.MU_MAX + 1e-6, s.name


def test_exterior_area_monotone_in_circle_radius():
    mixed = shapes.mixed_triangle().figure
    prev = None
    for radius in (0.3, 0.4, 0.5, 0.6, 0.7, 0.85, 1.0, 1.2):
        ext = ms.exterior_area(mixed, g.Circle(g.Point(0.0, 0.0), radius))
        if prev is not None:
            assert ext <= prev + 1e-9
        prev = ext


def test_zero_area_figures_cannot_be_built():
    with pytest.raises(g.InvalidFigureError):
        g.figure([g.segment((0, 0), (1, 0)), g.segment((1, 0), (0, 0))])


def test_littlewood_check_examples():
    ok = ms.littlewood_check(shapes.unit_circle().figure)
    assert ok.status == "ok"
    assert ok.area == pytest.approx(PI / 4, abs=1e-12)
    assert ok.area <= ok.bound + 1e-9

    mixed = ms.littlewood_check(shapes.mixed_triangle().figure)
    assert mixed.status == "ok"
    assert mixed.area < mixed.bound

    lens = ms.littlewood_check(shapes.lens().figure)
    assert lens.status == "not_applicable"
    assert lens.diameter == pytest.approx(math.sqrt(3), abs=1e-9)


def test_littlewood_check_on_fuzz_polygons():
    from conftest import make_rng, random_convex_polygon

    rng = make_rng(3)
    for _ in range(200):
        assert ms.littlewood_check(random_convex_polygon(rng)).ok


def test_analytic_mu_matches_oracle_at_one_million_samples():
    from arclab import montecarlo as mc

    for s in shapes.library():
        r = ms.mu(s.figure, REF)
        est = mc.mc_mu(s.figure, REF, 10**6, seed=31)
        sigma = max(est.std_error, 1e-12)
        assert abs(r.mu - est.value) <= 4.0 * sigma, s.name

"""Verification report, deterministic SVG rendering, and the figure/CSV path."""

import csv
import math

import pytest

from arclab import report as rep
from arclab import shapes


@pytest.fixture(scope="module")
def result():
    return rep.verify()


def test_verify_passes_with_enough_checks(result):
    assert result.overall
    assert len(result.checks) >= 15


def test_verify_dict_schema(result):
    doc = result.to_dict()
    assert doc["overall"] is True
    for entry in doc["checks"]:
        assert set(entry) == {"name", "expected", "computed", "abs_error", "tolerance", "provenance", "pass"}
        assert entry["provenance"]


def test_verify_table_mentions_every_check(result):
    table = result.to_table()
    for c in result.checks:
        assert c.name in table
    assert "overall: PASS" in table


def test_tightened_tolerance_fails_only_discretization_backed_checks():
    diag = rep.verify(area_tol=1e-15, fuzz_count=50)
    failing = {c.name for c in diag.checks if not c.passed}
    assert "mixed_triangle.area.discretized" in failing
    assert "mixed_triangle.area.closed_form" not in failing
    assert "reuleaux.area" not in failing
    assert "unit_circle.area_at_bound" not in failing


def test_csv_export(result, tmp_path):
    path = tmp_path / "checks.csv"
    result.to_csv(path)
    with open(path) as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == ["name", "expected", "computed", "abs_error", "tolerance", "provenance", "pass"]
    assert len(rows) == len(result.checks) + 1


def test_render_svg_is_byte_identical(tmp_path):
    a = tmp_path / "a.svg"
    b = tmp_path / "b.svg"
    fig = shapes.mixed_triangle().figure
    rep.render_svg(fig, a, title="mixed_triangle")
    rep.render_svg(fig, b, title="mixed_triangle")
    assert a.read_bytes() == b.read_bytes()


def test_render_svg_content(tmp_path):
    out = tmp_path / "mixed.svg"
    rep.render_svg(shapes.mixed_triangle().figure, out, title="mixed_triangle")
    text = out.read_text()
    assert text.count("A ") >= 2  # the two unit arcs
    for label in (">K<", ">L<", ">C<", ">D<"):
        assert label in text
    assert "μ ≈ 0.3606" in text

    out2 = tmp_path / "crescent.svg"
    rep.render_svg(shapes.exterior_crescent().figure, out2)
    assert "μ ≈ 1.0000" in out2.read_text()


def test_report_figures_written(tmp_path):
    written = rep.save_report_figures(tmp_path)
    names = {p.name for p in written}
    assert "fig_mixed_triangle.png" in names
    assert "fig_mu_vs_apex.png" in names
    assert len(written) == len(shapes.library()) + 1
    for p in written:
        assert p.stat().st_size > 1000


def test_random_convex_polygon_helper_obeys_diameter_cap():
    import numpy as np

    rng = np.random.Generator(np.random.Philox(key=np.array([1, 0], dtype=np.uint64)))
    from arclab.geometry import area, diameter

    for _ in range(20):
        f = rep.random_convex_polygon(rng)
        assert diameter(f) <= 1.0 + 1e-9
        assert area(f) <= math.pi / 4 + 1e-9

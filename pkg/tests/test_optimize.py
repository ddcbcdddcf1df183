"""Optimizer tests: repair projections, determinism, convergence, the audit."""

import math

import pytest

from arclab import geometry as g
from arclab import measures as ms
from arclab import optimize as opt
from arclab import shapes

PI = math.pi


def test_config_validation():
    with pytest.raises(ValueError):
        opt.OptConfig(n_points=0, iterations=10)
    with pytest.raises(ValueError):
        opt.OptConfig(n_points=1, iterations=0)
    with pytest.raises(ValueError):
        opt.OptConfig(n_points=1, iterations=10, step_decay=1.5)
    with pytest.raises(ValueError):
        opt.OptConfig(n_points=1, iterations=10, restarts=0)


def test_repair_pulls_point_onto_the_lens_boundary():
    got = opt.repair(opt.Candidate(upper_points=(g.Point(0.0, 0.95),)))
    (p,) = got.upper_points
    assert math.dist(p, shapes.C) < 0.05
    dk, dl = math.dist(p, shapes.K), math.dist(p, shapes.L)
    assert dk <= 1.0 + 1e-9 and dl <= 1.0 + 1e-9
    assert max(dk, dl) == pytest.approx(1.0, abs=1e-9)  # lands on a unit arc


def test_repair_keeps_feasible_candidates():
    pts = (g.Point(-0.2, 0.3), g.Point(0.0, 0.4), g.Point(0.2, 0.5))
    got = opt.repair(opt.Candidate(upper_points=pts))
    assert sorted(got.upper_points) == sorted(pts)


def test_repair_drops_collinear_middle_point():
    pts = (g.Point(-0.2, 0.4), g.Point(0.0, 0.4), g.Point(0.2, 0.4))
    got = opt.repair(opt.Candidate(upper_points=pts))
    assert len(got.upper_points) == 2


def test_repair_rejects_flat_candidates():
    with pytest.raises(opt.RepairRejected):
        opt.repair(opt.Candidate(upper_points=(g.Point(0.1, 0.0),)))


def test_candidate_figure_is_convex_and_feasible():
    c = opt.Candidate(upper_points=(g.Point(-0.3, 0.4), g.Point(0.2, 0.55)))
    fig = opt.candidate_figure(c)
    assert g.is_convex(fig)
    assert g.diameter(fig) <= 1.0 + 1e-9


def test_determinism_bitwise():
    cfg = opt.OptConfig(n_points=8, iterations=4000, seed=11, restarts=2)
    a = opt.optimize_mu(cfg)
    b = opt.optimize_mu(cfg)
    assert a.best_mu == b.best_mu
    assert a.history == b.history
    assert a.best_figure == b.best_figure


def test_single_point_converges_to_the_lens_apex():
    tr = opt.optimize_mu(opt.OptConfig(n_points=1, iterations=3000, seed=3, restarts=2))
    assert tr.best_mu == pytest.approx(shapes.TRIANGLE_KLC_MU, abs=1e-4)
    apex = max(tr.best_figure.vertices, key=lambda p: p.y)
    assert math.dist(apex, shapes.C) < 1e-2


def test_history_is_monotone_and_bounded():
    tr = opt.optimize_mu(opt.OptConfig(n_points=16, iterations=10_000, seed=5, restarts=2))
    mus = [m for _i, m in tr.history]
    assert all(b >= a for a, b in zip(mus, mus[1:]))
    assert tr.best_mu == mus[-1]
    assert tr.best_mu <= shapes.MU_MAX + 1e-6


def test_best_figure_satisfies_all_constraints():
    tr = opt.optimize_mu(opt.OptConfig(n_points=24, iterations=20_000, seed=9))
    fig = tr.best_figure
    assert g.is_convex(fig)
    assert g.diameter(fig) <= 1.0 + 1e-9
    for v in fig.vertices:
        assert math.dist(v, shapes.K) <= 1.0 + 1e-9
        assert math.dist(v, shapes.L) <= 1.0 + 1e-9
    assert ms.mu(fig, shapes.REFERENCE_CIRCLE).mu == pytest.approx(tr.best_mu, abs=1e-9)


def test_allow_lower_ends_with_an_empty_lower_chain():
    tr = opt.optimize_mu(opt.OptConfig(n_points=8, iterations=30_000, seed=5, restarts=2, allow_lower=True))
    assert all(v.y >= -1e-9 for v in tr.best_figure.vertices)


def test_bound_respected_across_seeds():
    for seed in range(20):
        tr = opt.optimize_mu(opt.OptConfig(n_points=8, iterations=2000, seed=seed))
        assert tr.best_mu <= shapes.MU_MAX + 1e-6


def test_rejection_counters_add_up():
    cfg = opt.OptConfig(n_points=8, iterations=5000, seed=2)
    tr = opt.optimize_mu(cfg)
    accepted = len(tr.history) - 1
    rejected = sum(tr.constraint_rejections.values())
    assert accepted + rejected == cfg.iterations


# ---------------------------------------------------------------------------
# perturbation audit


def test_audit_mixed_triangle_flags_both_arguments():
    audit = opt.perturbation_audit(shapes.mixed_triangle().figure, "mixed_triangle")
    assert len(audit.arc_bulge) == 4  # two arc sides x two epsilons
    for chk in audit.arc_bulge:
        assert chk.violated
        assert chk.max_unit_distance == pytest.approx(1.0 + chk.eps, abs=1e-9)
    assert len(audit.strip) == 2
    for chk in audit.strip:
        assert chk.mu_decreased
        assert chk.mu_after < chk.mu_before


def test_audit_unit_circle_runs_and_flags_bulges():
    audit = opt.perturbation_audit(shapes.unit_circle().figure, "unit_circle")
    assert audit.arc_bulge and all(c.violated for c in audit.arc_bulge)
    assert len(audit.strip) == 2  # reported, with no strict-decrease claim


def test_audit_rejects_figures_not_sharing_kl():
    with pytest.raises(ValueError):
        opt.perturbation_audit(shapes.lens().figure, "lens")


def test_audit_strip_dilution_scales_with_height():
    audit = opt.perturbation_audit(shapes.mixed_triangle().figure, eps_values=(1e-3,), strip_heights=(1e-3, 1e-2))
    drop_small = audit.strip[0].mu_before - audit.strip[0].mu_after
    drop_large = audit.strip[1].mu_before - audit.strip[1].mu_after
    assert drop_large > drop_small > 0.0

"""Command-line surface: verification suite, shape emission, mu evaluation,
the radial bound, optimization runs, the Monte Carlo oracle, and rendering."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import littlewood as lw
from . import measures as ms
from . import montecarlo as mc
from . import optimize as opt
from . import report as rep
from . import shapes
from .geometry import Circle, Figure, Point, figure_from_json, figure_to_json


def _parse_circle(text: str) -> Circle:
    try:
        cx, cy, r = (float(v) for v in text.split(","))
    except ValueError as exc:
        raise SystemExit(f"--circle wants cx,cy,r (got {text!r})") from exc
    return Circle(Point(cx, cy), r)


def _load_figure(name_or_path: str) -> Figure:
    if name_or_path.endswith(".json") or Path(name_or_path).is_file():
        return figure_from_json(Path(name_or_path).read_text())
    try:
        return shapes.get_shape(name_or_path).figure
    except KeyError as exc:
        raise SystemExit(str(exc)) from exc


def _cmd_verify(args: argparse.Namespace) -> int:
    result = rep.verify(area_tol=args.area_tol)
    if args.json:
        print(json.dumps(result.to_dict(), indent=2))
    else:
        print(result.to_table())
    if args.out_dir:
        out = Path(args.out_dir)
        out.mkdir(parents=True, exist_ok=True)
        result.to_csv(out / "checks.csv")
        written = rep.save_report_figures(out)
        print(f"wrote {out / 'checks.csv'} and {len(written)} figure(s) to {out}", file=sys.stderr)
    return 0 if result.overall else 1


def _cmd_shapes(args: argparse.Namespace) -> int:
    if args.action == "list":
        for name in shapes.shape_names():
            print(name)
        return 0
    shape = shapes.get_shape(args.name)
    print(figure_to_json(shape.figure, indent=2))
    return 0


def _cmd_mu(args: argparse.Namespace) -> int:
    fig = _load_figure(args.shape)
    circle = _parse_circle(args.circle) if args.circle else shapes.REFERENCE_CIRCLE
    print(json.dumps(ms.mu(fig, circle).to_dict(), indent=2))
    return 0


def _cmd_littlewood(args: argparse.Namespace) -> int:
    doc = json.loads(Path(args.profile).read_text())
    prof = lw.profile_from_json(doc)
    bound = lw.littlewood_bound(prof)
    print(
        json.dumps(
            {
                "area": bound.area,
                "paired_area": bound.paired_area,
                "max_chord_sq": bound.max_chord_sq,
                "bound": bound.bound,
                "quad_tol": bound.quad_tol,
                "ok": bound.ok,
            },
            indent=2,
        )
    )
    return 0


def _cmd_optimize(args: argparse.Namespace) -> int:
    cfg = opt.OptConfig(
        n_points=args.points,
        iterations=args.iters,
        seed=args.seed,
        restarts=args.restarts,
        allow_lower=args.allow_lower,
        step_initial=args.step_initial,
        step_decay=args.step_decay,
    )
    trace = opt.optimize_mu(cfg)
    print(json.dumps(trace.to_dict(include_figure=not args.no_figure), indent=2))
    return 0


def _cmd_oracle(args: argparse.Namespace) -> int:
    fig = _load_figure(args.shape)
    if args.circle:
        est = mc.mc_mu(fig, _parse_circle(args.circle), args.samples, args.seed)
    else:
        est = mc.mc_area(fig, args.samples, args.seed)
    print(json.dumps(est.to_dict(), indent=2))
    return 0


def _cmd_render(args: argparse.Namespace) -> int:
    fig = _load_figure(args.name)
    rep.render_svg(fig, args.out, title=args.name)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="arclab", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run the closed-form identity suite")
    v.add_argument("--json", action="store_true", help="machine-readable report")
    v.add_argument("--area-tol", type=float, default=None, help="override every numeric tolerance (diagnostic)")
    v.add_argument("--out-dir", default=None, help="write checks.csv and report figures here")
    v.set_defaults(func=_cmd_verify)

    s = sub.add_parser("shapes", help="list library shapes or emit one as JSON")
    s.add_argument("action", choices=["list", "emit"])
    s.add_argument("name", nargs="?", help="shape name for emit (isosceles takes :<apex>)")
    s.set_defaults(func=_cmd_shapes)

    m = sub.add_parser("mu", help="exterior fraction of a figure vs a circle")
    m.add_argument("--shape", required=True, help="library shape name or figure JSON path")
    m.add_argument("--circle", default=None, help="cx,cy,r (default: unit-diameter circle on KL)")
    m.set_defaults(func=_cmd_mu)

    lwp = sub.add_parser("littlewood", help="radial area bound for a profile JSON")
    lwp.add_argument("--profile", required=True, help='JSON file {"theta": [...], "rho": [...]}')
    lwp.set_defaults(func=_cmd_littlewood)

    o = sub.add_parser("optimize", help="search for the mu-maximizing convex figure")
    o.add_argument("--points", type=int, required=True)
    o.add_argument("--iters", type=int, required=True)
    o.add_argument("--seed", type=int, default=0)
    o.add_argument("--restarts", type=int, default=1)
    o.add_argument("--allow-lower", action="store_true")
    o.add_argument("--step-initial", type=float, default=0.08)
    o.add_argument("--step-decay", type=float, default=0.93)
    o.add_argument("--no-figure", action="store_true", help="omit the best figure from the output")
    o.set_defaults(func=_cmd_optimize)

    orc = sub.add_parser("oracle", help="Monte Carlo area (or mu, with --circle) estimate")
    orc.add_argument("--shape", required=True)
    orc.add_argument("--circle", default=None, help="estimate mu against this circle instead of area")
    orc.add_argument("--samples", type=int, required=True)
    orc.add_argument("--seed", type=int, required=True)
    orc.set_defaults(func=_cmd_oracle)

    r = sub.add_parser("render", help="render a shape or figure JSON to SVG")
    r.add_argument("name")
    r.add_argument("--out", required=True)
    r.set_defaults(func=_cmd_render)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "shapes" and args.action == "emit" and not args.name:
        raise SystemExit("shapes emit needs a shape name")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())

"""Command-line surface: list the registry, run plans, render reports, sweep
noise settings.

Exit codes: 0 success, 1 runtime failure, 2 usage/config error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import replace
from pathlib import Path

from . import harness, objectives, plotting
from .perturbation import NoiseModel

EXIT_OK = 0
EXIT_RUNTIME = 1
EXIT_USAGE = 2


def _cmd_list(args) -> int:
    try:
        members = objectives.list_collection(args.dim)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.dim is None:
        # one row per registered function
        specs = list(objectives.REGISTRY.values())
        rows = [(s, s.dims[0]) for s in specs]
    else:
        rows = members
    header = f"{'label':<5} {'name':<14} {'dims':<14} {'domain':<22} {'min':>12} {'uni':<4} {'sep':<4}"
    print(header)
    print("-" * len(header))
    for spec, d in rows:
        box = objectives.default_domain(spec, d)
        lo, hi = box.lower, box.upper
        if (lo == lo[0]).all() and (hi == hi[0]).all():
            dom = f"[{lo[0]:g}, {hi[0]:g}]^d"
        else:
            dom = "x".join(f"[{a:g},{b:g}]" for a, b in zip(lo, hi))
        dims = ",".join(str(x) for x in spec.dims)
        print(
            f"{spec.label:<5} {spec.name:<14} {dims:<14} {dom:<22} "
            f"{spec.min_value(d):>12.6g} {'yes' if spec.unimodal else 'no':<4} "
            f"{'yes' if spec.separable else 'no':<4}"
        )
    return EXIT_OK


def _load_plan(args) -> harness.ExperimentPlan:
    plan = harness.ExperimentPlan.from_json_file(args.plan)
    if getattr(args, "seed", None) is not None:
        plan = replace(plan, master_seed=args.seed)
    if getattr(args, "runs", None) is not None:
        plan = replace(plan, runs=args.runs)
    return plan


def _cmd_run(args) -> int:
    try:
        plan = _load_plan(args)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        print(f"error: invalid plan: {exc}", file=sys.stderr)
        return EXIT_USAGE
    store = harness.ResultStore(args.out)
    try:
        if store.exists() and not args.force:
            harness.resume(plan, args.out)
        else:
            harness.execute(plan, args.out)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:  # noqa: BLE001 - surface anything else as runtime failure
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME
    print(f"store populated: {args.out}")
    return EXIT_OK


def _read_metric_rows(store_dir) -> list[dict]:
    path = Path(store_dir) / "metrics.csv"
    if not path.exists():
        raise FileNotFoundError(f"no metrics.csv in {store_dir}")
    with open(path, newline="") as fh:
        return list(csv.DictReader(fh))


def _cmd_report(args) -> int:
    try:
        rows = _read_metric_rows(args.store)
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    metric_names = (
        ("winning_proportion",)
        if args.plot == "winning"
        else ("relative_error_orig", "relative_error_mod")
    )
    selected = [
        r
        for r in rows
        if r["pair"] == args.pair and r["function"] == "ALL" and r["metric"] in metric_names
    ]
    if not selected:
        print(f"error: no aggregated rows for pair {args.pair!r}", file=sys.stderr)
        return EXIT_USAGE
    a, b = args.pair.split(":")
    dims = sorted({int(r["dimension"]) for r in selected})
    panels = []
    for d in dims:
        drows = [r for r in selected if int(r["dimension"]) == d]
        series = []
        if args.plot == "winning":
            pts = sorted(
                (int(r["checkpoint"]), r["value"])
                for r in drows
                if r["metric"] == "winning_proportion"
            )
            series.append((f"P({b}>{a})", False, pts))
        else:
            # dashed = original algorithm, solid = modified
            pts_a = sorted(
                (int(r["checkpoint"]), r["value"])
                for r in drows
                if r["metric"] == "relative_error_orig"
            )
            pts_b = sorted(
                (int(r["checkpoint"]), r["value"])
                for r in drows
                if r["metric"] == "relative_error_mod"
            )
            series.append((f"RE {a}", True, pts_a))
            series.append((f"RE {b}", False, pts_b))
        panels.append((d, series))
    title = ("Winning proportion " if args.plot == "winning" else "Relative error ") + args.pair
    svg = plotting.render_panels(panels, title)
    out_base = Path(args.out) if args.out else Path(args.store) / f"{args.plot}_{a}_{b}"
    out_base.parent.mkdir(parents=True, exist_ok=True)
    svg_path = out_base.with_suffix(".svg")
    csv_path = out_base.with_suffix(".csv")
    svg_path.write_text(svg)
    # companion CSV: exactly the plotted values, verbatim from metrics.csv
    lines = ["pair,dimension,checkpoint,metric,value"]
    for dim, series in panels:
        for label, dashed, pts in series:
            metric = (
                "winning_proportion"
                if args.plot == "winning"
                else ("relative_error_orig" if dashed else "relative_error_mod")
            )
            for t, v in pts:
                lines.append(f"{args.pair},{dim},{t},{metric},{v}")
    csv_path.write_text("\n".join(lines) + "\n")
    print(f"wrote {svg_path} and {csv_path}")
    return EXIT_OK


def _cmd_sweep(args) -> int:
    try:
        plan = _load_plan(args)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        print(f"error: invalid plan: {exc}", file=sys.stderr)
        return EXIT_USAGE
    settings = []
    if args.sigma:
        for s in args.sigma.split(","):
            settings.append((f"sigma{s}", NoiseModel(kind="gaussian", sigma=float(s))))
    if args.tdf:
        for m in args.tdf.split(","):
            settings.append((f"tdf{m}", NoiseModel(kind="scaled_t", df=int(m))))
    if not settings:
        print("error: give --sigma and/or --tdf values", file=sys.stderr)
        return EXIT_USAGE
    for tag, noise in settings:
        sub = replace(plan, noise=noise, name=f"{plan.name}_{tag}")
        outdir = Path(args.out) / tag
        try:
            harness.execute(sub, outdir)
        except Exception as exc:  # noqa: BLE001
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_RUNTIME
        print(f"sweep setting {tag} -> {outdir}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="swarmpp", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_list = sub.add_parser("list", help="print the test-function registry")
    p_list.add_argument("--dim", type=int, default=None)
    p_list.set_defaults(func=_cmd_list)

    p_run = sub.add_parser("run", help="execute an experiment plan")
    p_run.add_argument("plan")
    p_run.add_argument("--out", required=True)
    p_run.add_argument("--seed", type=int, default=None)
    p_run.add_argument("--runs", type=int, default=None)
    p_run.add_argument("--force", action="store_true", help="recompute instead of resuming")
    p_run.set_defaults(func=_cmd_run)

    p_rep = sub.add_parser("report", help="emit SVG plots from a populated store")
    p_rep.add_argument("store")
    p_rep.add_argument("--plot", choices=("winning", "relerr"), required=True)
    p_rep.add_argument("--pair", required=True, help="A:B, e.g. PSO:hmPSO")
    p_rep.add_argument("--out", default=None, help="output basename (without extension)")
    p_rep.set_defaults(func=_cmd_report)

    p_sw = sub.add_parser("sweep", help="run a plan across noise settings")
    p_sw.add_argument("plan")
    p_sw.add_argument("--out", required=True)
    p_sw.add_argument("--sigma", default=None, help="comma-separated Gaussian sigmas")
    p_sw.add_argument("--tdf", default=None, help="comma-separated t degrees of freedom")
    p_sw.add_argument("--seed", type=int, default=None)
    p_sw.add_argument("--runs", type=int, default=None)
    p_sw.set_defaults(func=_cmd_sweep)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())

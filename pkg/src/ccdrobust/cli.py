"""Command-line front end: generate designs, sweep missing-observation
scenarios, verify against the embedded reference tables, and plot.

Exit codes: 0 success, 1 usage/config error, 2 verification failure,
3 numeric failure (inestimable design outside a sweep).
"""

from __future__ import annotations

import argparse
import csv
import io
import math
import sys
from pathlib import Path

from .criteria import Region, RegionShape, criteria_report
from .design import design_to_csv, gen_ccd
from .fixtures import LOSS_TABLES, SPV_TABLES
from .linalg import SingularMatrixError
from .missing import LossReport, scenario_sweep
from .svgplot import line_chart
from .verify import calibrate_v_region, resolve_spv_scale, verify_tables

__all__ = ["main"]

# Axial-distance grids used in the reference tables, by factor count.
DEFAULT_ALPHAS = {
    2: [1.0, 1.21, 1.414, 1.5, 2.0],
    3: [1.0, 1.21, 1.681, 1.732, 2.0, 2.25, 2.5, 3.0],
    4: [1.0, 1.21, 2.0, 2.25, 2.5, 3.0],
    5: [1.0, 1.5, 2.236, 2.378, 2.5, 2.75, 3.0],
}

_METRICS = ("loss", "re_g", "re_v")


def _fmt(value) -> str:
    if value is None:
        return "inestimable"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _load_config(path: str) -> dict[str, str]:
    config = {}
    for line in Path(path).read_text().splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ValueError(f"bad config line (expected key=value): {line!r}")
        key, _, value = line.partition("=")
        config[key.strip().replace("-", "_")] = value.strip()
    return config


def _region_from_args(args, k: int) -> Region:
    shape = RegionShape.CUBOIDAL if args.region == "cube" else RegionShape.SPHERICAL
    size = args.region_size
    if size is None:
        size = 1.0 if shape is RegionShape.CUBOIDAL else math.sqrt(k)
    return Region(shape, size)


def _alphas_from_args(args) -> list[float]:
    if args.alphas is not None:
        vals = [float(v) for v in str(args.alphas).replace(" ", "").split(",") if v]
    elif args.alpha is not None:
        vals = [args.alpha]
    else:
        vals = DEFAULT_ALPHAS[args.k]
    if not vals:
        raise ValueError("empty alpha grid")
    if sorted(vals) != vals:
        raise ValueError("alphas must be ascending")
    return vals


def _write(path: Path | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text)


def _loss_wide_csv(reports: list[LossReport]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(LossReport.FIELDS)
    for rep in reports:
        w.writerow([_fmt(getattr(rep, f)) for f in LossReport.FIELDS])
    return buf.getvalue()


def _loss_long_csv(k: int, reports: list[LossReport]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["k", "alpha", "missing_class", "metric", "value"])
    for rep in reports:
        w.writerow([k, _fmt(rep.alpha), "none", "a_trace", _fmt(rep.a_full)])
        for cls in ("factorial", "axial", "center"):
            for metric in ("loss", "re_g", "re_v"):
                value = getattr(rep, f"{metric}_{cls}")
                w.writerow([k, _fmt(rep.alpha), cls, metric, _fmt(value)])
    return buf.getvalue()


def _criteria_reports(k: int, n0: int, alphas: list[float], region: Region,
                      grid_step: float | None) -> list[dict]:
    return [criteria_report(gen_ccd(k, alpha, n0), region, grid_step).as_dict()
            for alpha in alphas]


def _criteria_csv(reports: list[dict]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    from .criteria import CriteriaReport
    w.writerow(CriteriaReport.FIELDS)
    for d in reports:
        w.writerow([_fmt(d[f]) for f in CriteriaReport.FIELDS])
    return buf.getvalue()


def _criteria_json(reports: list[dict]) -> str:
    import json
    return json.dumps(reports, indent=2) + "\n"


def cmd_generate(args) -> int:
    design = gen_ccd(args.k, args.alpha, args.n0)
    _write(Path(args.out) if args.out else None, design_to_csv(design))
    return 0


def cmd_sweep(args) -> int:
    alphas = _alphas_from_args(args)
    region = _region_from_args(args, args.k)
    reports = scenario_sweep(args.k, args.n0, alphas, region,
                             grid_step=args.grid_step,
                             spv_scale=args.spv_scale)
    outdir = Path(args.out or ".")
    _write(outdir / f"loss_k{args.k}.csv", _loss_wide_csv(reports))
    _write(outdir / f"loss_k{args.k}_long.csv", _loss_long_csv(args.k, reports))
    crit = _criteria_reports(args.k, args.n0, alphas, region, args.grid_step)
    _write(outdir / f"criteria_k{args.k}.csv", _criteria_csv(crit))
    _write(outdir / f"criteria_k{args.k}.json", _criteria_json(crit))
    for rep in reports:
        for tag in rep.inestimable:
            print(f"note: alpha={rep.alpha:g} missing={tag}: inestimable",
                  file=sys.stderr)
    return 0


def cmd_verify(args) -> int:
    tids = args.tables or None
    known = set(LOSS_TABLES) | set(SPV_TABLES)
    if tids and not set(tids) <= known:
        print(f"unknown table id(s): {sorted(set(tids) - known)}", file=sys.stderr)
        return 1
    checks = verify_tables(tids, spv_scale=args.spv_scale)
    gated_fail = 0
    for c in checks:
        status = "PASS" if c.passed else "FAIL"
        gate = "" if c.gated else " (ungated)"
        print(f"[{status}] table {c.table} alpha={c.alpha} "
              f"missing={c.missing or '-'} {c.column}: "
              f"expected {c.expected}, got {c.computed:.7g} "
              f"(dev {c.deviation:.2g}, tol {c.tolerance:.2g}){gate}")
        if c.gated and not c.passed:
            gated_fail += 1
    gated_total = sum(1 for c in checks if c.gated)
    print(f"gated cells: {gated_total - gated_fail}/{gated_total} pass")

    cal = calibrate_v_region()
    print(f"V-region calibration: {cal.verdict}")
    for name, err in sorted(cal.max_rel_error.items()):
        print(f"  {name}: max relative error {err:.4f}")
    for note in cal.notes:
        print(f"  note: {note}")
    scale, devs = resolve_spv_scale()
    print(f"residual SPV scaling resolved to: {scale} "
          f"(mean |dev| residual={devs['residual']:.4f}, full={devs['full']:.4f})")
    return 2 if gated_fail else 0


def cmd_plot(args) -> int:
    alphas = _alphas_from_args(args)
    region = _region_from_args(args, args.k)
    reports = scenario_sweep(args.k, args.n0, alphas, region,
                             grid_step=args.grid_step,
                             spv_scale=args.spv_scale)
    series = []
    for cls in ("factorial", "axial", "center"):
        xs, ys = [], []
        for rep in reports:
            value = getattr(rep, f"{args.metric}_{cls}")
            if value is not None:
                xs.append(rep.alpha)
                ys.append(value)
        series.append((f"missing {cls}", xs, ys))
    labels = {"loss": "loss in precision",
              "re_g": "relative G-efficiency",
              "re_v": "relative V-efficiency"}
    svg = line_chart(series, f"k={args.k} CCD, {labels[args.metric]}",
                     "axial distance alpha", labels[args.metric])
    outdir = Path(args.out or ".")
    _write(outdir / f"{args.metric}_k{args.k}.svg", svg)
    _write(outdir / f"{args.metric}_k{args.k}_long.csv",
           _loss_long_csv(args.k, reports))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ccdrobust",
        description="Central composite designs: criteria and robustness to "
                    "missing observations.")
    parser.add_argument("--config", help="flat key=value config file; "
                                         "command-line flags win")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, need_alpha=False):
        p.add_argument("--k", type=int, default=2, help="number of factors")
        p.add_argument("--n0", type=int, default=4, help="number of center points")
        p.add_argument("--alpha", type=float, default=None, help="axial distance")
        if not need_alpha:
            p.add_argument("--alphas", default=None,
                           help="comma-separated ascending axial distances")
        p.add_argument("--region", choices=("cube", "sphere"), default="cube")
        p.add_argument("--region-size", dest="region_size", type=float, default=None,
                       help="cube half-width or sphere radius "
                            "(default 1 for cube, sqrt(k) for sphere)")
        p.add_argument("--grid-step", dest="grid_step", type=float, default=None,
                       help="G-max evaluation grid spacing; omit to use "
                            "design+probe points only")
        p.add_argument("--spv-scale", dest="spv_scale",
                       choices=("residual", "full"), default="residual")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--out", default=None)

    p = sub.add_parser("generate", help="emit a CCD as CSV")
    common(p, need_alpha=True)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("sweep", help="loss/efficiency sweep over alphas")
    common(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("verify", help="check embedded reference tables")
    common(p)
    p.add_argument("tables", nargs="*", help="table ids, e.g. 1a 2b "
                                             "(default: all)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("plot", help="SVG loss/efficiency curves")
    common(p)
    p.add_argument("--metric", choices=_METRICS, required=True)
    p.set_defaults(func=cmd_plot)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args, _ = parser.parse_known_args(argv)
    except SystemExit as exc:
        return 1 if exc.code else 0
    if args.config:
        try:
            config = _load_config(args.config)
        except (OSError, ValueError) as exc:
            print(f"config error: {exc}", file=sys.stderr)
            return 1
        known = {a.dest for a in parser._actions}
        for p in parser._subparsers._group_actions[0].choices.values():
            known |= {a.dest for a in p._actions}
        bad = set(config) - known
        if bad:
            print(f"config error: unknown keys {sorted(bad)}", file=sys.stderr)
            return 1
        # Re-parse with config values as defaults; explicit flags win.
        for p in parser._subparsers._group_actions[0].choices.values():
            p.set_defaults(**{key: value for key, value in config.items()
                              if key in {a.dest for a in p._actions}})
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code else 0
    # Normalize types that may have come from the config file as strings.
    for name, cast in (("k", int), ("n0", int), ("alpha", float),
                       ("region_size", float), ("grid_step", float),
                       ("seed", int)):
        value = getattr(args, name, None)
        if isinstance(value, str):
            setattr(args, name, cast(value))
    if args.command == "generate" and args.alpha is None:
        print("generate requires --alpha", file=sys.stderr)
        return 1
    try:
        return args.func(args)
    except (ValueError, IndexError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except SingularMatrixError as exc:
        print(f"numeric failure: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())

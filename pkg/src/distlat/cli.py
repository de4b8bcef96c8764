"""Command-line interface: measures, sweep, verify, isometry.

Exit codes: 0 on success, 1 when a verification fails, 2 on usage errors.
The environment variable DISTLAT_TOL overrides the default verification
tolerance of 1e-9.
"""
from __future__ import annotations

import argparse
import dataclasses
import json
import math
import os
import sys

from . import closed_forms, lattices, verification
from .closed_forms import QualityRecord
from .geometry import DEFAULT_TOL

CSV_HEADER = (
    "d,delta,regime,protection,normalized_protection,power_end,power_mid,"
    "thickness,aspect,circumradius"
)


def _fmt(x: float) -> str:
    return format(x, ".12g")


def _env_tolerance(parser: argparse.ArgumentParser) -> float:
    raw = os.environ.get("DISTLAT_TOL")
    if raw is None:
        return DEFAULT_TOL
    try:
        tol = float(raw)
    except ValueError:
        tol = math.nan
    if not (tol > 0.0 and math.isfinite(tol)):
        parser.error(f"invalid DISTLAT_TOL {raw!r} (need a positive finite number)")
    return tol


def _parse_delta(parser: argparse.ArgumentParser, raw: str, d: int) -> closed_forms.Delta:
    try:
        dl = closed_forms.as_delta(raw if raw == "crit" else float(raw), d)
    except ValueError:
        parser.error(f"invalid distortion {raw!r} (number in (0, 1] or 'crit')")
    if not (0.0 < dl.value <= 1.0):
        parser.error(f"distortion must lie in (0, 1], got {raw}")
    return dl


def _parse_dims(parser: argparse.ArgumentParser, raw: str) -> list[int]:
    try:
        dims = [int(tok) for tok in raw.split(",") if tok.strip()]
    except ValueError:
        parser.error(f"invalid dimension list {raw!r}")
    if not dims:
        parser.error("no dimensions given")
    if min(dims) < 2:
        parser.error("protection sweeps need dimensions >= 2")
    return dims


def _parse_delta_grid(parser: argparse.ArgumentParser, raw: str) -> list:
    """Comma-separated tokens: a number, a start:stop:step range, or 'crit'."""
    tokens: list = []
    for tok in raw.split(","):
        tok = tok.strip()
        if not tok:
            continue
        if tok == "crit":
            tokens.append("crit")
            continue
        try:
            if ":" in tok:
                start_s, stop_s, step_s = tok.split(":")
                start, stop, step = float(start_s), float(stop_s), float(step_s)
                if step <= 0.0 or stop < start:
                    raise ValueError
                count = int(round((stop - start) / step))
                grid = [start + k * step for k in range(count + 1)]
                tokens.extend(v for v in grid if v <= stop + 1e-12)
            else:
                tokens.append(float(tok))
        except ValueError:
            parser.error(f"invalid distortion token {tok!r}")
    if not tokens:
        parser.error("no distortion values given")
    for v in tokens:
        if v != "crit" and not (0.0 < v <= 1.0):
            parser.error(f"distortion must lie in (0, 1], got {v:g}")
    return tokens


def _record_row(rec: QualityRecord) -> str:
    return ",".join([
        str(rec.d),
        _fmt(rec.delta),
        rec.regime,
        _fmt(rec.protection),
        _fmt(rec.normalized_protection),
        _fmt(rec.power_end),
        _fmt(rec.power_mid),
        _fmt(rec.thickness),
        _fmt(rec.aspect),
        _fmt(rec.circumradius),
    ])


def _cmd_measures(parser, args) -> int:
    dl = _parse_delta(parser, args.delta, args.dim)
    if args.dim < 2:
        parser.error("measures needs a dimension >= 2")
    rec = closed_forms.quality_record(args.dim, dl)
    if args.format == "json":
        print(json.dumps(dataclasses.asdict(rec), indent=2, sort_keys=True))
    else:
        for key, value in dataclasses.asdict(rec).items():
            print(f"{key} = {_fmt(value) if isinstance(value, float) else value}")
    return 0


def _cmd_sweep(parser, args) -> int:
    dims = _parse_dims(parser, args.dims)
    deltas = _parse_delta_grid(parser, args.deltas)
    records = verification.figure_sweep(dims, deltas)
    if args.format == "json":
        payload = json.dumps([dataclasses.asdict(r) for r in records], indent=2, sort_keys=True)
        text = payload + "\n"
    else:
        lines = [CSV_HEADER] + [_record_row(r) for r in records]
        text = "\n".join(lines) + "\n"
    if args.out in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    return 0


def _cmd_verify(parser, args) -> int:
    dl = _parse_delta(parser, args.delta, args.dim)
    if args.dim < 2:
        parser.error("verify needs a dimension >= 2")
    tol = args.tol if args.tol is not None else _env_tolerance(parser)
    reports = []
    if args.check in ("protection", "all"):
        reports.append(verification.protection_oracle(args.dim, dl, box=args.box, tol=tol))
    if args.check in ("uniform", "all"):
        reports.append(verification.uniform_protection_check(args.dim, dl, tol=tol))
    if args.check in ("minkowski", "all"):
        reports.append(verification.minkowski_check(args.dim, dl, tol=tol))
    if args.format == "json":
        print(json.dumps([r.to_dict() for r in reports], indent=2, sort_keys=True))
    else:
        for rep in reports:
            print(rep)
            if rep.claim.startswith("enumerated protection"):
                ties = rep.details["minimizers"]
                print(f"  minimizers ({len(ties)} tied): {ties}")
    return 0 if all(r.passed for r in reports) else 1


def _cmd_isometry(parser, args) -> int:
    reports = []
    if args.check in ("projection", "all"):
        reports.append(lattices.check_isometry_T0_to_Astar(args.dim, box=args.box))
    if args.check in ("root", "all"):
        reports.append(lattices.check_isometry_to_Ad(args.dim))
    if args.check in ("critical", "all"):
        reports.append(lattices.check_isometry_to_Astar_at_critical(args.dim))
    if args.format == "json":
        print(json.dumps([dataclasses.asdict(r) for r in reports], indent=2, sort_keys=True))
    else:
        for rep in reports:
            print(rep)
    return 0 if all(r.passed for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="distlat",
        description="Delaunay quality measures of diagonally distorted integer grids.",
        epilog="Set DISTLAT_TOL to override the default verification tolerance (1e-9).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("measures", help="closed-form quality measures at one (d, delta)")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--delta", required=True, help="number in (0, 1] or 'crit'")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=_cmd_measures)

    p = sub.add_parser("sweep", help="CSV sweep of quality measures over a parameter grid")
    p.add_argument("--dims", required=True, help="comma-separated dimensions, e.g. 2,3,4")
    p.add_argument(
        "--deltas", required=True,
        help="comma-separated values, start:stop:step ranges, and/or 'crit'",
    )
    p.add_argument("--out", default=None, help="output path (default: stdout)")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("verify", help="brute-force oracle checks against the closed forms")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--delta", required=True, help="number in (0, 1] or 'crit'")
    p.add_argument("--box", type=int, default=3, help="enumeration radius (default 3)")
    p.add_argument("--tol", type=float, default=None,
                   help="comparison tolerance (default: DISTLAT_TOL or 1e-9)")
    p.add_argument("--check", choices=["protection", "uniform", "minkowski", "all"],
                   default="protection")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("isometry", help="structural lattice identification checks")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--box", type=int, default=2, help="enumeration radius (default 2)")
    p.add_argument("--check", choices=["projection", "root", "critical", "all"], default="all")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=_cmd_isometry)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(parser, args)
    except (ValueError, lattices.EnumerationBudgetError) as exc:
        print(f"distlat: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

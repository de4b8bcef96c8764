"""Command line for the sweep renderer.

Exit codes: 0 on success, 1 when the input CSV does not parse, 2 on usage
errors (bad flags, missing file, empty dimension selection).
"""
from __future__ import annotations

import argparse
import os
import sys

from .figures import FORMATS, FigureSpec, SelectionError, render
from .sweep_data import CsvFormatError


def _parse_dims(parser: argparse.ArgumentParser, raw: str | None):
    if raw is None:
        return None
    try:
        dims = tuple(int(tok) for tok in raw.split(",") if tok.strip())
    except ValueError:
        parser.error(f"invalid dimension list {raw!r}")
    if not dims:
        parser.error("empty dimension selection")
    return dims


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="plotviz",
        description="Render per-dimension quality panels from a distlat sweep CSV.",
    )
    parser.add_argument("--csv", required=True, help="sweep CSV produced by 'distlat sweep'")
    parser.add_argument("--outdir", default=".", help="directory for the image files")
    parser.add_argument("--format", choices=list(FORMATS), default="png")
    parser.add_argument("--dims", default=None,
                        help="comma-separated dimensions to render (default: all in file)")
    parser.add_argument("--no-marker", action="store_true",
                        help="do not mark the critical distortion")
    parser.add_argument("--export-data", action="store_true",
                        help="also write the plotted rows next to each panel")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    dims = _parse_dims(parser, args.dims)
    if not os.path.isfile(args.csv):
        parser.error(f"no such file: {args.csv}")
    spec = FigureSpec(
        csv_path=args.csv,
        outdir=args.outdir,
        fmt=args.format,
        dims=dims,
        overlay=not args.no_marker,
        export_data=args.export_data,
    )
    try:
        written = render(spec)
    except CsvFormatError as exc:
        print(f"plotviz: {args.csv}: {exc}", file=sys.stderr)
        return 1
    except SelectionError as exc:
        parser.error(str(exc))
    for path in written:
        print(path)
    return 0


if __name__ == "__main__":
    sys.exit(main())

"""Panel rendering: one chart per dimension, three quality curves."""
from __future__ import annotations

import math
import os
from dataclasses import dataclass

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

from . import style  # noqa: E402
from .sweep_data import COLUMNS, DimensionSeries, read_sweep  # noqa: E402

# The three curves of each panel, in legend order.
PANEL_MEASURES = ("normalized_protection", "thickness", "aspect")

FORMATS = ("png", "svg")


class SelectionError(ValueError):
    """The dimension filter selects nothing renderable (a usage error)."""


@dataclass(frozen=True)
class FigureSpec:
    """What to render: input CSV, destination, format, dimension filter."""

    csv_path: str
    outdir: str
    fmt: str = "png"
    dims: tuple[int, ...] | None = None
    overlay: bool = True
    export_data: bool = False


def critical_marker(d: int) -> float:
    """Distortion at which all three measures peak: 1/sqrt(d+1)."""
    return 1.0 / math.sqrt(d + 1.0)


def _select(series: dict[int, DimensionSeries], dims) -> list[DimensionSeries]:
    if dims is None:
        chosen = sorted(series)
    else:
        chosen = sorted(set(int(d) for d in dims))
        missing = [d for d in chosen if d not in series]
        if missing:
            raise SelectionError(
                f"dimensions {missing} not present in the sweep "
                f"(available: {sorted(series)})"
            )
    if not chosen:
        raise SelectionError("no dimensions selected")
    return [series[d] for d in chosen]


def _render_panel(s: DimensionSeries, spec: FigureSpec) -> str:
    fig, ax = plt.subplots(figsize=style.FIGSIZE)
    for name in PANEL_MEASURES:
        ax.plot(s.deltas, s.measures[name], **style.CURVES[name])
    if spec.overlay:
        ax.axvline(critical_marker(s.d), **style.MARKER,
                   label=f"critical δ = {critical_marker(s.d):.5f}")
    ax.set_xlabel("δ")
    ax.set_ylabel("measure value")
    ax.set_title(f"d = {s.d}")
    ax.grid(alpha=style.GRID_ALPHA)
    ax.legend(loc="best", fontsize="small")
    path = os.path.join(spec.outdir, f"quality_d{s.d}.{spec.fmt}")
    fig.savefig(path, dpi=style.DPI)
    plt.close(fig)
    return path


def _export_panel_data(s: DimensionSeries, spec: FigureSpec) -> str:
    """Write exactly the plotted cells, verbatim from the input CSV."""
    keep = ["d", "delta", *PANEL_MEASURES]
    idx = [COLUMNS.index(c) for c in keep]
    path = os.path.join(spec.outdir, f"quality_d{s.d}.data.csv")
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(",".join(keep) + "\n")
        for cells in s.raw_rows:
            fh.write(",".join(cells[i] for i in idx) + "\n")
    return path


def render(spec: FigureSpec) -> list[str]:
    """Render one panel per selected dimension; return the written paths."""
    if spec.fmt not in FORMATS:
        raise SelectionError(f"unsupported format {spec.fmt!r} (choose from {FORMATS})")
    series = read_sweep(spec.csv_path)
    selected = _select(series, spec.dims)
    thin = [s.d for s in selected if s.sample_count < 2]
    if thin:
        raise SelectionError(
            f"dimensions {thin} have fewer than 2 delta samples, nothing to draw"
        )
    os.makedirs(spec.outdir, exist_ok=True)
    written = []
    for s in selected:
        written.append(_render_panel(s, spec))
        if spec.export_data:
            written.append(_export_panel_data(s, spec))
    return written

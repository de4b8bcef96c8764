"""Acceptance gate for the renderer.

The sweep is produced by the primary package's CLI in a subprocess — the only
interface this component is allowed to touch — then parsed, checked and
rendered here.
"""
import os
import subprocess
import sys

from plotviz import FigureSpec, critical_marker, read_sweep, render

PANEL_DIMS = (2, 3, 4, 8, 16, 32)
GRID_STEP = 0.002


def test_secondary_criterion_figure_reproduction(tmp_path):
    """From a 500-sample sweep for d in {2,3,4,8,16,32}: one panel per
    dimension, and every curve's maximum sits within one grid step of the
    marked critical distortion."""
    csv_path = str(tmp_path / "sweep.csv")
    proc = subprocess.run(
        [sys.executable, "-m", "distlat", "sweep",
         "--dims", ",".join(str(d) for d in PANEL_DIMS),
         "--deltas", f"{GRID_STEP}:1.0:{GRID_STEP}",
         "--out", csv_path],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0, proc.stderr

    series = read_sweep(csv_path)
    assert sorted(series) == sorted(PANEL_DIMS)
    ok = True
    for d in PANEL_DIMS:
        s = series[d]
        assert s.sample_count == 500
        marker = critical_marker(d)
        for name in ("normalized_protection", "thickness", "aspect"):
            peak_delta = float(s.deltas[int(s.measures[name].argmax())])
            ok &= abs(peak_delta - marker) <= GRID_STEP + 1e-12

    outdir = tmp_path / "figs"
    written = render(FigureSpec(csv_path=csv_path, outdir=str(outdir)))
    panels = [p for p in written if p.endswith(".png")]
    ok &= len(panels) == len(PANEL_DIMS)
    ok &= all(os.path.getsize(p) > 1000 for p in panels)
    print(("PASS: " if ok else "FAIL: ")
          + "all curve maxima within one grid step of the critical marker, "
          f"{len(panels)} panels rendered")
    assert ok

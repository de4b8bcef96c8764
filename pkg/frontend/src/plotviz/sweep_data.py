"""Strict reader for the distlat sweep CSV.

The renderer never recomputes a measure: rows are kept both as parsed floats
(for plotting) and as the original cell strings (so exports can be compared
back to the input byte for byte).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

# External interface contract of `distlat sweep` — column names and order.
EXPECTED_HEADER = (
    "d,delta,regime,protection,normalized_protection,power_end,power_mid,"
    "thickness,aspect,circumradius"
)
COLUMNS = EXPECTED_HEADER.split(",")
NUMERIC_COLUMNS = [c for c in COLUMNS if c not in ("d", "regime")]
REGIMES = {"below_critical", "critical", "above_critical"}


class CsvFormatError(ValueError):
    """Malformed sweep CSV; the message names the offending line."""

    def __init__(self, line_no: int, line: str, reason: str):
        self.line_no = line_no
        self.line = line
        super().__init__(f"line {line_no}: {reason}: {line!r}")


@dataclass
class DimensionSeries:
    """All rows of one dimension, in file order."""

    d: int
    deltas: np.ndarray
    measures: dict[str, np.ndarray]
    raw_rows: list[list[str]] = field(repr=False, default_factory=list)

    @property
    def sample_count(self) -> int:
        return int(self.deltas.shape[0])


def _parse_row(line_no: int, line: str) -> tuple[int, float, dict[str, float], list[str]]:
    cells = line.split(",")
    if len(cells) != len(COLUMNS):
        raise CsvFormatError(
            line_no, line, f"expected {len(COLUMNS)} fields, got {len(cells)}"
        )
    row = dict(zip(COLUMNS, cells))
    try:
        d = int(row["d"])
    except ValueError:
        raise CsvFormatError(line_no, line, f"dimension {row['d']!r} is not an integer")
    if d < 1:
        raise CsvFormatError(line_no, line, f"dimension {d} out of range")
    if row["regime"] not in REGIMES:
        raise CsvFormatError(line_no, line, f"unknown regime {row['regime']!r}")
    values: dict[str, float] = {}
    for name in NUMERIC_COLUMNS:
        try:
            value = float(row[name])
        except ValueError:
            raise CsvFormatError(line_no, line, f"column {name!r} is not a number")
        if not math.isfinite(value):
            raise CsvFormatError(line_no, line, f"column {name!r} is not finite")
        values[name] = value
    return d, values["delta"], values, cells


def read_sweep(path: str) -> dict[int, DimensionSeries]:
    """Parse a sweep CSV into per-dimension series, strictly."""
    with open(path, "r", encoding="utf-8", newline="") as fh:
        lines = fh.read().split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise CsvFormatError(1, "", "empty file, expected the sweep header")
    if lines[0] != EXPECTED_HEADER:
        raise CsvFormatError(1, lines[0], "header does not match the sweep contract")

    groups: dict[int, dict] = {}
    for line_no, line in enumerate(lines[1:], start=2):
        if line == "":
            raise CsvFormatError(line_no, line, "blank line inside the table")
        d, delta, values, cells = _parse_row(line_no, line)
        bucket = groups.setdefault(d, {"deltas": [], "values": [], "raw": []})
        if bucket["deltas"] and delta <= bucket["deltas"][-1]:
            raise CsvFormatError(
                line_no, line, f"delta {delta:g} is not increasing within d={d}"
            )
        bucket["deltas"].append(delta)
        bucket["values"].append(values)
        bucket["raw"].append(cells)

    series: dict[int, DimensionSeries] = {}
    for d, bucket in groups.items():
        measures = {
            name: np.array([v[name] for v in bucket["values"]])
            for name in NUMERIC_COLUMNS
            if name != "delta"
        }
        series[d] = DimensionSeries(
            d=d,
            deltas=np.array(bucket["deltas"]),
            measures=measures,
            raw_rows=bucket["raw"],
        )
    return series

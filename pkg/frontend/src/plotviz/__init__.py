"""Batch renderer for distlat sweep CSVs: per-dimension quality panels."""
from .figures import PANEL_MEASURES, FigureSpec, SelectionError, critical_marker, render
from .sweep_data import (
    COLUMNS,
    EXPECTED_HEADER,
    CsvFormatError,
    DimensionSeries,
    read_sweep,
)

__version__ = "0.1.0"

__all__ = [
    "COLUMNS",
    "EXPECTED_HEADER",
    "PANEL_MEASURES",
    "CsvFormatError",
    "DimensionSeries",
    "FigureSpec",
    "SelectionError",
    "critical_marker",
    "read_sweep",
    "render",
    "__version__",
]

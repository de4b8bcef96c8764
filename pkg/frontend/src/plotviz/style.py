"""Fixed curve and marker styling for all rendered panels."""

CURVES = {
    "normalized_protection": {
        "color": "#1f77b4",
        "linestyle": "-",
        "linewidth": 1.8,
        "label": "normalized protection",
    },
    "thickness": {
        "color": "#2ca02c",
        "linestyle": "--",
        "linewidth": 1.6,
        "label": "thickness",
    },
    "aspect": {
        "color": "#d62728",
        "linestyle": "-.",
        "linewidth": 1.6,
        "label": "aspect ratio",
    },
}

MARKER = {"color": "#555555", "linestyle": ":", "linewidth": 1.3}

FIGSIZE = (6.4, 4.2)
DPI = 150
GRID_ALPHA = 0.25

"""Closed-form quality measures of the distorted canonical simplex.

Every function here is a formula in (d, delta) only; the verification module
re-derives the same quantities by coordinate enumeration.  The distortion
regime is governed by the critical value delta^2 = 1/(d+1), where the grid
becomes (a congruent copy of) the dual of the zero-sum lattice.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import freudenthal, lattices

# |delta^2 - 1/(d+1)| at or below this counts as critically distorted.
CRITICAL_REGIME_TOL = 1e-12

REGIME_BELOW = "below_critical"
REGIME_CRITICAL = "critical"
REGIME_ABOVE = "above_critical"


@dataclass(frozen=True)
class Delta:
    """Distortion parameter carrying its value and an exact square.

    The token 'crit' resolves to value = 1/sqrt(d+1) with sq = 1/(d+1) exact,
    so even-power formulas evaluate the critical point without the rounding of
    squaring the root.
    """

    value: float
    sq: float

    @classmethod
    def of(cls, value: float) -> "Delta":
        value = float(value)
        return cls(value, value * value)

    @classmethod
    def critical(cls, d: int) -> "Delta":
        return cls(1.0 / math.sqrt(d + 1.0), 1.0 / (d + 1.0))


def as_delta(delta, d: int | None = None) -> Delta:
    """Normalize a float, Delta, or the token 'crit' into a Delta."""
    if isinstance(delta, Delta):
        return delta
    if isinstance(delta, str):
        if delta == "crit":
            if d is None:
                raise ValueError("token 'crit' needs the dimension to resolve")
            return Delta.critical(d)
        raise ValueError(f"unrecognized distortion token {delta!r}")
    return Delta.of(delta)


def critical_delta(d: int) -> float:
    """The distortion at which the grid is congruent to the dual lattice."""
    _require_dim(d, 1)
    return 1.0 / math.sqrt(d + 1.0)


def _require_dim(d: int, least: int) -> None:
    if not isinstance(d, (int, np.integer)) or d < least:
        raise ValueError(f"dimension must be an integer >= {least}, got {d!r}")


def _require_quality_delta(dl: Delta) -> None:
    if not (0.0 < dl.value <= 1.0) or not math.isfinite(dl.value):
        raise ValueError(f"quality measures need 0 < delta <= 1, got {dl.value!r}")


def regime(d: int, delta) -> str:
    """Classify delta against the critical value, on delta^2 with 1e-12 slack."""
    _require_dim(d, 1)
    dl = as_delta(delta, d)
    _require_quality_delta(dl)
    gap = dl.sq - 1.0 / (d + 1.0)
    if abs(gap) <= CRITICAL_REGIME_TOL:
        return REGIME_CRITICAL
    return REGIME_ABOVE if gap > 0.0 else REGIME_BELOW


def circumcenter(d: int, delta) -> np.ndarray:
    """Circumcenter of the distorted canonical simplex.

    Coordinate j (1-based) is delta/2 + (1 - delta^2) (2j - 1 - d) / (2d):
    the convex path from the cube-chain center to the projected center.
    """
    _require_dim(d, 1)
    dl = as_delta(delta, d)
    _require_quality_delta(dl)
    j = np.arange(1, d + 1, dtype=float)
    return dl.value / 2.0 + (1.0 - dl.sq) * (2.0 * j - 1.0 - d) / (2.0 * d)


def circumradius(d: int, delta) -> float:
    """Circumradius: sqrt((delta^4 (d^2-1) + delta^2 (d^2+2) + d^2 - 1) / (12 d))."""
    _require_dim(d, 1)
    dl = as_delta(delta, d)
    _require_quality_delta(dl)
    num = dl.sq * dl.sq * (d * d - 1.0) + dl.sq * (d * d + 2.0) + d * d - 1.0
    return math.sqrt(num / (12.0 * d))


def barycentric_weights(d: int, delta) -> np.ndarray:
    """Barycentric coordinates of the circumcenter; all positive for 0 < delta < 1."""
    _require_dim(d, 1)
    dl = as_delta(delta, d)
    _require_quality_delta(dl)
    w = np.full(d + 1, (1.0 - dl.sq) / d)
    w[0] = w[d] = (1.0 + (d - 1.0) * dl.sq) / (2.0 * d)
    return w


def heights(d: int, delta) -> np.ndarray:
    """Vertex heights: the two chain ends share one value, interior vertices 1/sqrt(2)."""
    _require_dim(d, 1)
    dl = as_delta(delta, d)
    _require_quality_delta(dl)
    h = np.full(d + 1, 1.0 / math.sqrt(2.0))
    h_end = dl.value * math.sqrt(d) / math.sqrt(dl.sq * d - dl.sq + 1.0)
    h[0] = h[d] = h_end
    return h


def edge_lengths(d: int, delta) -> np.ndarray:
    """Distinct edge lengths l_x = sqrt(d x - (1 - delta^2) x^2) / sqrt(d), x = 1..d.

    x is the chain-index gap between the two vertices; all edges with the same
    gap are congruent.
    """
    _require_dim(d, 1)
    dl = as_delta(delta, d)
    _require_quality_delta(dl)
    x = np.arange(1, d + 1, dtype=float)
    return np.sqrt((d * x - (1.0 - dl.sq) * x * x) / d)


def longest_edge(d: int, delta) -> float:
    """Longest edge of the distorted simplex (maximum of the edge-length family)."""
    return float(edge_lengths(d, delta).max())


def longest_edge_continuous(d: int, delta) -> float:
    """Edge-length maximum with the chain gap relaxed to real values.

    Upper bound on longest_edge; the two agree for delta >= 1/sqrt(2) (where
    the maximum sits at the full diagonal) and whenever the parabola vertex
    d / (2 (1 - delta^2)) is an integer.
    """
    _require_dim(d, 1)
    dl = as_delta(delta, d)
    _require_quality_delta(dl)
    if dl.sq >= 0.5:
        return dl.value * math.sqrt(d)
    return math.sqrt(d) / (2.0 * math.sqrt(1.0 - dl.sq))


def heights_and_longest_edge(d: int, delta) -> tuple[np.ndarray, float]:
    """Heights together with the longest edge (the thickness ingredients)."""
    return heights(d, delta), longest_edge(d, delta)


def thickness(d: int, delta) -> float:
    """Thickness min height / longest edge of the distorted simplex."""
    h, eta = heights_and_longest_edge(d, delta)
    return float(h.min()) / eta


def thickness_continuous(d: int, delta) -> float:
    """Thickness built on the real-relaxed edge maximum (lower bound on thickness).

    Three branches with breakpoints 1/sqrt(2) and 1/sqrt(d+1); exact in the
    same cases as longest_edge_continuous.
    """
    _require_dim(d, 1)
    dl = as_delta(delta, d)
    _require_quality_delta(dl)
    if dl.sq >= 0.5:
        return 1.0 / (dl.value * math.sqrt(2.0 * d))
    if dl.sq >= 1.0 / (d + 1.0):
        return math.sqrt(2.0 - 2.0 * dl.sq) / math.sqrt(d)
    return 2.0 * dl.value * math.sqrt(1.0 - dl.sq) / math.sqrt(dl.sq * d - dl.sq + 1.0)


def aspect_ratio(d: int, delta) -> float:
    """Aspect ratio min height / (2 R) of the distorted simplex."""
    _require_dim(d, 1)
    dl = as_delta(delta, d)
    return float(heights(d, dl).min()) / (2.0 * circumradius(d, dl))


def power_protection(d: int, delta) -> tuple[float, float]:
    """Power distances of the facet neighbours to the circumsphere.

    Returns (end, mid) = (2 delta^2, (2/d)(1 - delta^2)); the two coincide at
    the critical distortion with common value 2/(d+1).
    """
    _require_dim(d, 2)
    dl = as_delta(delta, d)
    _require_quality_delta(dl)
    return 2.0 * dl.sq, (2.0 / d) * (1.0 - dl.sq)


def protection_candidates(d: int, delta) -> tuple[np.ndarray, np.ndarray]:
    """Distance slack D_i and power slack E_i of the facet neighbours, from coordinates.

    D_i = |T(p_i) - C| - R and E_i = |T(p_i) - C|^2 - R^2 over the opposite set
    of the canonical chain.  The two ends always tie, as do all mid points.
    """
    _require_dim(d, 2)
    dl = as_delta(delta, d)
    _require_quality_delta(dl)
    opposite = freudenthal.opposite_set(freudenthal.canonical_simplex(d))
    images = lattices.distort(opposite, dl.value)
    center = circumcenter(d, dl)
    radius = circumradius(d, dl)
    dist = np.linalg.norm(images - center, axis=1)
    dist_slack = dist - radius
    power_slack = dist * dist - radius * radius
    assert abs(dist_slack[0] - dist_slack[d]) <= 1e-9, "end candidates must tie"
    assert np.ptp(dist_slack[1:d]) <= 1e-9, "mid candidates must tie"
    return dist_slack, power_slack


def _radius_numerator(d: int, sq: float) -> float:
    return sq * sq * (d * d - 1.0) + sq * (d * d + 2.0) + d * d - 1.0


def protection(d: int, delta) -> float:
    """Distance from the circumsphere to the nearest non-vertex grid point.

    Piecewise in the regime: the binding neighbours are the chain ends below
    the critical distortion, the mid neighbours above it, and all d+1 tie at
    the critical point.
    """
    _require_dim(d, 2)
    dl = as_delta(delta, d)
    reg = regime(d, dl)
    if reg == REGIME_CRITICAL:
        r_del_sq = d * (d + 2.0) / (12.0 * (d + 1.0))
        return math.sqrt(r_del_sq + 2.0 / (d + 1.0)) - math.sqrt(r_del_sq)
    sq = dl.sq
    base = _radius_numerator(d, sq)
    if reg == REGIME_ABOVE:
        num = sq * sq * (d * d - 1.0) + sq * (d * d - 22.0) + d * d + 23.0
    else:
        num = sq * sq * (d * d - 1.0) + sq * (d * d + 24.0 * d + 2.0) + d * d - 1.0
    return math.sqrt(num / (12.0 * d)) - math.sqrt(base / (12.0 * d))


def normalized_protection(d: int, delta) -> float:
    """Protection divided by the circumradius (scale-free quality measure)."""
    _require_dim(d, 2)
    dl = as_delta(delta, d)
    reg = regime(d, dl)
    if reg == REGIME_CRITICAL:
        return math.sqrt((d * d + 2.0 * d + 24.0) / (d * d + 2.0 * d)) - 1.0
    sq = dl.sq
    base = _radius_numerator(d, sq)
    if reg == REGIME_ABOVE:
        num = sq * sq * (d * d - 1.0) + sq * (d * d - 22.0) + d * d + 23.0
    else:
        num = sq * sq * (d * d - 1.0) + sq * (d * d + 24.0 * d + 2.0) + d * d - 1.0
    return math.sqrt(num / base) - 1.0


@dataclass(frozen=True)
class PermutahedralConstants:
    """Delaunay constants of the dual of the zero-sum lattice in dimension d."""

    d: int
    delaunay_radius: float
    covering_slack_radius: float
    protection: float
    normalized_protection: float
    power_protection: float
    voronoi_vertex: np.ndarray


def permutahedral_constants(d: int) -> PermutahedralConstants:
    """Closed-form Delaunay data of the dual lattice: radii, protection, one Voronoi vertex."""
    _require_dim(d, 1)
    r_del_sq = d * (d + 2.0) / (12.0 * (d + 1.0))
    r_prime = math.sqrt(r_del_sq + 2.0 / (d + 1.0))
    r_del = math.sqrt(r_del_sq)
    vertex = np.arange(d, -d - 1, -2, dtype=float) / (2.0 * (d + 1.0))
    return PermutahedralConstants(
        d=d,
        delaunay_radius=r_del,
        covering_slack_radius=r_prime,
        protection=r_prime - r_del,
        normalized_protection=math.sqrt((d * d + 2.0 * d + 24.0) / (d * d + 2.0 * d)) - 1.0,
        power_protection=2.0 / (d + 1.0),
        voronoi_vertex=vertex,
    )


@dataclass(frozen=True)
class CanonicalSimplexGeometry:
    """Closed-form geometric data of the distorted canonical simplex."""

    d: int
    delta: float
    circumcenter: np.ndarray
    circumradius: float
    barycentric_weights: np.ndarray
    heights: np.ndarray
    longest_edge: float


def canonical_geometry(d: int, delta) -> CanonicalSimplexGeometry:
    """Bundle circumcenter, circumradius, weights, heights and longest edge."""
    dl = as_delta(delta, d)
    return CanonicalSimplexGeometry(
        d=d,
        delta=dl.value,
        circumcenter=circumcenter(d, dl),
        circumradius=circumradius(d, dl),
        barycentric_weights=barycentric_weights(d, dl),
        heights=heights(d, dl),
        longest_edge=longest_edge(d, dl),
    )


@dataclass(frozen=True)
class QualityRecord:
    """One sweep row: every closed-form quality measure at a given (d, delta)."""

    d: int
    delta: float
    regime: str
    protection: float
    normalized_protection: float
    power_end: float
    power_mid: float
    thickness: float
    aspect: float
    circumradius: float


def quality_record(d: int, delta) -> QualityRecord:
    """Evaluate all closed-form measures at one parameter point."""
    dl = as_delta(delta, d)
    power_end, power_mid = power_protection(d, dl)
    return QualityRecord(
        d=d,
        delta=dl.value,
        regime=regime(d, dl),
        protection=protection(d, dl),
        normalized_protection=normalized_protection(d, dl),
        power_end=power_end,
        power_mid=power_mid,
        thickness=thickness(d, dl),
        aspect=aspect_ratio(d, dl),
        circumradius=circumradius(d, dl),
    )

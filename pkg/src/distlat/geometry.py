"""Coordinate-level simplex geometry.

Everything in this module works on explicit vertex coordinates and knows
nothing about lattices or closed-form shortcuts; the rest of the package
checks its formulas against these routines.

Conventions: a k-simplex is an array of shape (k+1, d) whose rows are the
vertices.  "Full-dimensional" means k == d.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

# Relative singular-value threshold below which a vertex set is treated as
# affinely degenerate.
DEGENERACY_RTOL = 1e-12

# Default absolute-plus-relative comparison tolerance used across the package.
DEFAULT_TOL = 1e-9


class DegenerateSimplexError(ValueError):
    """Vertices do not span the expected affine dimension."""


def as_vertex_array(vertices) -> np.ndarray:
    """Validate and return simplex vertices as a float array of shape (k+1, d).

    Raises ValueError if the array is not 2-d or contains coincident vertices.
    """
    v = np.asarray(vertices, dtype=float)
    if v.ndim != 2:
        raise ValueError(f"expected vertices of shape (k+1, d), got {v.shape}")
    n, d = v.shape
    if n < 1 or d < 1:
        raise ValueError(f"empty vertex array of shape {v.shape}")
    if not np.all(np.isfinite(v)):
        raise ValueError("vertices must be finite")
    diff = v[:, None, :] - v[None, :, :]
    dist = np.sqrt((diff * diff).sum(axis=-1))
    np.fill_diagonal(dist, np.inf)
    if dist.min() == 0.0:
        raise ValueError("simplex vertices must be pairwise distinct")
    return v


def distance(p, q) -> float:
    """Euclidean distance between two points of equal dimension."""
    p = np.asarray(p, dtype=float)
    q = np.asarray(q, dtype=float)
    if p.shape != q.shape:
        raise ValueError(f"dimension mismatch: {p.shape} vs {q.shape}")
    return float(np.linalg.norm(p - q))


def edge_vectors(vertices) -> np.ndarray:
    """Edge matrix v_i - v_0, one row per edge from vertex 0."""
    v = as_vertex_array(vertices)
    return v[1:] - v[0]


def geometric_dimension(vertices) -> int:
    """Rank of the edge-vector span (affine dimension actually realized)."""
    e = edge_vectors(vertices)
    if e.shape[0] == 0:
        return 0
    s = np.linalg.svd(e, compute_uv=False)
    return int(np.sum(s > DEGENERACY_RTOL * s[0]))


def _require_full_rank(edges: np.ndarray, what: str) -> None:
    s = np.linalg.svd(edges, compute_uv=False)
    if s[0] == 0.0 or s[-1] <= DEGENERACY_RTOL * s[0]:
        raise DegenerateSimplexError(f"{what}: singular values {s}")


def circumsphere(vertices) -> tuple[np.ndarray, float]:
    """Circumcenter and circumradius of a full-dimensional simplex.

    Translates vertex 0 to the origin and solves the d x d system
    <c, v_i - v_0> = |v_i - v_0|^2 / 2 with partial pivoting.  The result is
    validated for equidistance before returning.
    """
    v = as_vertex_array(vertices)
    n, d = v.shape
    if n != d + 1:
        raise ValueError(f"circumsphere needs d+1 vertices in R^d, got {n} in R^{d}")
    rel = v[1:] - v[0]
    _require_full_rank(rel, "degenerate simplex")
    rhs = 0.5 * np.einsum("ij,ij->i", rel, rel)
    try:
        c = np.linalg.solve(rel, rhs)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - caught by rank check
        raise DegenerateSimplexError(str(exc)) from exc
    radius = float(np.linalg.norm(c))
    dists = np.linalg.norm(v - (v[0] + c), axis=1)
    if np.abs(dists - radius).max() > DEFAULT_TOL * (1.0 + radius):
        raise DegenerateSimplexError("circumcenter solve left a large residual")
    return v[0] + c, radius


def height_above_facet(vertices, vertex_index: int) -> float:
    """Distance from one vertex to the affine hull of the remaining vertices.

    Works for any k-simplex in any ambient dimension; the projection is a
    least-squares solve on the facet's edge span.
    """
    v = as_vertex_array(vertices)
    n = v.shape[0]
    if n < 2:
        raise ValueError("a 0-simplex has no facet")
    if not 0 <= vertex_index < n:
        raise IndexError(f"vertex index {vertex_index} out of range for {n} vertices")
    facet = np.delete(v, vertex_index, axis=0)
    w = v[vertex_index] - facet[0]
    span = facet[1:] - facet[0]
    if span.shape[0] == 0:
        return float(np.linalg.norm(w))
    _require_full_rank(span, "degenerate facet")
    coef, *_ = np.linalg.lstsq(span.T, w, rcond=None)
    return float(np.linalg.norm(w - span.T @ coef))


def barycentric_coordinates(vertices, point) -> np.ndarray:
    """Barycentric coordinates of a point w.r.t. a non-degenerate simplex.

    For a k-simplex in R^d with k < d the point must lie in the affine hull
    (checked via the least-squares residual).
    """
    v = as_vertex_array(vertices)
    p = np.asarray(point, dtype=float)
    if p.shape != (v.shape[1],):
        raise ValueError(f"dimension mismatch: point {p.shape} vs vertices {v.shape}")
    n = v.shape[0]
    a = np.vstack([np.ones(n), v.T])
    b = np.concatenate([[1.0], p])
    lam, *_ = np.linalg.lstsq(a, b, rcond=None)
    if np.linalg.norm(a @ lam - b) > DEFAULT_TOL * (1.0 + np.linalg.norm(b)):
        raise ValueError("point does not lie in the affine hull of the simplex")
    return lam


@dataclass(frozen=True)
class SimplexMeasures:
    """Bundle of coordinate-derived quality measures of one simplex."""

    circumcenter: np.ndarray
    circumradius: float
    longest_edge: float
    heights: np.ndarray
    thickness: float
    aspect_ratio: float


def simplex_measures(vertices) -> SimplexMeasures:
    """All quality measures of a full-dimensional simplex, from coordinates alone.

    thickness = min height / longest edge, aspect = min height / (2 R);
    both are defined as 1 for a 0-simplex.
    """
    v = as_vertex_array(vertices)
    n, d = v.shape
    if n == 1:
        return SimplexMeasures(v[0].copy(), 0.0, 0.0, np.zeros(0), 1.0, 1.0)
    if n != d + 1:
        raise ValueError(f"expected a full-dimensional simplex, got {n} vertices in R^{d}")
    center, radius = circumsphere(v)
    diff = v[:, None, :] - v[None, :, :]
    eta = float(np.sqrt((diff * diff).sum(axis=-1).max()))
    heights = np.array([height_above_facet(v, i) for i in range(n)])
    h_min = float(heights.min())
    return SimplexMeasures(
        circumcenter=center,
        circumradius=radius,
        longest_edge=eta,
        heights=heights,
        thickness=h_min / eta,
        aspect_ratio=h_min / (2.0 * radius),
    )

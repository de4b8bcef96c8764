"""Distorted integer grids, the root lattice A_d and its dual.

The diagonal distortion x -> x - ((1-delta)/d) * sum(x) * ones fixes the
zero-sum hyperplane pointwise and scales the diagonal direction by delta.
delta = 1 is the identity, delta = 0 the orthogonal projection onto the
hyperplane, and delta = sqrt(d+1) stretches the grid onto a copy of A_d.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .geometry import DEGENERACY_RTOL

# Hard cap on brute-force enumeration candidates.
ENUMERATION_BUDGET = 10**8


class EnumerationBudgetError(RuntimeError):
    """A brute-force enumeration would exceed the candidate budget."""


def distort(x, delta: float) -> np.ndarray:
    """Apply the diagonal distortion to one point or a stack of points.

    The last axis is the coordinate axis; the map is
    x -> x - ((1 - delta)/d) * sum(x) * (1, ..., 1).
    """
    x = np.asarray(x, dtype=float)
    if x.ndim == 0 or x.shape[-1] < 1:
        raise ValueError("distort expects points with at least one coordinate")
    d = x.shape[-1]
    s = x.sum(axis=-1, keepdims=True)
    return x - ((1.0 - delta) / d) * s


def distortion_inverse(delta: float) -> float:
    """Distortion parameter of the inverse map (diagonal scale 1/delta)."""
    if delta == 0.0:
        raise ValueError("the projection delta = 0 is not invertible")
    return 1.0 / delta


@dataclass(frozen=True)
class LatticeSpec:
    """A lattice given by generator rows.

    det is the volume of a fundamental cell (product of the positive singular
    values of the generator matrix), which also serves full-rank sublattices
    of a hyperplane.
    """

    name: str
    ambient_dim: int
    basis: np.ndarray
    det: float
    singular_values: np.ndarray


def make_lattice(name: str, basis) -> LatticeSpec:
    """Build a LatticeSpec from generator rows, rejecting dependent generators."""
    b = np.asarray(basis, dtype=float)
    if b.ndim != 2 or b.shape[0] < 1 or b.shape[0] > b.shape[1]:
        raise ValueError(f"generator matrix of shape {b.shape} is not a row basis")
    s = np.linalg.svd(b, compute_uv=False)
    if s[0] == 0.0 or s[-1] <= DEGENERACY_RTOL * s[0]:
        raise ValueError(f"{name}: generators are linearly dependent (singular values {s})")
    return LatticeSpec(
        name=name,
        ambient_dim=b.shape[1],
        basis=b,
        det=float(np.prod(s)),
        singular_values=s,
    )


def distorted_grid_basis(d: int, delta: float) -> LatticeSpec:
    """Basis of the distorted grid: rows are the distorted standard basis vectors."""
    if d < 1:
        raise ValueError(f"dimension must be >= 1, got {d}")
    if delta == 0.0:
        raise ValueError("delta = 0 projects the grid onto a hyperplane; basis is degenerate")
    return make_lattice(f"distorted-grid(d={d}, delta={delta})", distort(np.eye(d), delta))


def a_basis(d: int) -> LatticeSpec:
    """Generators u_i = e_1 - e_{i+1} of the zero-sum sublattice of Z^{d+1}.

    This choice has Gram matrix 2 on the diagonal and 1 off it.
    """
    if d < 1:
        raise ValueError(f"dimension must be >= 1, got {d}")
    b = np.zeros((d, d + 1))
    b[:, 0] = 1.0
    b[np.arange(d), np.arange(1, d + 1)] = -1.0
    return make_lattice(f"A({d})", b)


def a_star_basis(d: int) -> LatticeSpec:
    """Generators of the dual of the zero-sum lattice, inside the hyperplane.

    g_k has k leading entries (d+1-k)/(d+1) and d+1-k trailing entries
    -k/(d+1); it pairs integrally with every e_i - e_j.
    """
    if d < 1:
        raise ValueError(f"dimension must be >= 1, got {d}")
    b = np.empty((d, d + 1))
    for k in range(1, d + 1):
        b[k - 1, :k] = (d + 1 - k) / (d + 1)
        b[k - 1, k:] = -k / (d + 1)
    return make_lattice(f"A*({d})", b)


def gram(spec: LatticeSpec) -> np.ndarray:
    """Gram matrix of the generator rows."""
    return spec.basis @ spec.basis.T


def _coefficient_blocks(n: int, bound: int, block_dims: int = 5):
    """Yield integer coefficient vectors with max-norm <= bound, in blocks."""
    rng = np.arange(-bound, bound + 1)
    tail_n = min(n, block_dims)
    tail = np.stack(
        np.meshgrid(*([rng] * tail_n), indexing="ij"), axis=-1
    ).reshape(-1, tail_n)
    if n == tail_n:
        yield tail
        return
    for head in itertools.product(rng.tolist(), repeat=n - tail_n):
        block = np.empty((tail.shape[0], n))
        block[:, : n - tail_n] = head
        block[:, n - tail_n:] = tail
        yield block


def shortest_vector(spec: LatticeSpec, coeff_bound: int = 4) -> float:
    """Length of the shortest nonzero lattice vector, by coefficient enumeration.

    Plain box enumeration over integer coefficients with max-norm <= coeff_bound;
    raises EnumerationBudgetError if the candidate count exceeds the budget.
    """
    if coeff_bound < 1:
        raise ValueError(f"coeff_bound must be >= 1, got {coeff_bound}")
    n = spec.basis.shape[0]
    if (2 * coeff_bound + 1) ** n > ENUMERATION_BUDGET:
        raise EnumerationBudgetError(
            f"{(2 * coeff_bound + 1) ** n} candidates exceed the budget {ENUMERATION_BUDGET}"
        )
    best = math.inf
    for block in _coefficient_blocks(n, coeff_bound):
        vectors = block @ spec.basis
        norms_sq = np.einsum("ij,ij->i", vectors, vectors)
        norms_sq[(block == 0).all(axis=1)] = np.inf
        best = min(best, float(norms_sq.min()))
    return math.sqrt(best)


@dataclass(frozen=True)
class IsometryReport:
    """Outcome of one structural lattice identification check."""

    claim: str
    passed: bool
    max_deviation: float
    details: dict

    def __str__(self) -> str:
        verdict = "pass" if self.passed else "FAIL"
        return f"[{verdict}] {self.claim} (max deviation {self.max_deviation:.3e})"


def check_isometry_T0_to_Astar(d: int, box: int = 2) -> IsometryReport:
    """Set equality of the projected grid and the dual lattice, inside a ball.

    Compares {T_0(z) : z integer, |z|_inf <= box} with the span of
    a_star_basis(d-1) embedded in the zero-sum hyperplane of R^d, both
    intersected with a ball whose radius keeps the grid-side enumeration
    provably complete.  Points are compared exactly on d-scaled integers.
    """
    if d < 2:
        raise ValueError(f"dimension must be >= 2, got {d}")
    if box < 1:
        raise ValueError(f"box must be >= 1, got {box}")
    if (2 * box + 1) ** d > ENUMERATION_BUDGET:
        raise EnumerationBudgetError(f"box {box} too large in dimension {d}")

    # Scaled radius^2 as an exact rational: (d*r)^2 with r = (box-1/2)*sqrt(d/(d-1)).
    r2_scaled = Fraction(d**3 * (2 * box - 1) ** 2, 4 * (d - 1))

    def in_ball(scaled_pt: np.ndarray) -> bool:
        return Fraction(int((scaled_pt**2).sum()), 1) <= r2_scaled

    rng = np.arange(-box, box + 1)
    grid = np.stack(np.meshgrid(*([rng] * d), indexing="ij"), axis=-1).reshape(-1, d)
    scaled_grid = d * grid - grid.sum(axis=1, keepdims=True)  # = d * T_0(z), integer
    grid_set = {tuple(int(c) for c in p) for p in scaled_grid if in_ball(p)}

    # d * a_star_basis(d-1): integer rows ((d-k) repeated k times, -k repeated d-k).
    gen = np.empty((d - 1, d), dtype=np.int64)
    for k in range(1, d):
        gen[k - 1, :k] = d - k
        gen[k - 1, k:] = -k
    m_bound = box * d
    if (2 * m_bound + 1) ** (d - 1) > ENUMERATION_BUDGET:
        raise EnumerationBudgetError(f"coefficient box {m_bound} too large in dimension {d}")
    dual_set = set()
    mrange = np.arange(-m_bound, m_bound + 1)
    coeffs = np.stack(
        np.meshgrid(*([mrange] * (d - 1)), indexing="ij"), axis=-1
    ).reshape(-1, d - 1)
    points = coeffs @ gen
    for p in points:
        if in_ball(p):
            dual_set.add(tuple(int(c) for c in p))

    missing_from_dual = sorted(grid_set - dual_set)
    missing_from_grid = sorted(dual_set - grid_set)
    passed = not missing_from_dual and not missing_from_grid and len(grid_set) > 1
    return IsometryReport(
        claim=f"projected grid equals dual lattice of A({d - 1}) (d={d}, box={box})",
        passed=passed,
        max_deviation=0.0 if passed else float(len(missing_from_dual) + len(missing_from_grid)),
        details={
            "points_compared": len(grid_set),
            "missing_from_dual": missing_from_dual[:8],
            "missing_from_grid": missing_from_grid[:8],
        },
    )


def check_isometry_to_Ad(d: int) -> IsometryReport:
    """Gram equality: the grid distorted by sqrt(d+1) has the Gram matrix of A_d."""
    if d < 1:
        raise ValueError(f"dimension must be >= 1, got {d}")
    gamma = math.sqrt(d + 1.0)
    g_distorted = gram(distorted_grid_basis(d, gamma))
    g_a = gram(a_basis(d))
    dev = float(np.abs(g_distorted - g_a).max())
    return IsometryReport(
        claim=f"grid distorted by sqrt({d + 1}) is isometric to A({d})",
        passed=dev <= 1e-12,
        max_deviation=dev,
        details={"gram_distorted": g_distorted.tolist(), "gram_a": g_a.tolist()},
    )


def check_isometry_to_Astar_at_critical(d: int) -> IsometryReport:
    """Scalar invariants: at the critical distortion the grid matches the dual lattice.

    Compares the closed-form circumradius and protection of the distorted grid
    at delta^2 = 1/(d+1) with the permutahedral constants, to 1e-12 relative.
    """
    from . import closed_forms  # local import to avoid a cycle

    if d < 2:
        raise ValueError(f"dimension must be >= 2, got {d}")
    delta = closed_forms.Delta.critical(d)
    consts = closed_forms.permutahedral_constants(d)
    pairs = {
        "circumradius": (closed_forms.circumradius(d, delta), consts.delaunay_radius),
        "protection": (closed_forms.protection(d, delta), consts.protection),
        "normalized_protection": (
            closed_forms.normalized_protection(d, delta),
            consts.normalized_protection,
        ),
    }
    dev = max(abs(a - b) / abs(b) for a, b in pairs.values())
    return IsometryReport(
        claim=f"critically distorted grid carries the dual-lattice constants (d={d})",
        passed=dev <= 1e-12,
        max_deviation=dev,
        details={k: {"grid": a, "dual": b} for k, (a, b) in pairs.items()},
    )

"""Brute-force oracles that re-derive the closed forms from coordinates.

Each check enumerates actual lattice points (or actual simplices) and compares
against the formula layer, reporting measured value, reference value and the
deviation.  Nothing here reuses the closed-form piecewise case analysis; the
point is that the two routes are independent.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import closed_forms, freudenthal, geometry, lattices
from .closed_forms import Delta, as_delta
from .geometry import DEFAULT_TOL


@dataclass(frozen=True)
class OracleReport:
    """Outcome of one oracle comparison."""

    claim: str
    params: dict
    measured: float
    reference: float
    max_deviation: float
    tolerance: float
    passed: bool
    details: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "claim": self.claim,
            "params": self.params,
            "measured": self.measured,
            "reference": self.reference,
            "max_deviation": self.max_deviation,
            "tolerance": self.tolerance,
            "passed": self.passed,
            "details": self.details,
        }

    def __str__(self) -> str:
        verdict = "pass" if self.passed else "FAIL"
        return (
            f"[{verdict}] {self.claim}: measured {self.measured:.12g}, "
            f"reference {self.reference:.12g}, deviation {self.max_deviation:.3e} "
            f"(tolerance {self.tolerance:.1e})"
        )


def _integer_box(center: np.ndarray, box: int) -> np.ndarray:
    """All integer points z with |z - center|_inf <= box, as an (N, d) array."""
    ranges = [np.arange(c - box, c + box + 1) for c in center]
    return np.stack(np.meshgrid(*ranges, indexing="ij"), axis=-1).reshape(-1, len(center))


def _grid_points_near(dl: Delta, target: np.ndarray, box: int) -> np.ndarray:
    """Integer preimages around the distortion preimage of a target point."""
    preimage = lattices.distort(target, lattices.distortion_inverse(dl.value))
    return _integer_box(np.rint(preimage).astype(np.int64), box)


def _drop_rows(points: np.ndarray, excluded: np.ndarray) -> np.ndarray:
    keep = ~(points[:, None, :] == excluded[None, :, :]).all(axis=-1).any(axis=1)
    return points[keep]


def protection_oracle(d: int, delta, box: int = 3, tol: float = DEFAULT_TOL) -> OracleReport:
    """Measure the protection of the distorted canonical simplex by enumeration.

    Enumerates every grid point whose integer preimage is within box of the
    circumcenter's preimage, drops the simplex vertices, and takes the minimum
    distance slack to the circumsphere.  Confirms the empty circumball, and for
    delta < 1 that the minimizers are exactly the regime's facet neighbours.
    """
    dl = as_delta(delta, d)
    if box < 1:
        raise ValueError(f"box must be >= 1, got {box}")
    if (2 * box + 1) ** d > lattices.ENUMERATION_BUDGET:
        raise lattices.EnumerationBudgetError(f"box {box} too large in dimension {d}")
    chain = freudenthal.canonical_simplex(d)
    center = closed_forms.circumcenter(d, dl)
    radius = closed_forms.circumradius(d, dl)
    candidates = _drop_rows(_grid_points_near(dl, center, box), chain.vertices())
    dist = np.linalg.norm(lattices.distort(candidates, dl.value) - center, axis=1)
    measured = float(dist.min()) - radius
    reference = closed_forms.protection(d, dl)

    ball_ok = bool(dist.min() >= radius - tol)
    minimizers = {tuple(int(c) for c in z) for z in candidates[dist <= dist.min() + tol]}
    opposite = freudenthal.opposite_set(chain)
    reg = closed_forms.regime(d, dl)
    if reg == closed_forms.REGIME_ABOVE:
        expected = opposite[1:d]
    elif reg == closed_forms.REGIME_BELOW:
        expected = opposite[[0, d]]
    else:
        expected = opposite
    expected_set = {tuple(int(c) for c in z) for z in expected}
    if dl.value < 1.0:
        minimizers_ok = minimizers == expected_set
    else:
        # At delta = 1 the whole grid is cospherical around each cube; the
        # expected neighbours still sit on the sphere but are not alone.
        minimizers_ok = expected_set <= minimizers
    deviation = abs(measured - reference)
    return OracleReport(
        claim=f"enumerated protection matches closed form (d={d}, delta={dl.value:g})",
        params={"d": d, "delta": dl.value, "box": box},
        measured=measured,
        reference=reference,
        max_deviation=deviation,
        tolerance=tol,
        passed=bool(deviation <= tol and ball_ok and minimizers_ok),
        details={
            "regime": reg,
            "empty_circumball": ball_ok,
            "minimizers": sorted(minimizers),
            "expected_minimizers": sorted(expected_set),
            "extra_cospherical_points": len(minimizers - expected_set),
            "points_enumerated": int(candidates.shape[0]),
        },
    )


def uniform_protection_check(d: int, delta, box: int = 2, tol: float = DEFAULT_TOL) -> OracleReport:
    """Every chain simplex of the cube must report the same enumerated protection.

    Circumspheres are solved numerically per simplex (no closed forms), each
    protection is enumerated locally, and the spread across all d! simplices is
    compared against tol; the common value is also checked against the formula.
    """
    dl = as_delta(delta, d)
    chains = freudenthal.enumerate_cube_simplices(d)
    values = np.empty(len(chains))
    for idx, chain in enumerate(chains):
        verts = freudenthal.distorted_simplex(chain, dl.value)
        center, radius = geometry.circumsphere(verts)
        candidates = _drop_rows(_grid_points_near(dl, center, box), chain.vertices())
        dist = np.linalg.norm(lattices.distort(candidates, dl.value) - center, axis=1)
        values[idx] = dist.min() - radius
    spread = float(np.ptp(values))
    reference = closed_forms.protection(d, dl)
    worst = float(np.abs(values - reference).max())
    return OracleReport(
        claim=f"all {len(chains)} cube simplices share one protection (d={d}, delta={dl.value:g})",
        params={"d": d, "delta": dl.value, "box": box},
        measured=float(values.max()),
        reference=reference,
        max_deviation=max(spread, worst),
        tolerance=tol,
        passed=bool(spread <= tol and worst <= tol),
        details={"spread": spread, "worst_vs_closed_form": worst, "simplices": len(chains)},
    )


def minkowski_check(d: int, delta, coeff_bound: int = 4, tol: float = DEFAULT_TOL) -> OracleReport:
    """Inequality chain: protection <= shortest vector <= sqrt(d) det^(1/d).

    The shortest vector is enumerated from the distorted grid basis; the
    determinant of that grid is delta, giving the bound sqrt(d) delta^(1/d).
    """
    dl = as_delta(delta, d)
    prot = closed_forms.protection(d, dl)
    spec = lattices.distorted_grid_basis(d, dl.value)
    lam = lattices.shortest_vector(spec, coeff_bound=coeff_bound)
    bound = math.sqrt(d) * spec.det ** (1.0 / d)
    gap_low = prot - lam
    gap_high = lam - bound
    passed = bool(gap_low <= tol and gap_high <= tol)
    return OracleReport(
        claim=f"protection <= shortest vector <= Minkowski bound (d={d}, delta={dl.value:g})",
        params={"d": d, "delta": dl.value, "coeff_bound": coeff_bound},
        measured=lam,
        reference=bound,
        max_deviation=max(gap_low, gap_high, 0.0),
        tolerance=tol,
        passed=passed,
        details={"protection": prot, "shortest_vector": lam, "minkowski_bound": bound,
                 "grid_determinant": spec.det},
    )


def figure_sweep(dims, deltas) -> list[closed_forms.QualityRecord]:
    """Quality records over a (dimension, distortion) grid, sorted by (d, delta).

    deltas may mix numbers with the token 'crit', which resolves per dimension;
    duplicate values within a dimension are dropped.
    """
    dims = [int(d) for d in dims]
    if not dims:
        raise ValueError("no dimensions given")
    for d in dims:
        if d < 2:
            raise ValueError(f"protection sweeps need d >= 2, got {d}")
    deltas = list(deltas)
    if not deltas:
        raise ValueError("no distortion values given")
    records = []
    for d in sorted(set(dims)):
        resolved = sorted({as_delta(token, d).value: as_delta(token, d) for token in deltas}.items())
        for _, dl in resolved:
            records.append(closed_forms.quality_record(d, dl))
    return records

"""Kuhn chain simplices of the unit cube and their facet neighbours.

A chain simplex walks from a corner of a unit cube to the opposite corner,
adding one unit step per vertex; the step order is a permutation of the
coordinates, so the cube splits into d! congruent simplices.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .lattices import distort

# d! simplices with d+1 vertices each get out of hand quickly.
MAX_ENUMERATION_DIM = 8


@dataclass(frozen=True)
class ChainSimplex:
    """Monotone lattice chain: vertex i adds a unit step at coordinate (d+1) - pi(i).

    permutation is pi as a tuple over {1..d}; translation is the integer corner
    the chain starts from.
    """

    permutation: tuple[int, ...]
    translation: tuple[int, ...]

    def __post_init__(self):
        d = len(self.permutation)
        if sorted(self.permutation) != list(range(1, d + 1)):
            raise ValueError(f"{self.permutation} is not a permutation of 1..{d}")
        if len(self.translation) != d:
            raise ValueError(
                f"translation length {len(self.translation)} does not match dimension {d}"
            )

    @property
    def dim(self) -> int:
        return len(self.permutation)

    def step_coordinates(self) -> list[int]:
        """0-based coordinate index incremented at each of the d steps."""
        d = self.dim
        return [d - p for p in self.permutation]

    def vertices(self) -> np.ndarray:
        """Integer vertices as an array of shape (d+1, d), chain order."""
        d = self.dim
        steps = np.zeros((d + 1, d), dtype=np.int64)
        for i, c in enumerate(self.step_coordinates(), start=1):
            steps[i, c] = 1
        return np.asarray(self.translation, dtype=np.int64) + np.cumsum(steps, axis=0)


def canonical_simplex(d: int) -> ChainSimplex:
    """The identity chain: vertex i has d-i zeros followed by i ones."""
    if d < 1:
        raise ValueError(f"dimension must be >= 1, got {d}")
    return ChainSimplex(tuple(range(1, d + 1)), (0,) * d)


def enumerate_cube_simplices(d: int) -> list[ChainSimplex]:
    """All d! chain simplices of the unit cube, in lexicographic permutation order."""
    if d < 1:
        raise ValueError(f"dimension must be >= 1, got {d}")
    if d > MAX_ENUMERATION_DIM:
        raise ValueError(
            f"enumerating {math.factorial(d)} simplices (d={d}) exceeds the supported "
            f"dimension {MAX_ENUMERATION_DIM}"
        )
    zero = (0,) * d
    return [ChainSimplex(p, zero) for p in itertools.permutations(range(1, d + 1))]


def distorted_simplex(chain: ChainSimplex, delta: float) -> np.ndarray:
    """Float vertices of the chain after the diagonal distortion."""
    return distort(chain.vertices(), delta)


def _canonical_opposite_points(d: int) -> np.ndarray:
    """Facet-neighbour vertices of the identity chain, row i opposite vertex i.

    Row 0 is (1,...,1,2) (the chain continues past the top corner), rows
    1..d-1 swap one adjacent step pair, row d is (-1,0,...,0) (the chain
    extended below the bottom corner).
    """
    p = np.zeros((d + 1, d), dtype=np.int64)
    p[0, :] = 1
    p[0, d - 1] = 2
    for i in range(1, d):
        # (0 x (d-i-1), 1, 0, 1 x (i-1))
        p[i, d - i - 1] = 1
        p[i, d - i + 1:] = 1
    p[d, 0] = -1
    return p


def opposite_set(chain: ChainSimplex) -> np.ndarray:
    """Integer points opposite each vertex across the corresponding facet.

    Row i is the unique lattice point that, together with the facet omitting
    vertex i, forms the neighbouring chain simplex.  Computed by relabelling
    the coordinates of the identity chain's neighbours: step i of the identity
    chain uses coordinate d-i, step i of this chain uses d-pi(i).
    """
    d = chain.dim
    canonical = _canonical_opposite_points(d)
    index_map = np.empty(d, dtype=np.int64)
    for i, p in enumerate(chain.permutation, start=1):
        index_map[d - i] = d - p
    out = np.zeros_like(canonical)
    out[:, index_map] = canonical
    return out + np.asarray(chain.translation, dtype=np.int64)

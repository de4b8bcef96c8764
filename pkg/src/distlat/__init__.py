"""Delaunay quality measures of diagonally distorted integer grids.

The package computes, in closed form and by brute-force coordinate oracles,
the circumgeometry, protection and shape quality of the Delaunay simplices of
the lattice obtained by shrinking the integer grid along the main diagonal.
"""
from .closed_forms import (
    CanonicalSimplexGeometry,
    Delta,
    PermutahedralConstants,
    QualityRecord,
    as_delta,
    aspect_ratio,
    barycentric_weights,
    canonical_geometry,
    circumcenter,
    circumradius,
    critical_delta,
    edge_lengths,
    heights,
    heights_and_longest_edge,
    longest_edge,
    normalized_protection,
    permutahedral_constants,
    power_protection,
    protection,
    protection_candidates,
    quality_record,
    regime,
    thickness,
)
from .freudenthal import ChainSimplex, canonical_simplex, distorted_simplex, enumerate_cube_simplices, opposite_set
from .geometry import (
    DegenerateSimplexError,
    SimplexMeasures,
    barycentric_coordinates,
    circumsphere,
    distance,
    height_above_facet,
    simplex_measures,
)
from .lattices import (
    EnumerationBudgetError,
    IsometryReport,
    LatticeSpec,
    a_basis,
    a_star_basis,
    check_isometry_T0_to_Astar,
    check_isometry_to_Ad,
    check_isometry_to_Astar_at_critical,
    distort,
    distorted_grid_basis,
    gram,
    make_lattice,
    shortest_vector,
)
from .verification import (
    OracleReport,
    figure_sweep,
    minkowski_check,
    protection_oracle,
    uniform_protection_check,
)

__version__ = "0.1.0"

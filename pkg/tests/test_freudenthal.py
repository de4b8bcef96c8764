import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from distlat import freudenthal, geometry
from distlat.lattices import distort
from _oracles import facet_plane_side, is_unit_step_chain, kuhn_facet_neighbours


def test_canonical_vertices_staircase():
    v = freudenthal.canonical_simplex(4).vertices()
    expected = [
        [0, 0, 0, 0],
        [0, 0, 0, 1],
        [0, 0, 1, 1],
        [0, 1, 1, 1],
        [1, 1, 1, 1],
    ]
    assert v.tolist() == expected


def test_chain_validation():
    with pytest.raises(ValueError):
        freudenthal.ChainSimplex((1, 3), (0, 0))  # not a permutation of 1..2
    with pytest.raises(ValueError):
        freudenthal.ChainSimplex((2, 1), (0,))  # translation length mismatch


@settings(deadline=None, max_examples=60)
@given(st.integers(min_value=1, max_value=6), st.integers(min_value=0, max_value=2**31 - 1))
def test_vertices_form_unit_step_chain(d, seed):
    rng = np.random.default_rng(seed)
    perm = tuple(int(p) + 1 for p in rng.permutation(d))
    shift = tuple(int(t) for t in rng.integers(-3, 4, size=d))
    v = freudenthal.ChainSimplex(perm, shift).vertices()
    assert is_unit_step_chain(v)
    assert tuple(v[0]) == shift
    assert tuple(v[-1]) == tuple(s + 1 for s in shift)


@pytest.mark.parametrize("d", [1, 2, 3, 4, 5])
def test_cube_split_count_and_order(d):
    chains = freudenthal.enumerate_cube_simplices(d)
    assert len(chains) == math.factorial(d)
    assert chains[0].permutation == tuple(range(1, d + 1))
    assert len({c.permutation for c in chains}) == len(chains)


def test_enumeration_dimension_guard():
    with pytest.raises(ValueError):
        freudenthal.enumerate_cube_simplices(9)


@pytest.mark.parametrize("d", [1, 2, 3, 4, 5, 6])
def test_cube_split_volume(d):
    total = 0.0
    for chain in freudenthal.enumerate_cube_simplices(d):
        vol = abs(np.linalg.det(geometry.edge_vectors(chain.vertices()))) / math.factorial(d)
        assert vol == pytest.approx(1.0 / math.factorial(d), rel=1e-12)
        total += vol
    assert total == pytest.approx(1.0, rel=1e-9)


@pytest.mark.parametrize("d", [2, 3, 4])
def test_cube_split_covers_interior_points_once(d):
    rng = np.random.default_rng(55 + d)
    chains = freudenthal.enumerate_cube_simplices(d)
    for x in rng.uniform(0.05, 0.95, size=(25, d)):
        strict = 0
        for chain in chains:
            lam = geometry.barycentric_coordinates(chain.vertices().astype(float), x)
            if lam.min() > 1e-9:
                strict += 1
        assert strict == 1  # ties have measure zero at these sample points


def test_distorted_canonical_frozen():
    got = freudenthal.distorted_simplex(freudenthal.canonical_simplex(2), 0.5)
    assert got == pytest.approx(np.array([[0.0, 0.0], [-0.25, 0.75], [0.5, 0.5]]))


def test_opposite_set_frozen_d3():
    opp = freudenthal.opposite_set(freudenthal.canonical_simplex(3))
    assert opp.tolist() == [[1, 1, 2], [0, 1, 0], [1, 0, 1], [-1, 0, 0]]


@pytest.mark.parametrize("d", [2, 3, 4, 5, 6])
def test_opposite_coordinate_sums(d):
    opp = freudenthal.opposite_set(freudenthal.canonical_simplex(d))
    assert opp.sum(axis=1).tolist() == [d + 1] + list(range(1, d)) + [-1]


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_opposite_set_matches_exhaustive_search(d):
    chain = freudenthal.canonical_simplex(d)
    v = chain.vertices()
    opp = freudenthal.opposite_set(chain)
    for i in range(d + 1):
        facet = np.delete(v, i, axis=0)
        # the only completions of the facet are the omitted vertex and its mirror
        assert kuhn_facet_neighbours(facet) == {tuple(v[i]), tuple(opp[i])}
        assert tuple(opp[i]) != tuple(v[i])


@pytest.mark.parametrize("d", [2, 3, 4])
def test_opposite_set_matches_exhaustive_search_relabelled(d):
    rng = np.random.default_rng(17 * d)
    for _ in range(3):
        perm = tuple(int(p) + 1 for p in rng.permutation(d))
        shift = tuple(int(t) for t in rng.integers(-2, 3, size=d))
        chain = freudenthal.ChainSimplex(perm, shift)
        v = chain.vertices()
        opp = freudenthal.opposite_set(chain)
        for i in range(d + 1):
            facet = np.delete(v, i, axis=0)
            assert kuhn_facet_neighbours(facet) == {tuple(v[i]), tuple(opp[i])}


@pytest.mark.parametrize("d", [2, 3, 4, 5])
@pytest.mark.parametrize("delta", [0.3, 0.9, 1.0])
def test_opposite_points_lie_across_their_facet(d, delta):
    chain = freudenthal.canonical_simplex(d)
    v = freudenthal.distorted_simplex(chain, delta)
    opp_img = distort(freudenthal.opposite_set(chain).astype(float), delta)
    for i in range(d + 1):
        facet = np.delete(v, i, axis=0)
        side_vertex = facet_plane_side(facet, v[i])
        side_opp = facet_plane_side(facet, opp_img[i])
        assert side_vertex != 0.0 and side_opp != 0.0
        assert side_vertex == -side_opp


def test_all_cube_simplices_share_each_interior_facet(d=3):
    # every interior facet of the cube triangulation belongs to exactly 2 chains
    facets = {}
    for chain in freudenthal.enumerate_cube_simplices(d):
        v = chain.vertices()
        for i in range(d + 1):
            key = frozenset(map(tuple, np.delete(v, i, axis=0)))
            facets.setdefault(key, []).append(chain.permutation)
    counts = sorted(len(owners) for owners in facets.values())
    assert set(counts) <= {1, 2}
    interior = sum(1 for c in counts if c == 2)
    assert interior > 0

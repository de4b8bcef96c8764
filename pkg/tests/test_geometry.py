import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from distlat import geometry
from _oracles import circumcenter_least_squares


def random_simplex(rng, d):
    # rejection keeps the least-squares oracle comparison well conditioned
    while True:
        v = rng.standard_normal((d + 1, d))
        if np.linalg.svd(v[1:] - v[0], compute_uv=False).min() > 0.3:
            return v


def test_distance_basic():
    assert geometry.distance([0.0, 0.0, 0.0], [1.0, 1.0, 1.0]) == pytest.approx(np.sqrt(3.0))
    with pytest.raises(ValueError):
        geometry.distance([0.0, 1.0], [0.0, 1.0, 2.0])


def test_vertex_array_rejects_duplicates_and_nonfinite():
    with pytest.raises(ValueError):
        geometry.as_vertex_array([[0.0, 0.0], [0.0, 0.0], [1.0, 0.0]])
    with pytest.raises(ValueError):
        geometry.as_vertex_array([[0.0, np.nan], [1.0, 0.0]])


def test_circumsphere_unit_segment():
    c, r = geometry.circumsphere([[0.0], [1.0]])
    assert c == pytest.approx([0.5])
    assert r == pytest.approx(0.5)


def test_circumsphere_cube_chain_simplex():
    # corner-to-corner chain of the unit 3-cube: circumsphere is the cube's
    c, r = geometry.circumsphere([[0, 0, 0], [0, 0, 1], [0, 1, 1], [1, 1, 1]])
    assert c == pytest.approx([0.5, 0.5, 0.5])
    assert r == pytest.approx(np.sqrt(3.0) / 2.0)


def test_circumsphere_distorted_triangle_frozen():
    # hand elimination: c1^2 + c2^2 = (c1 + .25)^2 + (c2 - .75)^2
    #                              = (c1 - .5)^2 + (c2 - .5)^2
    # => -.5 c1 + 1.5 c2 = .625 and c1 + c2 = .5  =>  c = (1/16, 7/16)
    verts = [[0.0, 0.0], [-0.25, 0.75], [0.5, 0.5]]
    c, r = geometry.circumsphere(verts)
    assert c == pytest.approx([0.0625, 0.4375], abs=1e-14)
    assert r == pytest.approx(np.sqrt(0.1953125), abs=1e-14)


@pytest.mark.parametrize("d", [2, 3, 4, 5, 6])
def test_circumsphere_matches_least_squares_oracle(d):
    rng = np.random.default_rng(1000 + d)
    for _ in range(20):
        v = random_simplex(rng, d)
        c, r = geometry.circumsphere(v)
        c_ref, r_ref = circumcenter_least_squares(v)
        assert c == pytest.approx(c_ref, abs=1e-8)
        assert r == pytest.approx(r_ref, abs=1e-8)
        assert np.ptp(np.linalg.norm(v - c, axis=1)) < 1e-8


def test_circumsphere_rejects_degenerate():
    with pytest.raises(geometry.DegenerateSimplexError):
        geometry.circumsphere([[0.0, 0.0], [1.0, 1.0], [2.0, 2.0]])
    with pytest.raises(ValueError):
        geometry.circumsphere([[0.0, 0.0], [1.0, 0.0]])  # wrong vertex count


def test_height_right_triangle():
    v = np.array([[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]])
    assert geometry.height_above_facet(v, 0) == pytest.approx(np.sqrt(0.5))
    assert geometry.height_above_facet(v, 1) == pytest.approx(1.0)
    assert geometry.height_above_facet(v, 2) == pytest.approx(1.0)


def test_height_two_point_facet_in_3d():
    v = [[0.0, 0.0, 2.0], [0.0, 0.0, 0.0], [1.0, 0.0, 0.0]]
    assert geometry.height_above_facet(v, 0) == pytest.approx(2.0)


@settings(deadline=None, max_examples=40)
@given(st.integers(min_value=2, max_value=5), st.integers(min_value=0, max_value=2**31 - 1))
def test_heights_invariant_under_rigid_motion(d, seed):
    rng = np.random.default_rng(seed)
    v = random_simplex(rng, d)
    q, _ = np.linalg.qr(rng.standard_normal((d, d)))
    shift = rng.standard_normal(d)
    moved = v @ q.T + shift
    for i in range(d + 1):
        h = geometry.height_above_facet(v, i)
        h_moved = geometry.height_above_facet(moved, i)
        assert h == pytest.approx(h_moved, rel=1e-9, abs=1e-9)


def test_barycentric_roundtrip():
    rng = np.random.default_rng(7)
    for d in (2, 3, 5):
        v = random_simplex(rng, d)
        w = rng.dirichlet(np.ones(d + 1))
        point = w @ v
        got = geometry.barycentric_coordinates(v, point)
        assert got == pytest.approx(w, abs=1e-9)
        assert got.sum() == pytest.approx(1.0)


def test_barycentric_rejects_point_off_hull():
    v = np.array([[0.0, 0.0], [1.0, 0.0], [2.0, 0.0]])  # rank-deficient vertex set
    with pytest.raises(ValueError):
        geometry.barycentric_coordinates(v, [0.5, 0.5])


def test_geometric_dimension():
    assert geometry.geometric_dimension([[0.0, 0.0, 0.0], [1.0, 0.0, 0.0], [0.0, 1.0, 0.0]]) == 2
    assert geometry.geometric_dimension([[0.0, 0.0], [1.0, 1.0], [2.0, 2.0]]) == 1


def test_measures_equilateral_triangle():
    v = [[0.0, 0.0], [1.0, 0.0], [0.5, np.sqrt(3.0) / 2.0]]
    m = geometry.simplex_measures(v)
    assert m.circumradius == pytest.approx(1.0 / np.sqrt(3.0))
    assert m.longest_edge == pytest.approx(1.0)
    assert m.heights == pytest.approx(np.full(3, np.sqrt(3.0) / 2.0))
    assert m.thickness == pytest.approx(np.sqrt(3.0) / 2.0)
    assert m.aspect_ratio == pytest.approx(0.75)


def test_measures_point_and_segment():
    p = geometry.simplex_measures([[3.0, 4.0]])
    assert p.thickness == 1.0 and p.aspect_ratio == 1.0 and p.circumradius == 0.0
    s = geometry.simplex_measures([[0.0], [2.0]])
    assert s.thickness == 1.0
    assert s.aspect_ratio == 1.0
    assert s.circumradius == pytest.approx(1.0)


def test_measures_requires_full_dimension():
    with pytest.raises(ValueError):
        geometry.simplex_measures([[0.0, 0.0], [1.0, 0.0]])
    with pytest.raises(geometry.DegenerateSimplexError):
        geometry.simplex_measures([[0.0, 0.0], [1.0, 0.0], [2.0, 0.0]])

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hilbert_kit.errors import (
    CoincidentPoints,
    DegenerateHull,
    NonConvex,
    OriginNotInterior,
    ZeroDirection,
)
from hilbert_kit.geom import (
    CLOCKWISE,
    COLLINEAR,
    COUNTERCLOCKWISE,
    EMPTY,
    EPS,
    UNBOUNDED,
    ConvexPolygon,
    HalfPlane,
    Point,
    chord_through,
    classify_points,
    convex_hull,
    halfplane_intersection,
    orientation,
    point_in_polygon,
    ray_boundary_intersection,
)

from helpers import random_convex, random_interior, ray_exit_by_edges, square

coord = st.floats(-100, 100, allow_nan=False)
pt = st.tuples(coord, coord)


def test_orientation_examples():
    assert orientation((0, 0), (1, 0), (0, 1)) == COUNTERCLOCKWISE
    assert orientation((0, 0), (1, 0), (2, 0)) == COLLINEAR
    assert orientation((0, 0), (0, 1), (1, 0)) == CLOCKWISE


@given(pt, pt, pt)
def test_orientation_antisymmetric(p, q, r):
    o = orientation(p, q, r)
    assert orientation(q, p, r) == -o
    assert orientation(p, r, q) == -o
    assert orientation(r, q, p) == -o


def test_point_rejects_non_finite():
    with pytest.raises(ValueError):
        Point(float("nan"), 0)
    with pytest.raises(ValueError):
        Point(0, float("inf"))


def test_polygon_normalization():
    cw = ConvexPolygon([(-1, 1), (1, 1), (1, -1), (-1, -1)])
    assert cw == square()
    assert cw.area == pytest.approx(4)
    # duplicate and collinear vertices merge
    messy = ConvexPolygon([(-1, -1), (0, -1), (1, -1), (1, -1 + 1e-12), (1, 1), (-1, 1)])
    assert messy == square()
    with pytest.raises(NonConvex):
        ConvexPolygon([(0, 0), (2, 0), (1, 0.5), (2, 2), (0, 2)])
    # a pentagram turns left at every vertex but winds twice
    star = [(math.cos(a), math.sin(a)) for a in np.arange(5) * 4 * math.pi / 5]
    with pytest.raises(NonConvex):
        ConvexPolygon(star)


def test_halfplanes_describe_polygon(rng):
    poly = random_convex(rng)
    for v in poly.vertices:
        assert np.min(poly.slacks(v)) == pytest.approx(0, abs=1e-12)
    assert np.all(np.linalg.norm(poly.normals, axis=1) == pytest.approx(1))


@pytest.mark.parametrize("origin,direction,expected", [
    ((0, 0), (1, 0), (1, 0)),
    ((0.5, 0), (1, 0), (1, 0)),
    ((0, 0), (2, 1), (1, 0.5)),
])
def test_ray_boundary_intersection_examples(origin, direction, expected):
    got = ray_boundary_intersection(square(), origin, direction)
    assert tuple(got) == pytest.approx(expected, abs=1e-12)


def test_ray_boundary_errors():
    with pytest.raises(OriginNotInterior):
        ray_boundary_intersection(square(), (1, 0), (1, 0))
    with pytest.raises(OriginNotInterior):
        ray_boundary_intersection(square(), (3, 0), (1, 0))
    with pytest.raises(ZeroDirection):
        ray_boundary_intersection(square(), (0, 0), (0, 0))


def test_ray_matches_edge_by_edge_oracle(rng):
    for _ in range(200):
        poly = random_convex(rng)
        o = random_interior(rng, poly)
        d = rng.normal(size=2)
        got = ray_boundary_intersection(poly, o, d)
        want = ray_exit_by_edges(poly, o, d)
        assert math.dist(got, want) < 1e-9
        assert point_in_polygon(poly, got) == "boundary"
        # on the ray, ahead of the origin
        v = np.asarray(got) - np.asarray(o)
        assert abs(v[0] * d[1] - v[1] * d[0]) <= EPS
        assert v @ d > 0


@pytest.mark.parametrize("p,q,first,second", [
    ((0, 0), (0.5, 0), (-1, 0), (1, 0)),
    ((-0.5, 0), (0.5, 0), (-1, 0), (1, 0)),
    ((0, 0), (0.25, 0.25), (-1, -1), (1, 1)),
])
def test_chord_examples(p, q, first, second):
    ch = chord_through(square(), p, q)
    assert tuple(ch.first) == pytest.approx(first, abs=1e-12)
    assert tuple(ch.second) == pytest.approx(second, abs=1e-12)


def test_chord_swap_reverses(rng):
    for _ in range(50):
        poly = random_convex(rng)
        p, q = random_interior(rng, poly), random_interior(rng, poly)
        a, b = chord_through(poly, p, q), chord_through(poly, q, p)
        assert math.dist(a.first, b.second) < 1e-9
        assert math.dist(a.second, b.first) < 1e-9


def test_chord_coincident():
    with pytest.raises(CoincidentPoints):
        chord_through(square(), (0, 0), (0, 0))


def H(a, b, c):
    return HalfPlane(a, b, c)


def test_halfplane_examples():
    assert halfplane_intersection([H(1, 0, 1), H(-1, 0, 1), H(0, 1, 1), H(0, -1, 1)]) == square()
    assert halfplane_intersection([H(1, 0, 1), H(-1, 0, -2)]) is EMPTY
    diamond = ConvexPolygon([(1, 0), (0, 1), (-1, 0), (0, -1)])
    got = halfplane_intersection([H(1, 1, 1), H(-1, 1, 1), H(1, -1, 1), H(-1, -1, 1)])
    assert got.almost_equal(diamond, 1e-12)


def test_halfplane_unbounded_and_empty():
    assert halfplane_intersection([H(1, 0, 1)]) is UNBOUNDED
    assert halfplane_intersection([H(1, 1, 1), H(-1, 1, 1), H(1, -1, 1)]) is UNBOUNDED
    # a feasible slab is unbounded, a zero-width one empty
    assert halfplane_intersection([H(1, 0, 1), H(-1, 0, 1)]) is UNBOUNDED
    assert halfplane_intersection([H(1, 0, 0), H(-1, 0, 0), H(0, 1, 1), H(0, -1, 1)]) is EMPTY
    with pytest.raises(ValueError):
        halfplane_intersection([])


def test_halfplane_idempotent_and_feasible(rng):
    for _ in range(100):
        poly = random_convex(rng)
        planes = poly.halfplanes()
        extra = [H(*rng.normal(size=2), rng.uniform(0.5, 3)) for _ in range(5)]
        again = halfplane_intersection(planes)
        assert again.almost_equal(poly, 1e-9)
        mixed = halfplane_intersection(planes + extra)
        if mixed:
            for v in mixed.vertices:
                assert all(h.slack(v) >= -EPS for h in planes + extra)


def test_halfplane_duplicates_and_order(rng):
    poly = random_convex(rng)
    planes = poly.halfplanes()
    shuffled = [planes[i] for i in rng.permutation(len(planes))]
    assert halfplane_intersection(shuffled + planes).almost_equal(poly, 1e-9)


def test_convex_hull_examples():
    tri = convex_hull([(0, 0), (1, 0), (0, 1), (0.2, 0.2)])
    assert tri == ConvexPolygon([(0, 0), (1, 0), (0, 1)])
    sq = convex_hull([(1, 1), (-1, -1), (-1, 1), (1, -1)])
    assert sq.vertices[0] == Point(-1, -1)
    assert sq == square()
    with pytest.raises(DegenerateHull):
        convex_hull([(0, 0), (1, 0), (2, 0)])
    with pytest.raises(DegenerateHull):
        convex_hull([(0, 0), (0, 0), (1, 1)])


@settings(max_examples=60)
@given(st.lists(pt, min_size=3, max_size=30), st.randoms(use_true_random=False))
def test_convex_hull_permutation_and_duplication(points, rnd):
    try:
        hull = convex_hull(points)
    except DegenerateHull:
        return
    shuffled = list(points) + list(points[: len(points) // 2])
    rnd.shuffle(shuffled)
    assert convex_hull(shuffled) == hull


def test_point_in_polygon_examples():
    sq = square()
    assert point_in_polygon(sq, (0, 0)) == "interior"
    assert point_in_polygon(sq, (1, 0)) == "boundary"
    assert point_in_polygon(sq, (2, 0)) == "exterior"
    assert point_in_polygon(sq, (1 + 0.5 * EPS, 0)) == "boundary"
    assert point_in_polygon(sq, (1 - 2 * EPS, 0)) == "interior"


def test_classify_points_matches_scalar(rng):
    poly = random_convex(rng)
    pts = rng.uniform(-4, 4, size=(500, 2))
    pts = np.vstack([pts, poly.coords])
    codes = {"interior": 1, "boundary": 0, "exterior": -1}
    want = [codes[point_in_polygon(poly, p)] for p in pts]
    assert list(classify_points(poly, pts)) == want

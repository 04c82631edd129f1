import math

import numpy as np
import pytest

from hilbert_kit.algorithms import (
    circumcircle,
    metric_mst,
    min_enclosing_ball,
    prim_dense,
    weight_matrix,
)
from hilbert_kit.errors import DuplicatePoints, EmptyInput, OriginNotInterior
from hilbert_kit.geom import Point
from hilbert_kit.metrics import funk_distance, hilbert_distance

from helpers import (
    brute_force_circle,
    brute_force_mst_weight,
    prufer_trees,
    random_convex,
    random_interior,
    square,
)


@pytest.mark.parametrize("pts,center,radius", [
    ([(0, 0), (2, 0)], (1, 0), 1),
    ([(0, 0), (2, 0), (1, 1)], (1, 0), 1),
    ([(0, 0), (2, 0), (1, 2)], (1, 0.75), 1.25),
    ([(3, 4)], (3, 4), 0),
])
def test_meb_examples(pts, center, radius):
    c = min_enclosing_ball(pts)
    assert tuple(c.center) == pytest.approx(center, abs=1e-12)
    assert c.radius == pytest.approx(radius, abs=1e-12)


def test_meb_empty():
    with pytest.raises(EmptyInput):
        min_enclosing_ball([])


def test_meb_collinear_support():
    c = min_enclosing_ball([(0, 0), (1, 0), (2, 0), (4, 0)])
    assert tuple(c.center) == pytest.approx((2, 0))
    assert c.radius == pytest.approx(2)
    assert circumcircle(Point(0, 0), Point(1, 0), Point(2, 0)) is None


def test_meb_properties(rng):
    for _ in range(100):
        pts = rng.normal(size=(int(rng.integers(1, 40)), 2))
        c = min_enclosing_ball(pts)
        d = np.hypot(*(pts - tuple(c.center)).T)
        assert np.all(d <= c.radius + 1e-9)
        if len(pts) > 1:
            assert np.any(d > c.radius - 1e-6)
        perm = min_enclosing_ball(pts[rng.permutation(len(pts))], seed=7)
        assert perm.radius == pytest.approx(c.radius, abs=1e-12)
        assert math.dist(perm.center, c.center) < 1e-9


def test_meb_matches_brute_force(rng):
    for _ in range(100):
        pts = rng.uniform(-5, 5, size=(int(rng.integers(1, 13)), 2))
        c = min_enclosing_ball(pts)
        center, r = brute_force_circle(pts)
        assert c.radius == pytest.approx(r, abs=1e-9)


def test_meb_seed_is_reproducible(rng):
    pts = rng.normal(size=(50, 2))
    assert min_enclosing_ball(pts, seed=3) == min_enclosing_ball(pts, seed=3)


LINE = [(-0.5, 0), (0, 0), (0.5, 0)]


def test_mst_examples():
    t = metric_mst(square(), LINE, "hilbert")
    assert [(i, j) for i, j, _ in t.edges] == [(0, 1), (1, 2)]
    assert t.total_weight == pytest.approx(math.log(3), abs=1e-12)
    t = metric_mst(square(), LINE, "funk_min")
    assert [(i, j) for i, j, _ in t.edges] == [(0, 1), (1, 2)]
    assert t.total_weight == pytest.approx(2 * math.log(1.5), abs=1e-12)
    t = metric_mst(square(), [(0, 0), (0.5, 0.25)], "hilbert")
    assert len(t.edges) == 1
    assert t.total_weight == pytest.approx(hilbert_distance(square(), (0, 0), (0.5, 0.25)), abs=1e-12)


def test_mst_errors():
    with pytest.raises(OriginNotInterior):
        metric_mst(square(), [(0, 0), (1, 0)], "hilbert")
    with pytest.raises(DuplicatePoints):
        metric_mst(square(), [(0, 0), (0.3, 0), (0, 0)], "hilbert")
    with pytest.raises(ValueError):
        metric_mst(square(), [(0, 0), (0.3, 0)], "euclid")


def test_weight_matrix_definitions(rng):
    poly = random_convex(rng)
    pts = [random_interior(rng, poly) for _ in range(6)]
    Wf = weight_matrix(poly, pts, "funk_min")
    Wh = weight_matrix(poly, pts, "hilbert")
    for i in range(6):
        for j in range(6):
            if i == j:
                continue
            f, g = funk_distance(poly, pts[i], pts[j]), funk_distance(poly, pts[j], pts[i])
            assert Wf[i, j] == pytest.approx(min(f, g), rel=1e-12)
            assert Wh[i, j] == pytest.approx(hilbert_distance(poly, pts[i], pts[j]), rel=1e-12)
    assert np.array_equal(Wf, Wf.T) and np.array_equal(Wh, Wh.T)


def test_tree_shape(rng):
    poly = random_convex(rng)
    pts = [random_interior(rng, poly) for _ in range(25)]
    t = metric_mst(poly, pts, "hilbert")
    assert len(t.edges) == 24
    assert t.total_weight == pytest.approx(sum(w for *_, w in t.edges), abs=1e-12)
    # connected: union-find over the edges
    parent = list(range(25))

    def find(i):
        while parent[i] != i:
            i = parent[i]
        return i
    for i, j, _ in t.edges:
        assert find(i) != find(j)
        parent[find(i)] = find(j)
    assert metric_mst(poly, pts, "hilbert") == t


def test_prim_tie_break():
    W = np.ones((4, 4)) - np.eye(4)
    t = prim_dense(W)
    assert [(i, j) for i, j, _ in t.edges] == [(0, 1), (0, 2), (0, 3)]


@pytest.mark.parametrize("kind", ["funk_min", "hilbert"])
def test_mst_matches_enumeration(rng, kind):
    trees = {n: prufer_trees(n) for n in range(2, 7)}
    for _ in range(20):
        poly = random_convex(rng)
        n = int(rng.integers(2, 7))
        pts = [random_interior(rng, poly) for _ in range(n)]
        W = np.zeros((n, n))
        for i in range(n):
            for j in range(n):
                if i != j:
                    if kind == "hilbert":
                        W[i, j] = hilbert_distance(poly, pts[i], pts[j])
                    else:
                        W[i, j] = min(funk_distance(poly, pts[i], pts[j]),
                                      funk_distance(poly, pts[j], pts[i]))
        t = metric_mst(poly, pts, kind)
        assert t.total_weight == pytest.approx(brute_force_mst_weight(W, trees[n]), abs=1e-9)

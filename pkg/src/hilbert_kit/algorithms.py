"""Point-set algorithms: Euclidean minimum enclosing circle, and minimum
spanning trees under the Funk and Hilbert metrics."""

import math
import random
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import DuplicatePoints, EmptyInput, GeometryError
from .geom import EPS, Point, as_point, require_interior


@dataclass(frozen=True)
class Circle:
    center: Point
    radius: float

    def contains(self, p, tol=1e-12):
        return math.dist(tuple(self.center), tuple(p)) <= self.radius + tol * max(1.0, self.radius)


@dataclass(frozen=True)
class Tree:
    edges: tuple  # (i, j, weight) with i < j
    total_weight: float


# ---------------------------------------------------------------- enclosing circle

def _diameter(a, b):
    c = Point((a.x + b.x) / 2, (a.y + b.y) / 2)
    return Circle(c, max(math.dist(tuple(c), tuple(a)), math.dist(tuple(c), tuple(b))))


def circumcircle(a, b, c):
    """Circle through three points; ``None`` if they are collinear."""
    bx, by = b.x - a.x, b.y - a.y
    cx, cy = c.x - a.x, c.y - a.y
    d = 2.0 * (bx * cy - by * cx)
    scale = max(math.hypot(bx, by), math.hypot(cx, cy))
    if abs(d) <= EPS * scale:
        return None
    b2, c2 = bx * bx + by * by, cx * cx + cy * cy
    ux = (cy * b2 - by * c2) / d
    uy = (bx * c2 - cx * b2) / d
    center = Point(a.x + ux, a.y + uy)
    r = max(math.dist(tuple(center), tuple(q)) for q in (a, b, c))
    return Circle(center, r)


def _circle_three(a, b, c):
    circ = circumcircle(a, b, c)
    if circ is None:
        # collinear support: the widest pair spans the other point
        pairs = [(a, b), (a, c), (b, c)]
        return _diameter(*max(pairs, key=lambda pq: math.dist(tuple(pq[0]), tuple(pq[1]))))
    return circ


def min_enclosing_ball(points, seed=0):
    """Smallest enclosing circle by Welzl's randomized incremental method.

    The shuffle uses ``random.Random(seed)``, so results are reproducible.
    """
    pts = [as_point(p) for p in points]
    if not pts:
        raise EmptyInput("minimum enclosing ball of an empty point set")
    random.Random(seed).shuffle(pts)
    circ = Circle(pts[0], 0.0)
    for i, p in enumerate(pts):
        if not circ.contains(p):
            circ = _with_one(pts[:i], p)
    return circ


def _with_one(pts, p):
    circ = Circle(p, 0.0)
    for i, q in enumerate(pts):
        if not circ.contains(q):
            circ = _with_two(pts[:i], p, q)
    return circ


def _with_two(pts, p, q):
    circ = _diameter(p, q)
    for r in pts:
        if not circ.contains(r):
            circ = _circle_three(p, q, r)
    return circ


# ---------------------------------------------------------------- spanning trees

MST_KINDS = ("funk_min", "hilbert")


def weight_matrix(omega, points, kind, backend=None):
    """Symmetric edge weights of the complete graph on ``points``.

    ``funk_min`` takes the smaller of the two directed Funk distances,
    ``hilbert`` their average.
    """
    if kind not in MST_KINDS:
        raise ValueError(f"unknown MST kind {kind!r}; expected one of {MST_KINDS}")
    pts = np.array([tuple(p) for p in points], dtype=float).reshape(-1, 2)
    F = _kernels.funk_matrix(omega.normals, omega.offsets, pts, pts, backend)
    W = np.minimum(F, F.T) if kind == "funk_min" else 0.5 * (F + F.T)
    np.fill_diagonal(W, 0.0)
    return W


def prim_dense(W):
    """Prim's algorithm on a dense symmetric matrix.

    Among equal-weight candidates the edge with the smallest (i, j) index
    pair wins, so output is deterministic.
    """
    n = W.shape[0]
    in_tree = np.zeros(n, dtype=bool)
    in_tree[0] = True
    best = W[0].copy()
    parent = np.zeros(n, dtype=np.int64)
    edges = []
    for _ in range(n - 1):
        cand = np.flatnonzero(~in_tree)
        key = best[cand]
        ties = cand[key == key.min()]
        v = min(ties, key=lambda k: (min(k, parent[k]), max(k, parent[k])))
        u = int(parent[v])
        edges.append((min(u, int(v)), max(u, int(v)), float(W[u, v])))
        in_tree[v] = True
        closer = (~in_tree) & (W[v] < best)
        best[closer] = W[v][closer]
        parent[closer] = v
    edges.sort()
    return Tree(tuple(edges), float(sum(w for _, _, w in edges)))


def metric_mst(omega, points, kind, backend=None):
    pts = [require_interior(omega, p, f"point {i}") for i, p in enumerate(points)]
    if len(pts) < 2:
        raise GeometryError("a spanning tree needs at least 2 points")
    arr = np.array([tuple(p) for p in pts])
    for i in range(len(arr)):
        gap = np.hypot(*(arr[i + 1:] - arr[i]).T)
        if np.any(gap <= EPS):
            j = i + 1 + int(np.argmax(gap <= EPS))
            raise DuplicatePoints(f"points {i} and {j} coincide")
    W = weight_matrix(omega, pts, kind, backend)
    if np.max(np.abs(W - W.T)) > 1e-12:
        raise AssertionError("weight matrix is not symmetric")
    return prim_dense(W)

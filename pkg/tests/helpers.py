"""Random instance generators and independent oracles shared by the tests."""

import itertools
import math

import numpy as np

from hilbert_kit.geom import ConvexPolygon, HalfPlane, Point


def random_convex(rng, k=None, kmin=5, kmax=12):
    """Affine image of k points on a circle: always a convex k-gon."""
    if k is None:
        k = int(rng.integers(kmin, kmax + 1))
    while True:
        theta = np.sort(rng.uniform(0, 2 * math.pi, k))
        gaps = np.diff(np.append(theta, theta[0] + 2 * math.pi))
        if gaps.min() > 0.15 and gaps.max() < math.pi - 0.1:
            break
    pts = np.column_stack([np.cos(theta), np.sin(theta)])
    A = rng.normal(size=(2, 2))
    while abs(np.linalg.det(A)) < 0.3 or np.linalg.cond(A) > 6:
        A = rng.normal(size=(2, 2))
    pts = pts @ A.T + rng.uniform(-2, 2, size=2)
    poly = ConvexPolygon.from_coords(pts)
    assert len(poly) == k
    return poly


def random_interior(rng, omega, shrink=0.9):
    w = rng.dirichlet(np.ones(len(omega)))
    q = w @ omega.coords
    c = omega.coords.mean(axis=0)
    return Point(*(c + shrink * (q - c)))


def uniform_in(rng, omega, n):
    lo, hi = omega.coords.min(axis=0), omega.coords.max(axis=0)
    out = []
    while sum(len(o) for o in out) < n:
        cand = rng.uniform(lo, hi, size=(2 * n, 2))
        s = (omega.offsets[None, :] - cand @ omega.normals.T).min(axis=1)
        out.append(cand[s > 1e-7])
    return np.concatenate(out)[:n]


def square(h=1.0, cx=0.0, cy=0.0):
    return ConvexPolygon([(cx - h, cy - h), (cx + h, cy - h), (cx + h, cy + h), (cx - h, cy + h)])


def box(x0, y0, x1, y1):
    return ConvexPolygon([(x0, y0), (x1, y0), (x1, y1), (x0, y1)])


# ---------------------------------------------------------------- oracles

def ray_exit_by_edges(omega, origin, direction):
    """Intersect the ray with each edge segment separately; smallest t > 0."""
    ox, oy = origin
    dx, dy = direction
    best = math.inf
    V = omega.coords
    for i in range(len(V)):
        ax, ay = V[i]
        bx, by = V[(i + 1) % len(V)]
        ex, ey = bx - ax, by - ay
        den = dx * ey - dy * ex
        if abs(den) < 1e-15:
            continue
        t = ((ax - ox) * ey - (ay - oy) * ex) / den
        u = ((ax - ox) * dy - (ay - oy) * dx) / den
        if t > 0 and -1e-12 <= u <= 1 + 1e-12:
            best = min(best, t)
    return Point(ox + best * dx, oy + best * dy)


def funk_by_definition(omega, p, q):
    """ln(|p - q'| / |q - q'|) with q' from the edge-by-edge ray oracle."""
    if tuple(p) == tuple(q):
        return 0.0
    qq = ray_exit_by_edges(omega, p, (q[0] - p[0], q[1] - p[1]))
    return math.log(math.dist(p, qq) / math.dist(q, qq))


def hilbert_by_cross_ratio(omega, p, q):
    """Half the log cross ratio (p', p; q, q') on the chord through p, q."""
    if tuple(p) == tuple(q):
        return 0.0
    d = (q[0] - p[0], q[1] - p[1])
    qq = ray_exit_by_edges(omega, p, d)
    pp = ray_exit_by_edges(omega, q, (-d[0], -d[1]))
    cr = (math.dist(pp, q) * math.dist(p, qq)) / (math.dist(pp, p) * math.dist(q, qq))
    return 0.5 * math.log(cr)


def _slack(omega, i, x):
    return omega.offsets[i] - omega.normals[i] @ np.asarray(tuple(x))


def funk_ball_planes(omega, p, r):
    # F(p, x) <= r  <=>  s_i(x) >= e^-r s_i(p) for every edge i
    out = []
    for i, ((a, b), c) in enumerate(zip(omega.normals, omega.offsets)):
        out.append(HalfPlane(a, b, c - math.exp(-r) * _slack(omega, i, p)))
    return out


def reverse_funk_ball_planes(omega, p, r):
    # F(x, p) <= r  <=>  s_i(x) <= e^r s_i(p), together with x in omega
    out = omega.halfplanes()
    for i, ((a, b), c) in enumerate(zip(omega.normals, omega.offsets)):
        out.append(HalfPlane(-a, -b, -(c - math.exp(r) * _slack(omega, i, p))))
    return out


def hilbert_ball_planes(omega, p, r):
    # F(p,x) + F(x,p) <= 2r  <=>  s_j(x) s_i(p) <= e^{2r} s_j(p) s_i(x) for all i != j
    K = math.exp(2 * r)
    N, C = omega.normals, omega.offsets
    sp = [_slack(omega, i, p) for i in range(len(C))]
    out = []
    for i, j in itertools.permutations(range(len(C)), 2):
        A, B = sp[i], K * sp[j]
        nv = -A * N[j] + B * N[i]
        out.append(HalfPlane(nv[0], nv[1], B * C[i] - A * C[j]))
    return out


def brute_force_circle(points):
    """Smallest circle among those defined by 1, 2 or 3 of the points."""
    pts = [tuple(map(float, p)) for p in points]
    cands = [(pts[0], 0.0)]
    for a, b in itertools.combinations(pts, 2):
        cands.append((((a[0] + b[0]) / 2, (a[1] + b[1]) / 2), math.dist(a, b) / 2))
    for a, b, c in itertools.combinations(pts, 3):
        d = 2 * (a[0] * (b[1] - c[1]) + b[0] * (c[1] - a[1]) + c[0] * (a[1] - b[1]))
        if abs(d) < 1e-12:
            continue
        ux = ((a[0]**2 + a[1]**2) * (b[1] - c[1]) + (b[0]**2 + b[1]**2) * (c[1] - a[1])
              + (c[0]**2 + c[1]**2) * (a[1] - b[1])) / d
        uy = ((a[0]**2 + a[1]**2) * (c[0] - b[0]) + (b[0]**2 + b[1]**2) * (a[0] - c[0])
              + (c[0]**2 + c[1]**2) * (b[0] - a[0])) / d
        cands.append(((ux, uy), math.dist((ux, uy), a)))
    best = None
    for c, r in cands:
        if all(math.dist(c, q) <= r * (1 + 1e-12) + 1e-12 for q in pts):
            if best is None or r < best[1]:
                best = (c, r)
    return best


def prufer_trees(n):
    """Every labelled tree on n vertices, as edge lists (Cayley enumeration)."""
    if n == 2:
        return [[(0, 1)]]
    trees = []
    for seq in itertools.product(range(n), repeat=n - 2):
        degree = [1] * n
        for v in seq:
            degree[v] += 1
        edges = []
        for v in seq:
            leaf = min(i for i in range(n) if degree[i] == 1)
            edges.append((leaf, v))
            degree[leaf] -= 1
            degree[v] -= 1
        u, w = [i for i in range(n) if degree[i] == 1]
        edges.append((u, w))
        trees.append(edges)
    return trees


def brute_force_mst_weight(W, trees):
    E = np.array(trees)                       # (T, n-1, 2)
    return float(W[E[..., 0], E[..., 1]].sum(axis=1).min())

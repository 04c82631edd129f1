"""Set and dual constructions on convex polygons.

Boolean operations take two convex polygons. Intersection stays convex;
union and difference return a ``Region`` of outer rings and holes, built by
decomposing the result into convex pieces with disjoint interiors and then
cancelling the edges the pieces share.
"""

import math
from collections import Counter, defaultdict
from dataclasses import dataclass

import numpy as np

from .errors import DegeneratePolygon, GeometryError, NonConvex, OriginNotInterior
from .geom import (
    EMPTY,
    EPS,
    ConvexPolygon,
    HalfPlane,
    Point,
    as_point,
    halfplane_intersection,
    point_in_polygon,
    require_interior,
    signed_area,
)

OUTER = "outer"
HOLE = "hole"


@dataclass(frozen=True)
class Ring:
    points: tuple
    kind: str

    @property
    def area(self):
        """Signed: positive for outer rings, negative for holes."""
        return signed_area([tuple(p) for p in self.points])


@dataclass(frozen=True)
class Region:
    rings: tuple = ()

    @property
    def area(self):
        return sum(r.area for r in self.rings)

    @property
    def outers(self):
        return [r for r in self.rings if r.kind == OUTER]

    @property
    def holes(self):
        return [r for r in self.rings if r.kind == HOLE]

    def is_empty(self):
        return not self.rings

    @classmethod
    def from_polygons(cls, polys):
        rings = [Ring(p.vertices, OUTER) for p in polys]
        rings.sort(key=lambda r: tuple(r.points[0]))
        return cls(tuple(rings))


# ---------------------------------------------------------------- clipping

def _clip(coords, normal, offset):
    """Sutherland-Hodgman clip of a convex ring against normal . x <= offset.

    Points within EPS of the line count as inside, so a polygon touching
    the line keeps its vertices there instead of growing slivers.
    """
    if not coords:
        return []
    out = []
    n = len(coords)
    s = [offset - (normal[0] * x + normal[1] * y) for x, y in coords]
    for i in range(n):
        a, b = coords[i], coords[(i + 1) % n]
        sa, sb = s[i], s[(i + 1) % n]
        a_in, b_in = sa >= -EPS, sb >= -EPS
        if a_in and b_in:
            out.append(b)
        elif a_in:
            if sa > EPS:
                out.append(_cut(a, b, sa, sb))
        elif b_in:
            if sb > EPS:
                out.append(_cut(a, b, sa, sb))
            out.append(b)
    return out


def _cut(a, b, sa, sb):
    t = sa / (sa - sb)
    return (a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1]))


def _to_polygon(coords):
    if len(coords) < 3:
        return None
    try:
        poly = ConvexPolygon(coords)
    except (DegeneratePolygon, NonConvex):
        return None
    if poly.area <= EPS * EPS:
        return None
    return poly


def _ring_coords(poly):
    return [(float(x), float(y)) for x, y in poly.coords]


def intersect(omega, psi):
    """Convex intersection, or ``EMPTY`` for contacts of measure zero."""
    coords = _ring_coords(omega)
    for normal, offset in zip(psi.normals, psi.offsets):
        coords = _clip(coords, normal, offset)
        if not coords:
            return EMPTY
    poly = _to_polygon(coords)
    return poly if poly is not None else EMPTY


def _difference_pieces(omega, psi):
    """Convex pieces with disjoint interiors covering closure(omega - psi)."""
    pieces = []
    rest = _ring_coords(omega)
    for normal, offset in zip(psi.normals, psi.offsets):
        outside = _clip(rest, -normal, -offset)
        poly = _to_polygon(outside)
        if poly is not None:
            pieces.append(poly)
        rest = _clip(rest, normal, offset)
        if len(rest) < 3:
            break
    return pieces


def union(omega, psi):
    if not intersect(omega, psi):
        return Region.from_polygons([omega, psi])
    return _assemble([omega] + _difference_pieces(psi, omega))


def subtract(omega, psi):
    if not intersect(omega, psi):
        return Region.from_polygons([omega])
    return _assemble(_difference_pieces(omega, psi))


# ---------------------------------------------------------------- ring assembly

def _cluster(points):
    """Map each point to the index of an EPS-cluster representative."""
    pts = np.asarray(points, dtype=float)
    parent = list(range(len(pts)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(len(pts)):
        close = np.flatnonzero(np.hypot(*(pts[i + 1:] - pts[i]).T) <= EPS) + i + 1
        for j in close:
            ri, rj = find(i), find(int(j))
            if ri != rj:
                parent[max(ri, rj)] = min(ri, rj)
    roots = [find(i) for i in range(len(pts))]
    reps = sorted(set(roots))
    index = {r: k for k, r in enumerate(reps)}
    return [index[r] for r in roots], pts[reps]


def _split_edges(edges, U):
    """Split every edge at cluster points lying in its relative interior."""
    out = []
    for a, b in edges:
        A, B = U[a], U[b]
        d = B - A
        L2 = float(d @ d)
        rel = U - A
        t = rel @ d / L2
        dist = np.abs(rel[:, 0] * d[1] - rel[:, 1] * d[0]) / math.sqrt(L2)
        hit = np.flatnonzero((dist <= EPS) & (t > 0) & (t < 1))
        hit = [int(k) for k in hit if k != a and k != b]
        chain = [a] + sorted(hit, key=lambda k: t[k]) + [b]
        out.extend(zip(chain, chain[1:]))
    return out


def _assemble(pieces):
    if not pieces:
        return Region()
    all_pts, edges = [], []
    for poly in pieces:
        base = len(all_pts)
        m = len(poly)
        all_pts.extend(_ring_coords(poly))
        edges.extend((base + i, base + (i + 1) % m) for i in range(m))
    labels, U = _cluster(all_pts)
    edges = [(labels[a], labels[b]) for a, b in edges]
    edges = [(a, b) for a, b in edges if a != b]
    edges = _split_edges(edges, U)

    count = Counter(edges)
    remaining = []
    for (a, b), c in sorted(count.items()):
        net = c - count.get((b, a), 0)
        remaining.extend([(a, b)] * max(net, 0))

    outgoing = defaultdict(list)
    for a, b in remaining:
        outgoing[a].append(b)

    rings = []
    while True:
        starts = sorted(a for a, bs in outgoing.items() if bs)
        if not starts:
            break
        start = starts[0]
        cur = start
        nxt = min(outgoing[cur])
        outgoing[cur].remove(nxt)
        ring = [cur]
        prev, cur = cur, nxt
        while cur != start:
            ring.append(cur)
            options = outgoing[cur]
            if not options:
                break
            nxt = _next_clockwise(U, prev, cur, options)
            options.remove(nxt)
            prev, cur = cur, nxt
        rings.append([tuple(U[k]) for k in ring])
    return _classify_rings(rings)


def _next_clockwise(U, prev, cur, options):
    """Among outgoing edges at ``cur``, the first one met turning clockwise
    from the direction back to ``prev``; keeps pinched rings separate."""
    back = U[prev] - U[cur]
    base = math.atan2(back[1], back[0])

    def cw_angle(k):
        d = U[k] - U[cur]
        a = (base - math.atan2(d[1], d[0])) % (2 * math.pi)
        return a if a > 1e-15 else 2 * math.pi

    return min(options, key=lambda k: (cw_angle(k), k))


def _clean_ring(pts):
    from .geom import _dedupe_ring, _drop_collinear

    pts = _drop_collinear(_dedupe_ring(pts))
    if len(pts) < 3 or abs(signed_area(pts)) <= EPS * EPS:
        return None
    k = min(range(len(pts)), key=lambda i: pts[i])
    return pts[k:] + pts[:k]


def _inside_ring(pt, ring):
    x, y = pt
    inside = False
    n = len(ring)
    for i in range(n):
        (x1, y1), (x2, y2) = ring[i], ring[(i + 1) % n]
        if (y1 > y) != (y2 > y):
            xc = x1 + (y - y1) * (x2 - x1) / (y2 - y1)
            if xc > x:
                inside = not inside
    return inside


def _classify_rings(raw):
    outers, holes = [], []
    for pts in raw:
        pts = _clean_ring(pts)
        if pts is None:
            continue
        (outers if signed_area(pts) > 0 else holes).append(pts)
    outers.sort(key=lambda r: r[0])
    owned = defaultdict(list)
    for h in holes:
        probe = tuple(np.mean(np.asarray(h), axis=0))
        hosts = [i for i, o in enumerate(outers) if _inside_ring(probe, o)]
        if not hosts:
            raise GeometryError("hole ring without an enclosing outer ring")
        owner = min(hosts, key=lambda i: signed_area(outers[i]))
        owned[owner].append(h)
    rings = []
    for i, o in enumerate(outers):
        rings.append(Ring(tuple(Point(*p) for p in o), OUTER))
        for h in sorted(owned[i], key=lambda r: r[0]):
            rings.append(Ring(tuple(Point(*p) for p in h), HOLE))
    return Region(tuple(rings))


# ---------------------------------------------------------------- duals, sums

def macbeath_region(omega, x):
    """x + ((omega - x) & (x - omega)): omega intersected with its point
    reflection through ``x``."""
    x = require_interior(omega, x, "Macbeath center")
    planes = omega.halfplanes()
    for h in list(planes):
        # y in 2x - omega  <=>  n . (2x - y) <= c
        planes.append(HalfPlane(-h.a, -h.b, h.c - 2.0 * (h.a * x.x + h.b * x.y)))
    return halfplane_intersection(planes)


def polar_dual(omega):
    """Polar body {y : <v, y> <= 1 for every vertex v}.

    With the origin strictly inside a strictly convex polygon, every vertex
    constraint is a facet and they arrive in angular order, so the
    intersection is just consecutive lines meeting. Solving those 2x2
    systems from raw coordinates (no normalizing) keeps simple inputs exact.
    """
    if point_in_polygon(omega, (0.0, 0.0)) != "interior":
        raise OriginNotInterior("polar dual needs the origin strictly inside the polygon")
    vs = omega.vertices
    out = []
    for a, b in zip(vs, vs[1:] + vs[:1]):
        det = a.x * b.y - a.y * b.x  # > 0: origin is left of every edge
        out.append(((b.y - a.y) / det, (a.x - b.x) / det))
    try:
        return ConvexPolygon(out)
    except GeometryError as exc:
        raise GeometryError(f"polar dual is degenerate: {exc}") from None


def _lowest_first(coords):
    k = min(range(len(coords)), key=lambda i: (coords[i][1], coords[i][0]))
    return coords[k:] + coords[:k]


def minkowski_sum(omega, psi):
    """Edge-vector merge in O(m + n)."""
    a = _lowest_first(_ring_coords(omega))
    b = _lowest_first(_ring_coords(psi))
    m, n = len(a), len(b)
    a = a + a[:2]
    b = b + b[:2]
    out = []
    i = j = 0
    while i < m or j < n:
        out.append((a[i][0] + b[j][0], a[i][1] + b[j][1]))
        ea = (a[i + 1][0] - a[i][0], a[i + 1][1] - a[i][1])
        eb = (b[j + 1][0] - b[j][0], b[j + 1][1] - b[j][1])
        c = ea[0] * eb[1] - ea[1] * eb[0]
        if j >= n or (i < m and c > 0):
            i += 1
        elif i >= m or c < 0:
            j += 1
        else:
            i += 1
            j += 1
    return ConvexPolygon(out)


def reflect(omega, x):
    """Point reflection 2x - omega."""
    return omega.scale_about(as_point(x), -1.0)

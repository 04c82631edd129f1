"""Planar primitives and predicates.

All tolerance decisions go through the single constant ``EPS`` (plane
units). Polygons are stored counterclockwise and strictly convex; their
half-plane form (unit outward normals and offsets) is cached because every
metric construction works from edge slacks.
"""

import enum
import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import _kernels
from .errors import (
    CoincidentPoints,
    DegenerateHull,
    DegeneratePolygon,
    NonConvex,
    OriginNotInterior,
    ZeroDirection,
)

EPS = 1e-9

CLOCKWISE = -1
COLLINEAR = 0
COUNTERCLOCKWISE = 1


class Outcome(enum.Enum):
    """Non-polygon results of set constructions. Both are falsy."""

    EMPTY = "empty"
    UNBOUNDED = "unbounded"

    def __bool__(self):
        return False


EMPTY = Outcome.EMPTY
UNBOUNDED = Outcome.UNBOUNDED


@dataclass(frozen=True, slots=True)
class Point:
    x: float
    y: float

    def __post_init__(self):
        x, y = float(self.x) + 0.0, float(self.y) + 0.0  # no negative zeros
        if not (math.isfinite(x) and math.isfinite(y)):
            raise ValueError(f"non-finite coordinate in Point({self.x}, {self.y})")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)

    def __iter__(self):
        yield self.x
        yield self.y

    def __getitem__(self, i):
        return (self.x, self.y)[i]

    def __len__(self):
        return 2

    def __add__(self, other):
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other):
        return Point(self.x - other.x, self.y - other.y)

    def __mul__(self, k):
        return Point(self.x * k, self.y * k)

    __rmul__ = __mul__

    def __neg__(self):
        return Point(-self.x, -self.y)

    def dot(self, other):
        return self.x * other.x + self.y * other.y

    def cross(self, other):
        return self.x * other.y - self.y * other.x

    def norm(self):
        return math.hypot(self.x, self.y)


def as_point(p):
    return p if isinstance(p, Point) else Point(*p)


@dataclass(frozen=True, slots=True)
class HalfPlane:
    """The closed set ``a*x + b*y <= c``."""

    a: float
    b: float
    c: float

    def __post_init__(self):
        if self.a == 0 and self.b == 0:
            raise ValueError("half-plane normal must be nonzero")

    def slack(self, p):
        """Signed distance from ``p`` to the boundary line, positive inside."""
        n = math.hypot(self.a, self.b)
        return (self.c - self.a * p.x - self.b * p.y) / n

    def contains(self, p, eps=EPS):
        return self.slack(p) >= -eps


@dataclass(frozen=True, slots=True)
class Chord:
    """Two boundary points of a line through the domain, in line order."""

    first: Point
    second: Point


def _cross3(p, q, r):
    return (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])


def orientation(p, q, r):
    v = _cross3(p, q, r)
    if v > EPS:
        return COUNTERCLOCKWISE
    if v < -EPS:
        return CLOCKWISE
    return COLLINEAR


def signed_area(coords):
    c = np.asarray(coords, dtype=float)
    x, y = c[:, 0], c[:, 1]
    return 0.5 * float(np.dot(x, np.roll(y, -1)) - np.dot(np.roll(x, -1), y))


def _dedupe_ring(pts):
    out = []
    for p in pts:
        if not out or math.dist(p, out[-1]) > EPS:
            out.append(p)
    while len(out) > 1 and math.dist(out[0], out[-1]) <= EPS:
        out.pop()
    return out


def _drop_collinear(pts):
    """Remove vertices lying on the segment joining their ring neighbours."""
    pts = list(pts)
    changed = True
    while changed and len(pts) >= 3:
        changed = False
        i = 0
        while i < len(pts) and len(pts) >= 3:
            a, b, c = pts[i - 1], pts[i], pts[(i + 1) % len(pts)]
            ac = math.dist(a, c)
            ab = (b[0] - a[0], b[1] - a[1])
            bc = (c[0] - b[0], c[1] - b[1])
            forward = ab[0] * bc[0] + ab[1] * bc[1] > 0
            if ac > 0 and forward and abs(_cross3(a, b, c)) / ac <= EPS:
                del pts[i]
                changed = True
            else:
                i += 1
    return pts


def _canonical_start(pts):
    k = min(range(len(pts)), key=lambda i: (pts[i][0], pts[i][1]))
    return pts[k:] + pts[:k]


class ConvexPolygon:
    """Counterclockwise, strictly convex vertex ring.

    Construction normalizes the input: clockwise rings are reversed,
    repeated and collinear vertices within ``EPS`` are merged, and the ring
    is rotated to start at its lexicographically smallest vertex. Anything
    that is still not strictly convex raises ``NonConvex``.
    """

    def __init__(self, vertices):
        pts = [tuple(map(float, as_point(v))) for v in vertices]
        pts = _dedupe_ring(pts)
        if len(pts) < 3:
            raise DegeneratePolygon(f"need at least 3 distinct vertices, got {len(pts)}")
        area = signed_area(pts)
        if area < 0:
            pts.reverse()
        pts = _drop_collinear(pts)
        if len(pts) < 3 or abs(signed_area(pts)) <= EPS * EPS:
            raise DegeneratePolygon("vertices are collinear")
        self._check_convex(pts)
        self.vertices = tuple(Point(x, y) for x, y in _canonical_start(pts))

    @staticmethod
    def _check_convex(pts):
        n = len(pts)
        turning = 0.0
        for i in range(n):
            a, b, c = pts[i - 1], pts[i], pts[(i + 1) % n]
            if _cross3(a, b, c) <= 0:
                raise NonConvex(f"reflex or flat turn at vertex {b}")
            e1 = math.atan2(b[1] - a[1], b[0] - a[0])
            e2 = math.atan2(c[1] - b[1], c[0] - b[0])
            turning += (e2 - e1) % (2 * math.pi)
        if abs(turning - 2 * math.pi) > 1e-6:
            raise NonConvex("vertex ring winds more than once")

    @classmethod
    def from_coords(cls, coords):
        return cls([tuple(row) for row in np.asarray(coords, dtype=float)])

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __eq__(self, other):
        return isinstance(other, ConvexPolygon) and self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)

    def __repr__(self):
        inner = ", ".join(f"({v.x:.6g}, {v.y:.6g})" for v in self.vertices)
        return f"ConvexPolygon([{inner}])"

    @cached_property
    def coords(self):
        a = np.array([(v.x, v.y) for v in self.vertices], dtype=float)
        a.setflags(write=False)
        return a

    @cached_property
    def normals(self):
        e = np.roll(self.coords, -1, axis=0) - self.coords
        n = np.column_stack([e[:, 1], -e[:, 0]])
        n /= np.hypot(n[:, 0], n[:, 1])[:, None]
        n.setflags(write=False)
        return n

    @cached_property
    def offsets(self):
        o = np.einsum("ij,ij->i", self.normals, self.coords)
        o.setflags(write=False)
        return o

    def halfplanes(self):
        return [HalfPlane(float(a), float(b), float(c))
                for (a, b), c in zip(self.normals, self.offsets)]

    def slacks(self, p):
        return self.offsets - self.normals @ np.array([p[0], p[1]], dtype=float)

    @property
    def area(self):
        return signed_area(self.coords)

    def centroid(self):
        c = self.coords
        nxt = np.roll(c, -1, axis=0)
        w = c[:, 0] * nxt[:, 1] - nxt[:, 0] * c[:, 1]
        a = w.sum() / 2
        cx = ((c[:, 0] + nxt[:, 0]) * w).sum() / (6 * a)
        cy = ((c[:, 1] + nxt[:, 1]) * w).sum() / (6 * a)
        return Point(cx, cy)

    def translate(self, t):
        return ConvexPolygon.from_coords(self.coords + np.array(tuple(t)))

    def scale_about(self, center, k):
        """Homothety ``center + k * (self - center)``; negative ``k`` reflects."""
        c = np.array(tuple(center))
        return ConvexPolygon.from_coords(c + k * (self.coords - c))

    def almost_equal(self, other, tol=EPS):
        """Vertexwise comparison up to cyclic relabelling."""
        if len(self) != len(other):
            return False
        a, b = self.coords, other.coords
        for k in range(len(b)):
            if np.max(np.abs(a - np.roll(b, -k, axis=0))) <= tol:
                return True
        return False


def point_in_polygon(omega, p):
    """Classify ``p`` as ``"interior"``, ``"boundary"`` or ``"exterior"``."""
    s = float(np.min(omega.slacks(as_point(p))))
    if s > EPS:
        return "interior"
    if s >= -EPS:
        return "boundary"
    return "exterior"


def classify_points(omega, pts, backend=None):
    """Vectorized ``point_in_polygon``: 1 interior, 0 boundary, -1 exterior."""
    return _kernels.classify_points(omega.normals, omega.offsets, pts, EPS, backend)


def require_interior(omega, p, what="point"):
    p = as_point(p)
    if point_in_polygon(omega, p) != "interior":
        raise OriginNotInterior(f"{what} ({p.x:.12g}, {p.y:.12g}) is not strictly inside the domain")
    return p


def exit_parameter(omega, origin, direction):
    """Smallest t > 0 with origin + t*direction on the boundary.

    No precondition checks; ``origin`` must be interior and ``direction``
    nonzero.
    """
    d = np.array([direction[0], direction[1]], dtype=float)
    s = omega.slacks(origin)
    nd = omega.normals @ d
    mask = nd > 0
    return float(np.min(s[mask] / nd[mask]))


def ray_boundary_intersection(omega, origin, direction):
    origin = require_interior(omega, origin, "ray origin")
    direction = as_point(direction)
    if direction.norm() <= EPS:
        raise ZeroDirection("ray direction is (numerically) zero")
    t = exit_parameter(omega, origin, direction)
    return origin + direction * t


def chord_through(omega, p, q):
    """Boundary points p', q' with ``p', p, q, q'`` in line order."""
    p = require_interior(omega, p, "p")
    q = require_interior(omega, q, "q")
    d = q - p
    if d.norm() <= EPS:
        raise CoincidentPoints("p and q coincide")
    return Chord(p - d * exit_parameter(omega, p, -d), p + d * exit_parameter(omega, p, d))


# ---------------------------------------------------------------- hulls

def convex_hull(points):
    """Monotone-chain hull, counterclockwise, collinear points dropped."""
    pts = sorted({(float(x), float(y)) for x, y in (tuple(as_point(p)) for p in points)})
    if len(pts) < 3:
        raise DegenerateHull("need at least 3 distinct points")

    def half(seq):
        out = []
        for p in seq:
            while len(out) >= 2 and _turn_left(out[-2], out[-1], p) is False:
                out.pop()
            out.append(p)
        return out

    lower = half(pts)
    upper = half(reversed(pts))
    ring = lower[:-1] + upper[:-1]
    if len(ring) < 3:
        raise DegenerateHull("points are collinear")
    try:
        return ConvexPolygon(ring)
    except DegeneratePolygon as exc:
        raise DegenerateHull(str(exc)) from None


def _turn_left(a, b, c):
    # strict left turn, with the collinearity test in distance units
    ac = math.dist(a, c)
    v = _cross3(a, b, c)
    return v > 0 and (ac == 0 or v / ac > EPS)


# ---------------------------------------------------------------- half-planes

_BOX = 1e9


def _line_intersection(p1, d1, p2, d2):
    den = d1[0] * d2[1] - d1[1] * d2[0]
    t = ((p2[0] - p1[0]) * d2[1] - (p2[1] - p1[1]) * d2[0]) / den
    return (p1[0] + t * d1[0], p1[1] + t * d1[1])


def halfplane_intersection(planes):
    """Intersect closed half-planes.

    Returns a ``ConvexPolygon``, ``EMPTY`` when there is no feasible region
    of positive area, or ``UNBOUNDED``. Sort-by-angle deque algorithm,
    O(n log n); a large bounding box keeps the deque well defined and the
    unbounded case is decided from the normal directions.
    """
    planes = list(planes)
    if not planes:
        raise ValueError("need at least one half-plane")
    lines = []
    for h in planes:
        n = math.hypot(h.a, h.b)
        a, b, c = h.a / n, h.b / n, h.c / n
        # keep-left direction along the boundary line, anchor on the line
        lines.append(((a * c, b * c), (-b, a)))
    for a, b in ((1, 0), (-1, 0), (0, 1), (0, -1)):
        lines.append(((a * _BOX, b * _BOX), (-b, a)))
    lines.sort(key=_direction_angle)

    def out(ln, r):
        (px, py), (dx, dy) = ln
        return dx * (r[1] - py) - dy * (r[0] - px) < -EPS

    dq = []
    for ln in lines:
        while len(dq) > 1 and out(ln, _line_intersection(*dq[-1], *dq[-2])):
            dq.pop()
        while len(dq) > 1 and out(ln, _line_intersection(*dq[0], *dq[1])):
            dq.pop(0)
        if dq:
            d0, d1 = ln[1], dq[-1][1]
            if abs(d0[0] * d1[1] - d0[1] * d1[0]) < EPS:
                if d0[0] * d1[0] + d0[1] * d1[1] < 0:
                    return EMPTY
                if out(ln, dq[-1][0]):
                    dq.pop()
                else:
                    continue
        dq.append(ln)
    while len(dq) > 2 and out(dq[0], _line_intersection(*dq[-1], *dq[-2])):
        dq.pop()
    while len(dq) > 2 and out(dq[-1], _line_intersection(*dq[0], *dq[1])):
        dq.pop(0)
    if len(dq) < 3:
        return EMPTY
    verts = [_line_intersection(*dq[i], *dq[(i + 1) % len(dq)]) for i in range(len(dq))]
    try:
        poly = ConvexPolygon(verts)
    except (DegeneratePolygon, NonConvex):
        return EMPTY
    if not _positively_spanning([(h.a, h.b) for h in planes]):
        return UNBOUNDED
    return poly


def _direction_angle(line):
    dx, dy = line[1]
    theta = math.atan2(dy + 0.0, dx + 0.0)
    # -pi and pi are the same direction; keep parallel lines adjacent
    return theta + 2 * math.pi if theta < -math.pi + 1e-12 else theta


def _positively_spanning(normals):
    angles = sorted(math.atan2(b, a) for a, b in normals)
    gaps = [b - a for a, b in zip(angles, angles[1:])]
    gaps.append(angles[0] + 2 * math.pi - angles[-1])
    return max(gaps) < math.pi - 1e-12

"""Funk, reverse Funk and Hilbert distances on a convex polygonal domain,
spokes, and metric balls.

Radii are in natural-log units. Ball boundaries are computed in closed form
along spoke rays; no root finding is involved.
"""

import enum
import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .geom import (
    EPS,
    Chord,
    ConvexPolygon,
    Point,
    exit_parameter,
    require_interior,
)
from .errors import NonpositiveRadius, VertexCoincidence


class MetricKind(str, enum.Enum):
    FUNK = "funk"
    REVERSE_FUNK = "reverse_funk"
    HILBERT = "hilbert"


@dataclass(frozen=True)
class Ball:
    kind: MetricKind
    center: Point
    radius: float
    boundary: ConvexPolygon
    spokes: tuple = None


def _funk(omega, p, q):
    if p == q:
        return 0.0
    d = q - p
    t = exit_parameter(omega, p, d)
    # q' = p + t*d, so ||p - q'|| / ||q - q'|| = t / (t - 1)
    beyond = (t - 1.0) * d.norm()
    return math.log1p(d.norm() / beyond)


def funk_distance(omega, p, q):
    """Forward Funk distance from ``p`` to ``q``: ln(|p - q'| / |q - q'|),
    where q' is where the ray from p through q leaves the domain."""
    p = require_interior(omega, p, "p")
    q = require_interior(omega, q, "q")
    return _funk(omega, p, q)


def reverse_funk_distance(omega, p, q):
    p = require_interior(omega, p, "p")
    q = require_interior(omega, q, "q")
    return _funk(omega, q, p)


def hilbert_distance(omega, p, q):
    p = require_interior(omega, p, "p")
    q = require_interior(omega, q, "q")
    return 0.5 * (_funk(omega, p, q) + _funk(omega, q, p))


def distance(omega, p, q, kind):
    kind = MetricKind(kind)
    if kind is MetricKind.FUNK:
        return funk_distance(omega, p, q)
    if kind is MetricKind.REVERSE_FUNK:
        return reverse_funk_distance(omega, p, q)
    return hilbert_distance(omega, p, q)


def distances_from(omega, p, pts, kind, backend=None):
    """Distances from ``p`` to each row of ``pts`` (all assumed interior)."""
    kind = MetricKind(kind)
    pts = np.asarray(pts, dtype=float).reshape(-1, 2)
    n, o = omega.normals, omega.offsets
    p_arr = np.array([tuple(p)])
    if kind is MetricKind.FUNK:
        return _kernels.funk_matrix(n, o, p_arr, pts, backend)[0]
    back = _kernels.funk_matrix(n, o, pts, p_arr, backend)[:, 0]
    if kind is MetricKind.REVERSE_FUNK:
        return back
    return 0.5 * (_kernels.funk_matrix(n, o, p_arr, pts, backend)[0] + back)


# ---------------------------------------------------------------- spokes

def _angle_key(theta):
    return theta if theta >= -math.pi + 1e-15 else theta + 2 * math.pi


def spokes(omega, p):
    """One chord per vertex of ``omega`` through ``p``, sorted by the angle of
    the vertex direction. Vertices collinear with ``p`` share one chord."""
    p = require_interior(omega, p, "spoke center")
    found = []
    for v in omega.vertices:
        u = v - p
        if u.norm() <= EPS:
            raise VertexCoincidence(f"center coincides with vertex {v}")
        theta = math.atan2(u.y, u.x)
        back = p - u * exit_parameter(omega, p, -u)
        found.append((theta, Chord(back, v), u * (1.0 / u.norm())))
    found.sort(key=lambda item: item[0])
    chords = []
    kept_dirs = []
    for theta, chord, unit in found:
        if any(abs(unit.cross(w)) <= EPS for w in kept_dirs):
            continue
        kept_dirs.append(unit)
        chords.append(chord)
    return chords


# ---------------------------------------------------------------- balls

def _check_radius(r):
    if not r > 0:
        raise NonpositiveRadius(f"radius must be positive, got {r}")
    return float(r)


def funk_ball(omega, p, r, with_spokes=False):
    """Funk ball: the homothetic copy p + (1 - e^-r)(omega - p)."""
    p = require_interior(omega, p, "ball center")
    r = _check_radius(r)
    boundary = omega.scale_about(p, -math.expm1(-r))
    return Ball(MetricKind.FUNK, p, r, boundary, _maybe_spokes(omega, p, with_spokes))


def reverse_funk_ball(omega, p, r, with_spokes=False):
    """Reverse Funk ball: the reflected copy p - (e^r - 1)(omega - p) clipped
    to omega. Saturates to omega once the copy covers it."""
    from .convex_ops import intersect

    p = require_interior(omega, p, "ball center")
    r = _check_radius(r)
    reflected = omega.scale_about(p, -math.expm1(r))
    boundary = intersect(omega, reflected)
    if not boundary:
        # the reflected copy always contains p in its interior, so this is
        # only reachable through a tolerance corner case
        boundary = omega
    return Ball(MetricKind.REVERSE_FUNK, p, r, boundary, _maybe_spokes(omega, p, with_spokes))


def hilbert_ball_points(omega, p, r):
    """Points at Hilbert distance ``r`` from ``p`` on each of the 2m spoke
    rays, sorted by angle around ``p``."""
    k = math.exp(2.0 * r)
    out = []
    for chord in spokes(omega, p):
        fwd = chord.second - p
        bwd = chord.first - p
        T, S = fwd.norm(), bwd.norm()
        # along a ray with exit distance T ahead and S behind, the point at
        # distance lam satisfies T (S + lam) = k (T - lam) S
        lam_f = T * S * (k - 1.0) / (T + k * S)
        lam_b = S * T * (k - 1.0) / (S + k * T)
        out.append(p + fwd * (lam_f / T))
        out.append(p + bwd * (lam_b / S))
    out.sort(key=lambda q: _angle_key(math.atan2(q.y - p.y, q.x - p.x)))
    return out


def hilbert_ball(omega, p, r, with_spokes=False):
    p = require_interior(omega, p, "ball center")
    r = _check_radius(r)
    boundary = ConvexPolygon(hilbert_ball_points(omega, p, r))
    return Ball(MetricKind.HILBERT, p, r, boundary, _maybe_spokes(omega, p, with_spokes))


def ball(omega, p, r, kind, with_spokes=False):
    kind = MetricKind(kind)
    build = {
        MetricKind.FUNK: funk_ball,
        MetricKind.REVERSE_FUNK: reverse_funk_ball,
        MetricKind.HILBERT: hilbert_ball,
    }[kind]
    return build(omega, p, r, with_spokes)


def _maybe_spokes(omega, p, with_spokes):
    return tuple(spokes(omega, p)) if with_spokes else None

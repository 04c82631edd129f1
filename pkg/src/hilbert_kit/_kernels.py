"""Batched numeric kernels.

Every kernel exists twice: a numba ``@njit`` loop and a vectorized numpy
version. The public names dispatch to numba unless it is missing or the
environment variable ``HILBERT_KIT_DISABLE_NUMBA`` is set to a non-empty
value other than ``0``. Both paths evaluate the same formulas in the same
order, so they agree to rounding.

A convex polygon is passed in half-plane form: unit outward ``normals``
(m, 2) and ``offsets`` (m,), so that the polygon is
``{x : normals @ x <= offsets}``. The slack of a point against edge ``i`` is
``offsets[i] - normals[i] @ x``.

For interior points p, q the forward Funk distance has the closed form

    F(p, q) = log1p(max(0, max_i (n_i . (q - p)) / slack_i(q)))

which is what ``funk_matrix`` evaluates.
"""

import math
import os

import numpy as np

try:
    import numba
except ImportError:  # pragma: no cover - exercised only without numba
    numba = None


def _flag_disabled():
    value = os.environ.get("HILBERT_KIT_DISABLE_NUMBA", "")
    return value not in ("", "0")


HAVE_NUMBA = numba is not None
USE_NUMBA = HAVE_NUMBA and not _flag_disabled()


# ---------------------------------------------------------------- numpy path

def slacks_numpy(normals, offsets, pts):
    return offsets[None, :] - pts @ normals.T


def funk_matrix_numpy(normals, offsets, P, Q):
    """F[a, b] = forward Funk distance from P[a] to Q[b]."""
    sq = slacks_numpy(normals, offsets, Q)                    # (k, m)
    diff = Q[None, :, :] - P[:, None, :]                      # (n, k, 2)
    num = diff[..., 0:1] * normals[None, None, :, 0] + diff[..., 1:2] * normals[None, None, :, 1]
    ratio = num / sq[None, :, :]
    best = np.maximum(ratio.max(axis=2), 0.0)
    return np.log1p(best)


def classify_numpy(normals, offsets, pts, eps):
    """Return 1 interior, 0 boundary, -1 exterior for each row of ``pts``."""
    s = slacks_numpy(normals, offsets, pts).min(axis=1)
    out = np.full(len(pts), -1, dtype=np.int8)
    out[s >= -eps] = 0
    out[s > eps] = 1
    return out


# ---------------------------------------------------------------- numba path

def _funk_matrix_loop(normals, offsets, P, Q):
    n = P.shape[0]
    k = Q.shape[0]
    m = normals.shape[0]
    sq = np.empty((k, m))
    for b in range(k):
        for i in range(m):
            sq[b, i] = offsets[i] - (Q[b, 0] * normals[i, 0] + Q[b, 1] * normals[i, 1])
    out = np.empty((n, k))
    for a in range(n):
        for b in range(k):
            dx = Q[b, 0] - P[a, 0]
            dy = Q[b, 1] - P[a, 1]
            best = 0.0
            for i in range(m):
                r = (dx * normals[i, 0] + dy * normals[i, 1]) / sq[b, i]
                if r > best:
                    best = r
            out[a, b] = math.log1p(best)
    return out


def _classify_loop(normals, offsets, pts, eps):
    n = pts.shape[0]
    m = normals.shape[0]
    out = np.empty(n, dtype=np.int8)
    for a in range(n):
        s = np.inf
        for i in range(m):
            v = offsets[i] - (pts[a, 0] * normals[i, 0] + pts[a, 1] * normals[i, 1])
            if v < s:
                s = v
        if s > eps:
            out[a] = 1
        elif s >= -eps:
            out[a] = 0
        else:
            out[a] = -1
    return out


if HAVE_NUMBA:
    funk_matrix_numba = numba.njit(cache=True)(_funk_matrix_loop)
    classify_numba = numba.njit(cache=True)(_classify_loop)
else:  # pragma: no cover
    funk_matrix_numba = None
    classify_numba = None


# ---------------------------------------------------------------- dispatch

def _prep(a):
    return np.ascontiguousarray(a, dtype=np.float64)


def funk_matrix(normals, offsets, P, Q, backend=None):
    """Forward Funk distances from every row of ``P`` to every row of ``Q``.

    Points must be strictly interior; no check is made here.
    """
    normals, offsets = _prep(normals), _prep(offsets)
    P = _prep(P).reshape(-1, 2)
    Q = _prep(Q).reshape(-1, 2)
    if _use_numba(backend):
        return funk_matrix_numba(normals, offsets, P, Q)
    return funk_matrix_numpy(normals, offsets, P, Q)


def classify_points(normals, offsets, pts, eps, backend=None):
    normals, offsets = _prep(normals), _prep(offsets)
    pts = _prep(pts).reshape(-1, 2)
    if _use_numba(backend):
        return classify_numba(normals, offsets, pts, float(eps))
    return classify_numpy(normals, offsets, pts, eps)


def _use_numba(backend):
    if backend is None:
        return USE_NUMBA
    if backend == "numba":
        if not HAVE_NUMBA:
            raise RuntimeError("numba backend requested but numba is not installed")
        return True
    if backend == "numpy":
        return False
    raise ValueError(f"unknown backend {backend!r}")

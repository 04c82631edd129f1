"""Planar convex geometry kernel: Funk and Hilbert metrics and balls,
Macbeath regions, polar bodies, convex booleans, Minkowski sums, minimum
enclosing circles and metric spanning trees, with SVG and Ipe output."""

__version__ = "0.1.0"

from .algorithms import Circle, Tree, metric_mst, min_enclosing_ball
from .convex_ops import (
    Region,
    Ring,
    intersect,
    macbeath_region,
    minkowski_sum,
    polar_dual,
    subtract,
    union,
)
from .geom import (
    EMPTY,
    EPS,
    UNBOUNDED,
    Chord,
    ConvexPolygon,
    HalfPlane,
    Point,
    chord_through,
    convex_hull,
    halfplane_intersection,
    orientation,
    point_in_polygon,
    ray_boundary_intersection,
)
from .metrics import (
    Ball,
    MetricKind,
    funk_ball,
    funk_distance,
    hilbert_ball,
    hilbert_distance,
    reverse_funk_ball,
    reverse_funk_distance,
    spokes,
)

__all__ = [
    "Ball",
    "Chord",
    "Circle",
    "ConvexPolygon",
    "EMPTY",
    "EPS",
    "HalfPlane",
    "MetricKind",
    "Point",
    "Region",
    "Ring",
    "Tree",
    "UNBOUNDED",
    "chord_through",
    "convex_hull",
    "funk_ball",
    "funk_distance",
    "halfplane_intersection",
    "hilbert_ball",
    "hilbert_distance",
    "intersect",
    "macbeath_region",
    "metric_mst",
    "min_enclosing_ball",
    "minkowski_sum",
    "orientation",
    "point_in_polygon",
    "polar_dual",
    "ray_boundary_intersection",
    "reverse_funk_ball",
    "reverse_funk_distance",
    "spokes",
    "subtract",
    "union",
]

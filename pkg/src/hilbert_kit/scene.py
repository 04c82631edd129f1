"""Scene files: a line-oriented description of a domain, named polygons and
point sets, and the constructions to draw.

Grammar (one statement per line; a ``#`` at the start of a token begins a
comment, except for ``#rrggbb`` color values)::

    domain   X Y X Y X Y ...
    polygon  NAME X Y X Y X Y ...
    points   NAME X Y [X Y ...]
    style    KEY VALUE
    option   translate-centroid
    KIND     key=value ...

Request kinds and their arguments:

    macbeath           at=POINTS
    funk_ball          at=POINTS r=RADIUS [spokes=yes|no]
    reverse_funk_ball  at=POINTS r=RADIUS [spokes=yes|no]
    hilbert_ball       at=POINTS r=RADIUS [spokes=yes|no]
    spokes             at=POINTS
    polar              of=POLYGON
    minkowski          a=POLYGON b=POLYGON
    union              a=POLYGON b=POLYGON
    intersect          a=POLYGON b=POLYGON
    subtract           a=POLYGON b=POLYGON
    meb                of=POINTS
    mst                of=POINTS metric=hilbert|funk_min

``POLYGON`` may be the reserved name ``domain``. Requests that run on a
POINTS set produce one construction per point.
"""

import re
from dataclasses import dataclass, field

from . import algorithms, convex_ops, metrics
from .errors import GeometryError
from .geom import ConvexPolygon, Point, point_in_polygon

DOMAIN_NAME = "domain"
LAYERS = ("domain", "input", "output", "spokes")

BALL_KINDS = ("funk_ball", "reverse_funk_ball", "hilbert_ball")
REQUEST_ARGS = {
    "macbeath": ({"at"}, set()),
    "funk_ball": ({"at", "r"}, {"spokes"}),
    "reverse_funk_ball": ({"at", "r"}, {"spokes"}),
    "hilbert_ball": ({"at", "r"}, {"spokes"}),
    "spokes": ({"at"}, set()),
    "polar": ({"of"}, set()),
    "minkowski": ({"a", "b"}, set()),
    "union": ({"a", "b"}, set()),
    "intersect": ({"a", "b"}, set()),
    "subtract": ({"a", "b"}, set()),
    "meb": ({"of"}, set()),
    "mst": ({"of", "metric"}, set()),
}
NEEDS_DOMAIN = {"macbeath", "spokes", "mst", *BALL_KINDS}
POINT_ARGS = {"at", "of"}
POLYGON_ARGS = {"a", "b", "of"}
POINT_KINDS = {"macbeath", "spokes", "meb", "mst", *BALL_KINDS}


class ParseError(ValueError):
    def __init__(self, message, line, column):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class ValidationError(ValueError):
    pass


@dataclass
class StyleOptions:
    canvas: float = 400.0
    colors: dict = field(default_factory=lambda: {
        "domain": "#000000", "input": "#2b6cb0", "output": "#c05621", "spokes": "#808080"})
    fill_opacity: dict = field(default_factory=lambda: {
        "domain": 0.0, "input": 0.15, "output": 0.3, "spokes": 0.0})
    stroke_width: dict = field(default_factory=lambda: {
        "domain": 1.5, "input": 1.0, "output": 1.0, "spokes": 0.5})

    def set(self, key, value):
        """Apply one ``style KEY VALUE`` statement."""
        if key == "canvas":
            v = float(value)
            if not v > 0:
                raise ValueError("canvas must be positive")
            self.canvas = v
            return
        prop, _, layer = key.partition(".")
        if layer not in LAYERS:
            raise ValueError(f"unknown style key {key!r}")
        if prop == "color":
            if not re.fullmatch(r"#[0-9a-fA-F]{6}", value):
                raise ValueError(f"color must be #rrggbb, got {value!r}")
            self.colors[layer] = value.lower()
        elif prop == "fill-opacity":
            v = float(value)
            if not 0.0 <= v <= 1.0:
                raise ValueError("fill opacity must lie in [0, 1]")
            self.fill_opacity[layer] = v
        elif prop == "stroke-width":
            v = float(value)
            if not v > 0:
                raise ValueError("stroke width must be positive")
            self.stroke_width[layer] = v
        else:
            raise ValueError(f"unknown style key {key!r}")

    def statements(self):
        defaults = StyleOptions()
        out = []
        if self.canvas != defaults.canvas:
            out.append(("canvas", repr(self.canvas)))
        for layer in LAYERS:
            if self.colors[layer] != defaults.colors[layer]:
                out.append((f"color.{layer}", self.colors[layer]))
            if self.fill_opacity[layer] != defaults.fill_opacity[layer]:
                out.append((f"fill-opacity.{layer}", repr(self.fill_opacity[layer])))
            if self.stroke_width[layer] != defaults.stroke_width[layer]:
                out.append((f"stroke-width.{layer}", repr(self.stroke_width[layer])))
        return out


@dataclass
class ConstructionRequest:
    kind: str
    args: dict
    line: int = field(default=0, compare=False)

    def describe(self):
        inner = " ".join(f"{k}={v}" for k, v in self.args.items())
        where = f" (line {self.line})" if self.line else ""
        return f"{self.kind} {inner}{where}"


@dataclass
class Scene:
    domain: ConvexPolygon = None
    polygons: dict = field(default_factory=dict)
    points: dict = field(default_factory=dict)
    requests: list = field(default_factory=list)
    style: StyleOptions = field(default_factory=StyleOptions)
    translate_centroid: bool = False

    def polygon(self, name):
        if name == DOMAIN_NAME:
            return self.domain
        return self.polygons[name]

    def resolve_point(self, ref):
        """A point by ``NAME`` (single-point set) or ``NAME[i]``."""
        m = re.fullmatch(r"([A-Za-z_][\w\-]*)(?:\[(\d+)\])?", ref)
        if not m or m.group(1) not in self.points:
            raise ValidationError(f"unknown point {ref!r}")
        pts = self.points[m.group(1)]
        if m.group(2) is None:
            if len(pts) != 1:
                raise ValidationError(f"point set {ref!r} has {len(pts)} points; use {ref}[i]")
            return pts[0]
        i = int(m.group(2))
        if i >= len(pts):
            raise ValidationError(f"{ref!r} is out of range ({len(pts)} points)")
        return pts[i]


# ---------------------------------------------------------------- parsing

_NAME = re.compile(r"[A-Za-z_][\w\-]*\Z")


def _numbers(tokens, line):
    out = []
    for col, tok in tokens:
        try:
            v = float(tok)
        except ValueError:
            raise ParseError(f"expected a number, got {tok!r}", line, col) from None
        if v != v or v in (float("inf"), float("-inf")):
            raise ParseError(f"non-finite number {tok!r}", line, col)
        out.append(v)
    return out


def _pairs(tokens, line, at_least, what):
    if len(tokens) % 2:
        col = tokens[-1][0]
        raise ParseError(f"{what} needs an even number of coordinates", line, col)
    nums = _numbers(tokens, line)
    pts = [Point(nums[i], nums[i + 1]) for i in range(0, len(nums), 2)]
    if len(pts) < at_least:
        raise ParseError(f"{what} needs at least {at_least} points", line, 1)
    return pts


def _polygon(pts, name, line):
    try:
        return ConvexPolygon(pts)
    except GeometryError as exc:
        raise ValidationError(f"polygon {name!r} (line {line}): {type(exc).__name__}: {exc}") from None


_COMMENT = re.compile(r"(?:^|(?<=\s))#(?![0-9a-fA-F]{6}(?:\s|$))")


def parse_scene(text):
    """Parse and validate scene text; raises ``ParseError`` or
    ``ValidationError``."""
    scene = Scene()
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = _COMMENT.split(raw, 1)[0]
        tokens = [(m.start() + 1, m.group()) for m in re.finditer(r"\S+", body)]
        if not tokens:
            continue
        (kcol, keyword), rest = tokens[0], tokens[1:]
        if keyword == "domain":
            if scene.domain is not None:
                raise ParseError("domain declared twice", lineno, kcol)
            scene.domain = _polygon(_pairs(rest, lineno, 3, "domain"), "domain", lineno)
        elif keyword in ("polygon", "points"):
            if not rest:
                raise ParseError(f"{keyword} needs a name", lineno, kcol)
            ncol, name = rest[0]
            if not _NAME.match(name) or name == DOMAIN_NAME:
                raise ParseError(f"invalid name {name!r}", lineno, ncol)
            if name in seen:
                raise ParseError(f"name {name!r} declared twice", lineno, ncol)
            seen.add(name)
            if keyword == "polygon":
                scene.polygons[name] = _polygon(_pairs(rest[1:], lineno, 3, "polygon"), name, lineno)
            else:
                scene.points[name] = tuple(_pairs(rest[1:], lineno, 1, "points"))
        elif keyword == "style":
            if len(rest) != 2:
                raise ParseError("style takes KEY VALUE", lineno, kcol)
            try:
                scene.style.set(rest[0][1], rest[1][1])
            except ValueError as exc:
                raise ParseError(str(exc), lineno, rest[0][0]) from None
        elif keyword == "option":
            if len(rest) != 1 or rest[0][1] != "translate-centroid":
                raise ParseError("unknown option", lineno, rest[0][0] if rest else kcol)
            scene.translate_centroid = True
        elif keyword in REQUEST_ARGS:
            scene.requests.append(_request(keyword, rest, lineno))
        else:
            raise ParseError(f"unknown keyword {keyword!r}", lineno, kcol)
    validate_scene(scene)
    return scene


def _request(kind, tokens, line):
    required, optional = REQUEST_ARGS[kind]
    args = {}
    for col, tok in tokens:
        key, eq, value = tok.partition("=")
        if not eq or not value:
            raise ParseError(f"expected key=value, got {tok!r}", line, col)
        if key not in required | optional:
            raise ParseError(f"{kind} does not take {key!r}", line, col)
        if key in args:
            raise ParseError(f"argument {key!r} repeated", line, col)
        if key == "r":
            args[key] = _numbers([(col + 2, value)], line)[0]
        elif key == "spokes":
            if value not in ("yes", "no"):
                raise ParseError("spokes must be yes or no", line, col)
            args[key] = value == "yes"
        else:
            args[key] = value
    missing = required - set(args)
    if missing:
        raise ParseError(f"{kind} is missing {', '.join(sorted(missing))}", line, 1)
    return ConstructionRequest(kind, args, line)


def validate_scene(scene):
    for req in scene.requests:
        where = req.describe()
        if req.kind in NEEDS_DOMAIN and scene.domain is None:
            raise ValidationError(f"{where}: needs a domain, none declared")
        for key, value in req.args.items():
            if key in POINT_ARGS and req.kind in POINT_KINDS:
                if value not in scene.points:
                    raise ValidationError(f"{where}: unknown point set {value!r}")
            elif key in POLYGON_ARGS:
                if value == DOMAIN_NAME:
                    if scene.domain is None:
                        raise ValidationError(f"{where}: no domain declared")
                elif value not in scene.polygons:
                    raise ValidationError(f"{where}: unknown polygon {value!r}")
        if req.kind in BALL_KINDS and not req.args["r"] > 0:
            raise ValidationError(f"{where}: radius must be positive")
        if req.kind == "mst" and req.args["metric"] not in algorithms.MST_KINDS:
            raise ValidationError(f"{where}: metric must be one of {', '.join(algorithms.MST_KINDS)}")
        if req.kind in NEEDS_DOMAIN:
            name = req.args.get("at", req.args.get("of"))
            for i, p in enumerate(scene.points[name]):
                if point_in_polygon(scene.domain, p) != "interior":
                    raise ValidationError(
                        f"{where}: point {name}[{i}] = ({p.x:.12g}, {p.y:.12g}) "
                        "is not strictly inside the domain")
    return scene


# ---------------------------------------------------------------- serializing

def _coords(pts):
    return " ".join(f"{p.x!r} {p.y!r}" for p in pts)


def serialize_scene(scene):
    """Canonical text form; ``parse_scene`` of it reproduces ``scene``."""
    lines = []
    if scene.domain is not None:
        lines.append(f"domain {_coords(scene.domain.vertices)}")
    for name, poly in scene.polygons.items():
        lines.append(f"polygon {name} {_coords(poly.vertices)}")
    for name, pts in scene.points.items():
        lines.append(f"points {name} {_coords(pts)}")
    for key, value in scene.style.statements():
        lines.append(f"style {key} {value}")
    if scene.translate_centroid:
        lines.append("option translate-centroid")
    for req in scene.requests:
        parts = [req.kind]
        for key, value in req.args.items():
            if key == "spokes":
                value = "yes" if value else "no"
            elif key == "r":
                value = repr(value)
            parts.append(f"{key}={value}")
        lines.append(" ".join(parts))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------- computing

@dataclass
class Result:
    request: ConstructionRequest
    value: object
    note: str = ""


def compute(scene, seed=0, translate_centroid=None):
    """Evaluate every request; one ``Result`` per request, in order.

    Kernel precondition failures are re-raised as ``ValidationError`` naming
    the request.
    """
    if translate_centroid is None:
        translate_centroid = scene.translate_centroid
    out = []
    for req in scene.requests:
        try:
            out.append(_compute_one(scene, req, seed, translate_centroid))
        except GeometryError as exc:
            raise ValidationError(f"{req.describe()}: {type(exc).__name__}: {exc}") from None
    return out


def _compute_one(scene, req, seed, translate_centroid):
    k, a = req.kind, req.args
    omega = scene.domain
    if k in BALL_KINDS:
        kind = k[: -len("_ball")]
        balls = [metrics.ball(omega, p, a["r"], kind, a.get("spokes", False))
                 for p in scene.points[a["at"]]]
        return Result(req, balls)
    if k == "macbeath":
        return Result(req, [convex_ops.macbeath_region(omega, p) for p in scene.points[a["at"]]])
    if k == "spokes":
        return Result(req, [(p, metrics.spokes(omega, p)) for p in scene.points[a["at"]]])
    if k == "polar":
        poly = scene.polygon(a["of"])
        note = ""
        if translate_centroid:
            c = poly.centroid()
            poly = poly.translate(-c)
            note = f"translate-centroid: polar taken after shifting by ({-c.x:.9g}, {-c.y:.9g})"
        return Result(req, convex_ops.polar_dual(poly), note)
    if k in ("minkowski", "union", "intersect", "subtract"):
        fn = {
            "minkowski": convex_ops.minkowski_sum,
            "union": convex_ops.union,
            "intersect": convex_ops.intersect,
            "subtract": convex_ops.subtract,
        }[k]
        return Result(req, fn(scene.polygon(a["a"]), scene.polygon(a["b"])))
    if k == "meb":
        return Result(req, algorithms.min_enclosing_ball(scene.points[a["of"]], seed=seed))
    if k == "mst":
        return Result(req, algorithms.metric_mst(omega, scene.points[a["of"]], a["metric"]))
    raise AssertionError(k)

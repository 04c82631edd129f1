"""SVG and Ipe XML emitters.

Both emitters draw the same list of primitives. Kernel coordinates are
written unchanged (9 significant digits); placement on the canvas is a
transform, so the numbers in a path are the numbers the kernel computed.
SVG gets a y-flipping group transform, Ipe a per-object ``matrix`` without
a flip since Ipe is y-up.
"""

import math
import xml.etree.ElementTree as ET
from dataclasses import dataclass, field
from xml.sax.saxutils import escape, quoteattr

from . import __version__
from .algorithms import Circle, Tree
from .convex_ops import Region
from .geom import ConvexPolygon, Outcome
from .metrics import Ball

CREATOR = f"hilbert-kit {__version__}"
SVG_NS = "http://www.w3.org/2000/svg"
MARK_RADIUS = 2.5  # output units
IPE_PAGE = (595.0, 842.0)


def fmt(v):
    s = format(float(v), ".9g")
    return "0" if s == "-0" else s


@dataclass
class Path:
    rings: list           # list of [(x, y), ...]
    closed: bool = True
    evenodd: bool = False
    filled: bool = True


@dataclass
class Segment:
    a: tuple
    b: tuple


@dataclass
class Mark:
    p: tuple


@dataclass
class Disk:
    center: tuple
    radius: float


@dataclass
class Group:
    name: str
    layer: str
    items: list = field(default_factory=list)
    children: list = field(default_factory=list)


def _ring(poly):
    return [tuple(v) for v in poly.vertices]


def build_groups(scene, results):
    """Turn a scene and its results into layered drawing groups."""
    groups = []
    if scene.domain is not None:
        groups.append(Group("domain", "domain", [Path([_ring(scene.domain)])]))
    inputs = Group("inputs", "input")
    for poly in scene.polygons.values():
        inputs.items.append(Path([_ring(poly)]))
    for pts in scene.points.values():
        inputs.items.extend(Mark(tuple(p)) for p in pts)
    groups.append(inputs)
    for i, res in enumerate(results):
        g = Group(f"result-{i}-{res.request.kind}", "output")
        _add_value(g, res.value, scene, res)
        groups.append(g)
    return groups


def _add_value(g, value, scene, res):
    if isinstance(value, list):
        for v in value:
            _add_value(g, v, scene, res)
    elif isinstance(value, ConvexPolygon):
        g.items.append(Path([_ring(value)]))
    elif isinstance(value, Ball):
        g.items.append(Path([_ring(value.boundary)]))
        g.items.append(Mark(tuple(value.center)))
        if value.spokes is not None:
            g.children.append(_spoke_group(g, value.center, value.spokes))
    elif isinstance(value, tuple) and len(value) == 2:   # (center, chords)
        center, chords = value
        g.items.append(Mark(tuple(center)))
        g.children.append(_spoke_group(g, center, chords))
    elif isinstance(value, Region):
        if value.rings:
            g.items.append(Path([list(map(tuple, r.points)) for r in value.rings], evenodd=True))
    elif isinstance(value, Outcome):
        pass
    elif isinstance(value, Circle):
        g.items.append(Disk(tuple(value.center), value.radius))
        g.items.append(Mark(tuple(value.center)))
    elif isinstance(value, Tree):
        pts = scene.points[res.request.args["of"]]
        for i, j, _ in value.edges:
            g.items.append(Segment(tuple(pts[i]), tuple(pts[j])))
    else:
        raise TypeError(f"cannot draw {type(value).__name__}")


def _spoke_group(parent, center, chords):
    # each chord is drawn as the two rays from the center to its endpoints
    c = tuple(center)
    items = []
    for ch in chords:
        items.append(Segment(c, tuple(ch.first)))
        items.append(Segment(c, tuple(ch.second)))
    return Group(f"{parent.name}-spokes-{len(parent.children)}", "spokes", items)


def _walk(groups):
    for g in groups:
        yield g
        yield from _walk(g.children)


def bounding_box(groups):
    xs, ys = [], []
    for g in _walk(groups):
        for it in g.items:
            if isinstance(it, Path):
                for ring in it.rings:
                    xs.extend(p[0] for p in ring)
                    ys.extend(p[1] for p in ring)
            elif isinstance(it, Segment):
                xs += [it.a[0], it.b[0]]
                ys += [it.a[1], it.b[1]]
            elif isinstance(it, Mark):
                xs.append(it.p[0])
                ys.append(it.p[1])
            elif isinstance(it, Disk):
                xs += [it.center[0] - it.radius, it.center[0] + it.radius]
                ys += [it.center[1] - it.radius, it.center[1] + it.radius]
    if not xs:
        return (-1.0, -1.0, 1.0, 1.0)
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    if x1 - x0 < 1e-12:
        x0, x1 = x0 - 0.5, x1 + 0.5
    if y1 - y0 < 1e-12:
        y0, y1 = y0 - 0.5, y1 + 0.5
    return (x0, y0, x1, y1)


def _placement(groups, canvas):
    x0, y0, x1, y1 = bounding_box(groups)
    s = canvas / max(x1 - x0, y1 - y0)
    pad = 0.05 * canvas
    return s, pad, (x0, y0, x1, y1)


def _notes(results):
    return [r.note for r in results if r.note]


# ---------------------------------------------------------------- SVG

def _svg_path_data(path):
    parts = []
    for ring in path.rings:
        head, *tail = ring
        parts.append(f"M {fmt(head[0])} {fmt(head[1])}")
        parts.extend(f"L {fmt(x)} {fmt(y)}" for x, y in tail)
        if path.closed:
            parts.append("Z")
    return " ".join(parts)


def _svg_items(g, style, s, out, indent):
    color = style.colors[g.layer]
    width = fmt(style.stroke_width[g.layer] / s)
    opacity = fmt(style.fill_opacity[g.layer])
    pad = "  " * indent
    out.append(f'{pad}<g id="{g.name}" class="{g.layer}" stroke="{color}" '
               f'stroke-width="{width}" fill="{color}" fill-opacity="{opacity}">')
    for it in g.items:
        if isinstance(it, Path):
            rule = ' fill-rule="evenodd"' if it.evenodd else ""
            out.append(f'{pad}  <path d="{_svg_path_data(it)}"{rule}/>')
        elif isinstance(it, Segment):
            out.append(f'{pad}  <line x1="{fmt(it.a[0])}" y1="{fmt(it.a[1])}" '
                       f'x2="{fmt(it.b[0])}" y2="{fmt(it.b[1])}"/>')
        elif isinstance(it, Mark):
            out.append(f'{pad}  <circle cx="{fmt(it.p[0])}" cy="{fmt(it.p[1])}" '
                       f'r="{fmt(MARK_RADIUS / s)}" fill-opacity="1" stroke="none"/>')
        elif isinstance(it, Disk):
            out.append(f'{pad}  <circle cx="{fmt(it.center[0])}" cy="{fmt(it.center[1])}" '
                       f'r="{fmt(it.radius)}"/>')
    for child in g.children:
        _svg_items(child, style, s, out, indent + 1)
    out.append(f"{pad}</g>")


def emit_svg(scene, results):
    """Standalone SVG 1.1 document; byte-identical for identical input."""
    groups = build_groups(scene, results)
    canvas = scene.style.canvas
    s, pad, (x0, y0, x1, y1) = _placement(groups, canvas)
    width = s * (x1 - x0) + 2 * pad
    height = s * (y1 - y0) + 2 * pad
    # x' = s*x + tx, y' = -s*y + ty puts the kernel's y-up frame on the page
    tx = pad - s * x0
    ty = pad + s * y1
    out = [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        f'<svg xmlns="{SVG_NS}" version="1.1" width="{fmt(width)}" height="{fmt(height)}" '
        f'viewBox="0 0 {fmt(width)} {fmt(height)}">',
        f"  <desc>{escape(CREATOR)}</desc>",
    ]
    for note in _notes(results):
        out.append(f"  <metadata>{escape(note)}</metadata>")
    out.append(f'  <g id="figure" transform="matrix({fmt(s)} 0 0 {fmt(-s)} {fmt(tx)} {fmt(ty)})" '
               'stroke-linejoin="round" stroke-linecap="round">')
    for g in groups:
        _svg_items(g, scene.style, s, out, 2)
    out.append("  </g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------- Ipe

def _ipe_color(hexcolor):
    r, g, b = (int(hexcolor[i:i + 2], 16) / 255 for i in (1, 3, 5))
    return f"{fmt(round(r, 4))} {fmt(round(g, 4))} {fmt(round(b, 4))}"


def _opacity_name(v):
    return f"{round(100 * v)}%"


def _ipe_path_data(path):
    lines = []
    for ring in path.rings:
        head, *tail = ring
        lines.append(f"{fmt(head[0])} {fmt(head[1])} m")
        lines.extend(f"{fmt(x)} {fmt(y)} l" for x, y in tail)
        if path.closed:
            lines.append("h")
    return "\n".join(lines)


def emit_ipe(scene, results):
    """Ipe 7 XML document with layers domain, input, output and spokes."""
    groups = build_groups(scene, results)
    style = scene.style
    s, pad, (x0, y0, x1, y1) = _placement(groups, style.canvas)
    tx = 64.0 - s * x0
    ty = 64.0 - s * y0
    matrix = f"{fmt(s)} 0 0 {fmt(s)} {fmt(tx)} {fmt(ty)}"
    opacities = sorted({_opacity_name(v) for v in style.fill_opacity.values() if v > 0},
                       key=lambda n: int(n[:-1]))
    out = [
        '<?xml version="1.0"?>',
        '<!DOCTYPE ipe SYSTEM "ipe.dtd">',
        f'<ipe version="70218" creator={quoteattr(CREATOR)}>',
    ]
    notes = _notes(results)
    if notes:
        out.append(f"<info subject={quoteattr('; '.join(notes))}/>")
    out.append('<ipestyle name="hilbert-kit">')
    out.append('<symbol name="mark/disk(sx)" transformations="translations">')
    out.append('<path fill="sym-stroke">\n0.6 0 0 0.6 0 0 e\n</path>')
    out.append("</symbol>")
    for name in opacities:
        out.append(f'<opacity name="{name}" value="{fmt(int(name[:-1]) / 100)}"/>')
    out.append(f'<layout paper="{fmt(IPE_PAGE[0])} {fmt(IPE_PAGE[1])}" '
               f'origin="0 0" frame="{fmt(IPE_PAGE[0])} {fmt(IPE_PAGE[1])}"/>')
    out.append("</ipestyle>")
    out.append("<page>")
    for layer in ("domain", "input", "output", "spokes"):
        out.append(f'<layer name="{layer}"/>')
    out.append('<view layers="domain input output spokes" active="output"/>')
    for g in _walk(groups):
        color = _ipe_color(style.colors[g.layer])
        pen = fmt(style.stroke_width[g.layer])
        op = style.fill_opacity[g.layer]
        for it in g.items:
            if isinstance(it, Path):
                attrs = f'layer="{g.layer}" matrix="{matrix}" stroke="{color}" pen="{pen}"'
                if op > 0:
                    attrs += f' fill="{color}" opacity="{_opacity_name(op)}"'
                if it.evenodd:
                    attrs += ' fillrule="eofill"'
                out.append(f"<path {attrs}>\n{_ipe_path_data(it)}\n</path>")
            elif isinstance(it, Segment):
                data = f"{fmt(it.a[0])} {fmt(it.a[1])} m\n{fmt(it.b[0])} {fmt(it.b[1])} l"
                out.append(f'<path layer="{g.layer}" matrix="{matrix}" stroke="{color}" '
                           f'pen="{pen}">\n{data}\n</path>')
            elif isinstance(it, Mark):
                out.append(f'<use layer="{g.layer}" matrix="{matrix}" name="mark/disk(sx)" '
                           f'pos="{fmt(it.p[0])} {fmt(it.p[1])}" size="3" stroke="{color}"/>')
            elif isinstance(it, Disk):
                r = fmt(it.radius)
                data = f"{r} 0 0 {r} {fmt(it.center[0])} {fmt(it.center[1])} e"
                out.append(f'<path layer="{g.layer}" matrix="{matrix}" stroke="{color}" '
                           f'pen="{pen}">\n{data}\n</path>')
    out.append("</page>")
    out.append("</ipe>")
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------- conformance

_IPE_OPS = {"m": 2, "l": 2, "h": 0, "e": 6, "c": None, "q": 4, "a": 8}


def ipe_problems(text):
    """Structural check of an Ipe 7 document; returns a list of problems
    (empty when the document conforms)."""
    problems = []
    try:
        root = ET.fromstring(text.encode("utf-8"))
    except ET.ParseError as exc:
        return [f"not well-formed XML: {exc}"]
    if root.tag != "ipe":
        return [f"root element is <{root.tag}>, expected <ipe>"]
    version = root.get("version", "")
    if not version.isdigit() or not 70000 <= int(version) < 80000:
        problems.append(f"version {version!r} is not an Ipe 7 version")
    if not root.get("creator"):
        problems.append("missing creator attribute")
    for child in root:
        if child.tag not in ("info", "preamble", "ipestyle", "bitmap", "page"):
            problems.append(f"unexpected top-level element <{child.tag}>")
    symbols, opacities = set(), set()
    for st in root.iter("ipestyle"):
        symbols.update(e.get("name") for e in st.iter("symbol"))
        opacities.update(e.get("name") for e in st.iter("opacity"))
    pages = root.findall("page")
    if not pages:
        problems.append("document has no <page>")
    for page in pages:
        layers = [e.get("name") for e in page.findall("layer")]
        if not layers:
            problems.append("page declares no layers")
        if len(set(layers)) != len(layers):
            problems.append("duplicate layer names")
        for view in page.findall("view"):
            for name in view.get("layers", "").split():
                if name not in layers:
                    problems.append(f"view references unknown layer {name!r}")
            if view.get("active") and view.get("active") not in layers:
                problems.append("view active layer is not declared")
        for obj in page:
            if obj.tag in ("layer", "view"):
                continue
            if obj.tag not in ("path", "use", "text", "image", "group", "reference"):
                problems.append(f"unexpected page element <{obj.tag}>")
                continue
            layer = obj.get("layer")
            if layer is not None and layer not in layers:
                problems.append(f"<{obj.tag}> on undeclared layer {layer!r}")
            if obj.get("matrix") is not None and not _numbers_ok(obj.get("matrix"), 6):
                problems.append(f"<{obj.tag}> has a malformed matrix")
            if obj.get("opacity") is not None and obj.get("opacity") not in opacities:
                problems.append(f"opacity {obj.get('opacity')!r} is not defined in a style")
            if obj.tag == "path":
                problems.extend(_path_problems(obj.text or ""))
                if obj.get("fillrule") not in (None, "wind", "eofill"):
                    problems.append(f"bad fillrule {obj.get('fillrule')!r}")
            elif obj.tag == "use":
                name = obj.get("name")
                if name not in symbols:
                    problems.append(f"symbol {name!r} is not defined in an embedded style")
                if not _numbers_ok(obj.get("pos", ""), 2):
                    problems.append("<use> has a malformed pos")
    return problems


def _numbers_ok(text, count):
    parts = text.split()
    if len(parts) != count:
        return False
    try:
        return all(math.isfinite(float(p)) for p in parts)
    except ValueError:
        return False


def _path_problems(data):
    problems = []
    stack = []
    started = False
    for tok in data.split():
        if tok in _IPE_OPS:
            need = _IPE_OPS[tok]
            if tok == "c":
                ok = len(stack) >= 4 and len(stack) % 2 == 0
            else:
                ok = len(stack) == need
            if not ok:
                problems.append(f"operator {tok!r} got {len(stack)} operands")
            if tok in ("l", "h", "c", "q", "a") and not started:
                problems.append(f"operator {tok!r} before any 'm'")
            if tok == "m":
                started = True
            if tok == "h":
                started = False
            stack = []
        else:
            try:
                v = float(tok)
            except ValueError:
                problems.append(f"bad path token {tok!r}")
                continue
            if not math.isfinite(v):
                problems.append(f"non-finite path number {tok!r}")
            stack.append(v)
    if stack:
        problems.append("dangling operands at end of path")
    if not data.split():
        problems.append("empty path")
    return problems

"""hilbert-kit command line.

Exit codes: 0 success, 1 unreadable input or parse error, 2 validation
error (including kernel precondition failures while computing).
"""

import argparse
import logging
import sys
from pathlib import Path

from . import __version__, metrics
from .errors import GeometryError
from .render import emit_ipe, emit_svg
from .scene import ParseError, ValidationError, compute, parse_scene

log = logging.getLogger("hilbert_kit")

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_VALIDATION = 2


def _load(path):
    return parse_scene(Path(path).read_text(encoding="utf-8"))


def _outputs(args):
    fmts = ["svg", "ipe"] if args.format == "both" else [args.format]
    if args.output:
        base = Path(args.output)
        if len(fmts) == 1:
            return {fmts[0]: base}
        return {f: base.with_suffix(f".{f}") for f in fmts}
    stem = Path(args.scene).with_suffix("")
    return {f: stem.with_suffix(f".{f}") for f in fmts}


def cmd_render(args):
    scene = _load(args.scene)
    results = compute(scene, seed=args.seed,
                      translate_centroid=args.translate_centroid or scene.translate_centroid)
    emit = {"svg": emit_svg, "ipe": emit_ipe}
    for fmt, path in _outputs(args).items():
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(emit[fmt](scene, results), encoding="utf-8")
        log.info("wrote %s", path)
    return EXIT_OK


def cmd_dist(args):
    scene = _load(args.scene)
    if scene.domain is None:
        raise ValidationError("dist needs a domain, none declared")
    p = scene.resolve_point(args.source)
    q = scene.resolve_point(args.target)
    try:
        d = metrics.distance(scene.domain, p, q, args.metric)
    except GeometryError as exc:
        raise ValidationError(f"dist {args.source} -> {args.target}: {exc}") from None
    print(format(d, "#.12g"))
    return EXIT_OK


def cmd_check(args):
    scene = _load(args.scene)
    log.info("%s: %d request(s) OK", args.scene, len(scene.requests))
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(prog="hilbert-kit", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="count", default=0)
    sub = parser.add_subparsers(dest="command", required=True)

    r = sub.add_parser("render", help="render a scene to SVG and/or Ipe XML")
    r.add_argument("scene")
    r.add_argument("-o", "--output", help="output path (suffix replaced per format with --format both)")
    r.add_argument("--format", choices=("svg", "ipe", "both"), default="svg")
    r.add_argument("--seed", type=int, default=0, help="shuffle seed for the enclosing circle")
    r.add_argument("--translate-centroid", action="store_true",
                   help="shift polygons to their centroid before taking polars")
    r.set_defaults(func=cmd_render)

    d = sub.add_parser("dist", help="print one distance between two scene points")
    d.add_argument("scene")
    d.add_argument("--metric", choices=[k.value for k in metrics.MetricKind], default="hilbert")
    d.add_argument("--from", dest="source", required=True, help="NAME or NAME[i]")
    d.add_argument("--to", dest="target", required=True, help="NAME or NAME[i]")
    d.set_defaults(func=cmd_dist)

    c = sub.add_parser("check", help="parse and validate a scene")
    c.add_argument("scene")
    c.set_defaults(func=cmd_check)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    level = logging.WARNING - 10 * min(args.verbose, 2)
    logging.basicConfig(level=level, format="%(levelname)s: %(message)s", stream=sys.stderr)
    try:
        return args.func(args)
    except OSError as exc:
        print(f"hilbert-kit: {exc.filename}: {exc.strerror}", file=sys.stderr)
        return EXIT_PARSE
    except ParseError as exc:
        print(f"hilbert-kit: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ValidationError as exc:
        print(f"hilbert-kit: invalid scene: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())

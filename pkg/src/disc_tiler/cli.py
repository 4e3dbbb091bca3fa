"""Command-line interface: ``disc-tiler <command> ...``.

Exit codes: 0 success (or a passing/true answer), 1 a failing/false
answer, 2 usage or input errors.
"""

from __future__ import annotations

import argparse
import math
import os
import sys

from . import catalog
from .errors import DiscTilerError
from .io import parse_multicurve, read_document, serialize
from .multicurve import Multicurve, equidecomposable
from .svg import render_svg
from .validate import (Tiling, boundary_arcs, center_containment, symmetry_order,
                       triple_points, validate)

ENV_EPS = "DISC_TILER_EPS"


class UsageError(Exception):
    pass


def _positive(text: str) -> float:
    try:
        x = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if not x > 0 or not math.isfinite(x):
        raise argparse.ArgumentTypeError(f"must be a positive number: {text!r}")
    return x


def resolve_eps(flag: float | None, env=None) -> float | None:
    """The length/angle tolerance override: the flag first, then the environment."""
    if flag is not None:
        return flag
    env = os.environ if env is None else env
    raw = env.get(ENV_EPS)
    if raw is None or raw == "":
        return None
    try:
        return _positive(raw)
    except argparse.ArgumentTypeError as exc:
        raise UsageError(f"{ENV_EPS}: {exc}")


def _load_tiling(path: str, eps_flag: float | None) -> Tiling:
    doc = read_document(path)
    if not isinstance(doc, Tiling):
        raise UsageError(f"{path}: expected a tiling document")
    eps = resolve_eps(eps_flag)
    if eps is not None:
        doc = Tiling(doc.tiles, doc.tol.with_eps(eps))
    return doc


def _emit(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)


def cmd_catalog(args) -> int:
    for name in catalog.NAMES:
        print(name)
    return 0


def cmd_build(args) -> int:
    if args.name == "rotgen":
        if args.gen is None or args.n is None:
            raise UsageError("build rotgen needs --gen FILE and --n N")
        with open(args.gen) as fh:
            mc = parse_multicurve(fh.read())
        if len(mc.members) != 1:
            raise UsageError("a generator file holds exactly one curve")
        g = catalog.GeneratorCurve(mc.members[0])
        t = catalog.build_rotgen(g, args.n)
    else:
        if args.gen is not None or args.n is not None:
            raise UsageError("--gen and --n only apply to 'build rotgen'")
        t = catalog.build_named(args.name)
    _emit(serialize(t), args.output)
    return 0


def cmd_verify(args) -> int:
    t = _load_tiling(args.file, args.eps)
    report = validate(t)
    print(report.summary())
    return 0 if report.ok else 1


def _deg(x: float) -> str:
    return f"{math.degrees(x):.6g}"


def cmd_analyze(args) -> int:
    t = _load_tiling(args.file, args.eps)
    report = validate(t)
    print(f"tiles: {len(t.tiles)}")
    print(f"valid: {'yes' if report.ok else 'no'}")
    sym = symmetry_order(t)
    print(f"symmetry order: {sym.order}")
    print(f"rotationally generated: {'yes' if sym.rotationally_generated else 'no'}")
    print(center_containment(t).line())
    arcs = boundary_arcs(t)
    print(f"rim arcs (total {_deg(arcs.total)} deg):")
    for i, rim in enumerate(arcs.tiles):
        pieces = ", ".join(f"[{_deg(a.start)}, {_deg(a.end)}]" if a.sweep > 0 else f"point {_deg(a.start)}"
                           for a in rim.arcs) or "none"
        flag = "" if rim.connected else "  (disconnected)"
        print(f"  tile {i}: {pieces}{flag}")
    tps = triple_points(t)
    print(f"interior triple points: {len(tps)}")
    for tp in tps:
        print(f"  ({tp.point.x:.9f}, {tp.point.y:.9f}) tiles {list(tp.tiles)}")
    return 0


def cmd_render(args) -> int:
    _emit(render_svg(_load_tiling(args.file, None)), args.output)
    return 0


def _as_multicurve(path: str) -> Multicurve:
    with open(path) as fh:
        return parse_multicurve(fh.read())


def cmd_equidecomp(args) -> int:
    eps = resolve_eps(args.eps)
    a, b = _as_multicurve(args.a), _as_multicurve(args.b)
    d = equidecomposable(a, b, eps if eps is not None else 1e-9)
    print("equidecomposable: " + ("true" if d else "false"))
    for cls in sorted(set(d.left_profile.classes()) | set(d.right_profile.classes())):
        label = "segment" if cls == 0.0 else f"arc r={cls:g}"
        print(f"  {label}: {d.left_profile[cls]:.12g} vs {d.right_profile[cls]:.12g}")
    if d:
        print(f"pieces: {len(d.pairs)}")
        for p in d.pairs:
            g = p.isometry
            print(f"  length {p.left.length:.9f}: rotation {g.rotation:.9f}, "
                  f"translation ({g.translation.x:.9f}, {g.translation.y:.9f}), "
                  f"reflect {str(g.reflect).lower()}")
    return 0 if d else 1


def cmd_scan(args) -> int:
    hits = catalog.scan_arc_equation(args.kmax, args.nmax, args.delta, corrected=args.corrected,
                                     n_min=args.nmin)
    sys.stdout.write(catalog.hits_to_csv(hits))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="disc-tiler", description="Monohedral disc tiling toolkit.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("catalog", help="list the named tilings")
    c.add_argument("action", choices=["list"])
    c.set_defaults(func=cmd_catalog)

    b = sub.add_parser("build", help="build a named tiling or a rotationally generated one")
    b.add_argument("name", choices=list(catalog.NAMES) + ["rotgen"])
    b.add_argument("--gen", help="generator curve document (rotgen only)")
    b.add_argument("--n", type=int, help="number of tiles (rotgen only)")
    b.add_argument("-o", "--output", help="output file (default: standard output)")
    b.set_defaults(func=cmd_build)

    v = sub.add_parser("verify", help="validate a tiling document")
    v.add_argument("file")
    v.add_argument("--eps", type=_positive)
    v.set_defaults(func=cmd_verify)

    a = sub.add_parser("analyze", help="symmetry, center census, rim arcs and triple points")
    a.add_argument("file")
    a.add_argument("--eps", type=_positive)
    a.set_defaults(func=cmd_analyze)

    r = sub.add_parser("render", help="render a tiling as SVG")
    r.add_argument("file")
    r.add_argument("-o", "--output", help="output file (default: standard output)")
    r.set_defaults(func=cmd_render)

    e = sub.add_parser("equidecomp", help="decide equidecomposability of two multicurves")
    e.add_argument("a")
    e.add_argument("b")
    e.add_argument("--eps", type=_positive)
    e.set_defaults(func=cmd_equidecomp)

    s = sub.add_parser("scan-arc-equation", help="near-solutions of the arc-length equation, as CSV")
    s.add_argument("--kmax", type=int, required=True)
    s.add_argument("--nmax", type=int, required=True)
    s.add_argument("--delta", type=_positive, required=True)
    s.add_argument("--nmin", type=int, default=1)
    s.add_argument("--corrected", action="store_true",
                   help="use 2/n in place of 4/n")
    s.set_defaults(func=cmd_scan)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"disc-tiler: {exc}", file=sys.stderr)
        return 2
    except (DiscTilerError, OSError) as exc:
        print(f"disc-tiler: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

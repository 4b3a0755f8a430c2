"""Command-line interface: ``e2w {generate,check,walls,distance,pwt,render}``.

Exit codes: 0 pass, 1 failure of a checked property, 2 bad usage or input.
Set ``E2W_LOG`` to a logging level name (e.g. ``INFO``) for diagnostics.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
import time
from pathlib import Path

from . import __version__
from .core import ComplexError, EvenComplex
from .generators import (
    GrowthSpec,
    GrowthStalled,
    ParseError,
    TilingSpec,
    dumps,
    grow_random,
    load,
    preset,
    save,
    tiling_ball,
)
from .links import SchemeViolation, WeightScheme, check_link_condition
from .pwt import NotVerifiedComplex, verify_pwt
from .render import render_svg
from .walls import BadSeparation, WallNotEmbedded, WallSystem, build_walls, d1_vertex_wall

log = logging.getLogger("evenwalls.cli")

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _input_section(X: EvenComplex) -> dict:
    return {
        "name": X.name,
        "digest": X.digest(),
        "vertices": X.n_vertices,
        "edges": X.n_edges,
        "faces": X.n_faces,
        "shapes": sorted(X.shapes().sizes),
    }


def _report(command: str, X: EvenComplex | None, start: float, **sections) -> dict:
    body = {"validation": {}, "link_condition": {}, "walls": [], "pwt": {}}
    body.update(sections)
    return {
        "tool": "e2w",
        "version": __version__,
        "command": command,
        "input": _input_section(X) if X is not None else None,
        "sections": body,
        "timing": {"seconds": round(time.perf_counter() - start, 6)},
    }


def _emit(args, report: dict, text: str) -> None:
    if getattr(args, "json", False):
        out = json.dumps(report, indent=2, sort_keys=False)
        if getattr(args, "report", None):
            Path(args.report).write_text(out + "\n")
        else:
            print(out)
    else:
        print(text)


def _load(path: str) -> EvenComplex:
    try:
        return load(path)
    except (ParseError, ComplexError) as exc:
        raise UsageError(f"{type(exc).__name__}: {exc}") from exc


# -- commands ------------------------------------------------------------
def cmd_generate(args) -> int:
    try:
        if args.palette:
            palette = tuple(int(s) for s in args.palette.split(","))
            spec = GrowthSpec(seed=args.seed, palette=palette, target_faces=args.faces)
            X = grow_random(spec)
        else:
            name = None
            if args.preset:
                try:
                    tspec = preset(args.preset, args.radius)
                except KeyError as exc:
                    raise UsageError(str(exc.args[0])) from exc
                name = f"{args.preset}_r{tspec.radius}"
            elif args.k is not None and (args.gon is not None or args.pattern):
                pattern = tuple(int(s) for s in args.pattern.split(",")) if args.pattern else None
                tspec = TilingSpec(args.k, args.gon or 0, 3 if args.radius is None else args.radius, pattern)
            else:
                raise UsageError("give --preset, --k with --gon/--pattern, or --palette")
            X = tiling_ball(tspec, name=name)
    except ValueError as exc:  # SpecViolation, bad palette
        raise UsageError(f"{type(exc).__name__}: {exc}") from exc
    except GrowthStalled as exc:
        print(f"GrowthStalled: {exc}", file=sys.stderr)
        return EXIT_FAIL
    summary = f"{X.name}: V={X.n_vertices} E={X.n_edges} F={X.n_faces} shapes={X.shapes()}"
    if args.out:
        save(X, args.out)
        print(summary)
    else:
        sys.stdout.write(dumps(X))
        print(summary, file=sys.stderr)
    return EXIT_OK


def cmd_check(args) -> int:
    start = time.perf_counter()
    X = _load(args.file)
    scheme = WeightScheme(args.scheme)
    try:
        rep = check_link_condition(X, scheme)
    except SchemeViolation as exc:
        raise UsageError(f"SchemeViolation: {exc}") from exc
    report = _report(
        "check", X, start, validation={"ok": True, "error": None}, link_condition=rep.as_dict()
    )
    lines = [f"{X.name or args.file}: {rep.label}"]
    for row in rep.failures[:20]:
        g = "inf" if row.girth == float("inf") else f"{row.girth}π"
        lines.append(f"  vertex {row.vertex}: simplicial={row.simplicial} girth={g}")
    h = rep.homology
    lines.append(f"  chi={h.euler_characteristic} H1={h.h1_label()} connected={h.connected}")
    _emit(args, report, "\n".join(lines))
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_walls(args) -> int:
    start = time.perf_counter()
    X = _load(args.file)
    walls = build_walls(X, strict=False)
    rows = []
    for W in walls:
        row = W.summary()
        if W.problem:
            row["problem"] = W.problem
        rows.append(row)
    report = _report("walls", X, start, validation={"ok": True, "error": None}, walls=rows)
    lines = [f"{len(walls)} walls"]
    for r in rows:
        extra = f" ({r['problem']})" if "problem" in r else ""
        lines.append(
            f"  wall {r['id']}: dual edges {r['dual_edges']}, carrier faces {r['carrier_faces']}, "
            f"tree depth {r['tree_depth']}{extra}"
        )
    _emit(args, report, "\n".join(lines))
    return EXIT_OK if all(W.embedded for W in walls) else EXIT_FAIL


def cmd_distance(args) -> int:
    start = time.perf_counter()
    X = _load(args.file)
    for v in (args.v, args.w):
        if v is not None and not 0 <= v < X.n_vertices:
            raise UsageError(f"vertex {v} out of range")
    try:
        system = WallSystem(X)
    except (WallNotEmbedded, BadSeparation) as exc:
        raise UsageError(f"{type(exc).__name__}: {exc}") from exc
    result: dict = {"v": args.v}
    if args.wall is not None:
        if not 0 <= args.wall < len(system):
            raise UsageError(f"wall id {args.wall} out of range")
        hd = d1_vertex_wall(X, args.v, system[args.wall])
        result.update(wall=args.wall, distance_num_halves=hd.halves, distance=str(hd))
        text = f"d1({args.v}, wall {args.wall}) = {hd}"
    else:
        if args.w is None:
            raise UsageError("give a second vertex or --wall")
        d = X.d1(args.v, args.w)
        sep = [int(w) for w in system.separating(args.v, args.w)]
        result.update(w=args.w, d1=d, separating_walls=sep)
        text = f"d1({args.v}, {args.w}) = {d}; separating walls: {len(sep)} {sep}"
    report = _report("distance", X, start, validation={"ok": True, "error": None}, distance=result)
    _emit(args, report, text)
    return EXIT_OK


def cmd_pwt(args) -> int:
    start = time.perf_counter()
    X = _load(args.file)
    try:
        rep = verify_pwt(X, large_type=args.large_type, workers=max(1, args.parallel))
    except NotVerifiedComplex as exc:
        raise UsageError(f"NotVerifiedComplex ({exc})") from exc
    walls = build_walls(X)
    rows = []
    for W, r in zip(walls, rep.walls):
        row = W.summary()
        row["separation_radius_num_halves"] = r.radius.halves
        rows.append(row)
    report = _report(
        "pwt",
        X,
        start,
        validation={"ok": True, "error": None},
        link_condition={"ok": True},
        walls=rows,
        pwt=rep.as_dict(),
    )
    lines = [
        f"{rep.complex}: {rep.verdict}  K={rep.K}  max radius={rep.max_radius}  walls={len(rep.walls)}"
    ]
    for v in rep.violations[:20]:
        lines.append(f"  violation: wall {v['wall']} vertex {v['vertex']} distance {v['distance_num_halves']}/2")
    _emit(args, report, "\n".join(lines))
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_render(args) -> int:
    X = _load(args.file)
    try:
        svg = render_svg(X, wall=args.wall)
    except IndexError as exc:
        raise UsageError(str(exc)) from exc
    if args.out:
        Path(args.out).write_text(svg)
        print(f"wrote {args.out}")
    else:
        sys.stdout.write(svg)
    return EXIT_OK


# -- wiring --------------------------------------------------------------
def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="e2w", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="write a tiling ball or random complex")
    g.add_argument("--preset")
    g.add_argument("--k", type=int, help="faces per interior vertex")
    g.add_argument("--gon", type=int, help="face size")
    g.add_argument("--pattern", help="comma-separated face sizes around a vertex")
    g.add_argument("--radius", type=int)
    g.add_argument("--palette", help="comma-separated face sizes for random growth")
    g.add_argument("--faces", type=int, default=30, help="target face count for random growth")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--out")
    g.set_defaults(func=cmd_generate)

    c = sub.add_parser("check", help="link condition and homology proxy")
    c.add_argument("file")
    c.add_argument("--scheme", choices=[s.value for s in WeightScheme], default="original")
    c.add_argument("--json", action="store_true")
    c.add_argument("--report")
    c.set_defaults(func=cmd_check)

    w = sub.add_parser("walls", help="list walls")
    w.add_argument("file")
    w.add_argument("--json", action="store_true")
    w.add_argument("--report")
    w.set_defaults(func=cmd_walls)

    d = sub.add_parser("distance", help="vertex-vertex or vertex-wall distance")
    d.add_argument("file")
    d.add_argument("v", type=int)
    d.add_argument("w", type=int, nargs="?")
    d.add_argument("--wall", type=int)
    d.add_argument("--json", action="store_true")
    d.add_argument("--report")
    d.set_defaults(func=cmd_distance)

    v = sub.add_parser("pwt", help="verify the parallel wall bound")
    v.add_argument("file")
    v.add_argument("--json", action="store_true")
    v.add_argument("--report", help="write the JSON report here instead of stdout")
    v.add_argument("--parallel", type=int, default=1, metavar="N")
    v.add_argument("--large-type", action="store_true", help="use the squareless bound N/2 + 1/2")
    v.set_defaults(func=cmd_pwt)

    r = sub.add_parser("render", help="draw a complex as SVG")
    r.add_argument("file")
    r.add_argument("--wall", type=int)
    r.add_argument("--out")
    r.set_defaults(func=cmd_render)
    return p


def main(argv: list[str] | None = None) -> int:
    level = os.environ.get("E2W_LOG", "WARNING").upper()
    logging.basicConfig(level=getattr(logging, level, logging.WARNING), format="%(levelname)s %(name)s: %(message)s")
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

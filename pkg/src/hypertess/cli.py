"""Command-line surface: numeration, neighbour queries, verification,
rendering and CA runs.

Exit codes: 0 success, 1 verification mismatch, 2 usage error.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import ca as ca_mod
from . import numeration as num
from .geometry import adjacency_report
from .svg import RenderOptions, Scene, region_scene, render_svg, tiling_scene, trigrid_scene
from .tiling import Tiling
from .trigrid import Trigrid


def format_digits(digits: list[int]) -> str:
    if all(d <= 9 for d in digits):
        return "".join(str(d) for d in digits)
    return ",".join(str(d) for d in digits)


def parse_digits(text: str) -> list[int]:
    text = text.strip()
    if "," in text:
        return [int(w) for w in text.split(",")]
    return [int(ch) for ch in text]


def _add_pq(parser, p_default=7, q_default=3):
    parser.add_argument("--p", type=int, default=p_default, help="polygon sides")
    parser.add_argument("--q", type=int, default=q_default, help="polygons per vertex")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hypertess",
                                 description="navigate hyperbolic {p,q} tilings and their trigrids")
    sub = ap.add_subparsers(dest="command", required=True)

    p_num = sub.add_parser("num", help="greedy numeration")
    num_sub = p_num.add_subparsers(dest="action", required=True)
    for action in ("encode", "decode"):
        pa = num_sub.add_parser(action)
        _add_pq(pa, 5, 4)
        pa.add_argument("value", help="integer (encode) or digit string (decode)")

    p_tile = sub.add_parser("tile", help="tile-level queries")
    tile_sub = p_tile.add_subparsers(dest="action", required=True)
    pa = tile_sub.add_parser("neighbors")
    _add_pq(pa)
    pa.add_argument("--coord", required=True, help="tile coordinate, '0' or 'sector:nu'")

    p_tri = sub.add_parser("tri", help="triangle-level queries")
    tri_sub = p_tri.add_subparsers(dest="action", required=True)
    pa = tri_sub.add_parser("neighbors")
    _add_pq(pa)
    pa.add_argument("--coord", required=True, help="triangle coordinate 'tile/a1.a2...'")

    pa = sub.add_parser("verify", help="compare coordinates against the disc oracle")
    _add_pq(pa)
    pa.add_argument("--depth", type=int, required=True, help="reflection generations (ball of tree level depth-1)")
    pa.add_argument("--subdiv", type=int, default=0, help="triangle depth (0 = tiles)")

    pa = sub.add_parser("render", help="write an SVG picture")
    _add_pq(pa)
    pa.add_argument("--what", choices=("tiling", "trigrid"), default="tiling")
    pa.add_argument("--depth", type=int, default=2, help="reflection generations to draw")
    pa.add_argument("--subdiv", type=int, default=1, help="triangle depth for trigrid")
    pa.add_argument("--labels", action="store_true")
    pa.add_argument("--out", required=True, metavar="FILE.svg")

    p_ca = sub.add_parser("ca", help="cellular automaton runs")
    ca_sub = p_ca.add_subparsers(dest="action", required=True)
    pa = ca_sub.add_parser("run")
    _add_pq(pa)
    pa.add_argument("--rule", required=True, metavar="FILE")
    pa.add_argument("--level", type=int, required=True, help="tile rings (0 = central tile only)")
    pa.add_argument("--subdiv", type=int, required=True)
    pa.add_argument("--steps", type=int, required=True)
    pa.add_argument("--seed", default="", help="comma list coord=state")
    pa.add_argument("--frames", default=None, metavar="DIR", help="write one SVG per frame")
    return ap


def cmd_num(args) -> int:
    b = num.Basis(args.p, args.q)
    if args.action == "encode":
        n = int(args.value)
        print(format_digits(num.encode(n, b)))
    else:
        print(num.decode(parse_digits(args.value), b))
    return 0


def cmd_tile_neighbors(args) -> int:
    t = Tiling(args.p, args.q)
    c = t.parse_coord(args.coord)
    for tau in range(1, t.p + 1):
        n = t.neighbor(c, tau)
        side = t.side_in_neighbor(c, tau)
        print(f"{tau} -> {n} (side {side})")
    return 0


def cmd_tri_neighbors(args) -> int:
    tg = Trigrid(Tiling(args.p, args.q))
    t = tg.parse(args.coord)
    for i, n in enumerate(tg.tri_neighbors(t), 1):
        print(f"{i} -> {n}")
    return 0


def cmd_verify(args) -> int:
    from .geometry import coordinate_ball
    mismatches = adjacency_report(args.p, args.q, args.depth, args.subdiv)
    for m in mismatches:
        print(m)
    tiles = len(coordinate_ball(Tiling(args.p, args.q), args.depth - 1))
    if args.subdiv <= 0:
        print(f"tiles={tiles} mismatches={len(mismatches)}")
    else:
        tris = tiles * args.p * 4 ** (args.subdiv - 1)
        print(f"tiles={tiles} triangles={tris} mismatches={len(mismatches)}")
    return 1 if mismatches else 0


def cmd_render(args) -> int:
    tiling = Tiling(args.p, args.q)
    if args.what == "tiling":
        scene = tiling_scene(tiling, args.depth - 1)
    else:
        scene = trigrid_scene(tiling, args.depth - 1, args.subdiv)
    doc = render_svg(scene, RenderOptions(labels=args.labels))
    with open(args.out, "w") as fh:
        fh.write(doc)
    print(f"wrote {args.out} ({len(scene.cells)} cells)")
    return 0


def cmd_ca_run(args) -> int:
    with open(args.rule) as fh:
        rule = ca_mod.parse_rule(fh.read())
    region = ca_mod.build_region(args.p, args.q, args.level, args.subdiv)
    tg = Trigrid(Tiling(args.p, args.q))
    state = [0] * len(region.cells)
    if args.seed:
        for item in args.seed.split(","):
            coord_s, _, value_s = item.partition("=")
            coord = tg.parse(coord_s.strip())
            if coord not in region.index:
                raise ValueError(f"seed {coord} lies outside the region")
            state[region.index[coord]] = rule.check_state(int(value_s))
    traj, hashes = ca_mod.run(region, rule, state, args.steps)
    for k, h in enumerate(hashes):
        live = sum(1 for s in traj[k] if s != 0)
        print(f"step {k} hash {h} live {live}")
    if args.frames:
        os.makedirs(args.frames, exist_ok=True)
        tiling = Tiling(args.p, args.q)
        for k, frame in enumerate(traj):
            scene = region_scene(region, tiling, frame)
            path = os.path.join(args.frames, f"frame{k:04d}.svg")
            with open(path, "w") as fh:
                fh.write(render_svg(scene))
        print(f"wrote {len(traj)} frames to {args.frames}")
    return 0


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        if args.command == "num":
            return cmd_num(args)
        if args.command == "tile":
            return cmd_tile_neighbors(args)
        if args.command == "tri":
            return cmd_tri_neighbors(args)
        if args.command == "verify":
            return cmd_verify(args)
        if args.command == "render":
            return cmd_render(args)
        if args.command == "ca":
            return cmd_ca_run(args)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

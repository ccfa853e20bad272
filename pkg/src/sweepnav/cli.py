"""Command-line harness: run plans, batch benchmarks, generate maps, render.

Exit codes: 0 when a run reaches the goal (and for batch/generate/render
completion), 2 when the planner returns NoPathFound or Trapped, 1 for
usage, configuration, or I/O errors.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from typing import Optional

from .errors import GenerationExhaustedError, InvalidConfigError
from .grid import GridMap, Point, load_ascii_map, load_pgm_map, to_ascii
from .mapgen import generate_maps
from .metrics import RunMetrics, compute_metrics, format_csv
from .network import WeightVector
from .oracle import shortest_path
from .planner import OUTCOME_SUCCESS, PlannerConfig, plan
from .render import render_ppm
from .sensor import SweepConfig
from .traceio import check_map_matches, map_info, parse_trace, serialize_trace


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on usage errors, which collides with the
    # planner-failure exit code; route usage errors to status 1 instead.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _point_arg(text: str) -> Point:
    try:
        xs, ys = text.split(",")
        return Point(int(xs), int(ys))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected x,y integers, got {text!r}") from None


def _weights_arg(text: str) -> WeightVector:
    parts = text.split(",")
    if len(parts) != 4:
        raise argparse.ArgumentTypeError(f"expected 4 comma-separated reals, got {text!r}")
    try:
        return WeightVector(*(float(p) for p in parts))
    except ValueError:
        raise argparse.ArgumentTypeError(f"non-numeric weight in {text!r}") from None


def _sector_arg(text: str) -> tuple[float, float]:
    try:
        lo, hi = text.split(":")
        return float(lo), float(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected lo:hi degrees, got {text!r}") from None


def _add_planner_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--range", type=float, default=3.0, metavar="X", help="slide distance x in pixels (default 3)")
    p.add_argument("--delta-alpha", type=float, default=15.0, metavar="DEG", help="sweep angular step (default 15)")
    p.add_argument("--eta", type=float, default=0.2, help="learning rate in (0,1) (default 0.2)")
    p.add_argument("--w0", type=_weights_arg, default=WeightVector(1.0, 1.0, 0.25, 0.5), metavar="W1,W2,W3,W4", help="initial weights (default 1,1,0.25,0.5)")
    p.add_argument("--max-steps", type=int, default=None, metavar="N", help="move budget (default 10*(width+height))")
    p.add_argument("--no-backtrack", action="store_true", help="disable backtracking on dead ends")
    p.add_argument("--sector", type=_sector_arg, default=(0.0, 360.0), metavar="LO:HI", help="sweep sector in degrees (default 0:360)")


def _planner_config(args) -> PlannerConfig:
    lo, hi = args.sector
    return PlannerConfig(
        sweep=SweepConfig(delta_alpha=args.delta_alpha, range_x=args.range, sector_lo=lo, sector_hi=hi),
        eta=args.eta,
        initial_weights=args.w0,
        max_steps=args.max_steps,
        backtrack_enabled=not args.no_backtrack,
    )


def _load_map(path: str, threshold: int, start: Optional[Point], goal: Optional[Point]) -> GridMap:
    if path.lower().endswith(".pgm"):
        if start is None or goal is None:
            raise InvalidConfigError("PGM maps need --start and --goal")
        with open(path, "rb") as fh:
            return load_pgm_map(fh.read(), threshold, start, goal)
    if start is not None or goal is not None:
        raise InvalidConfigError("--start/--goal apply only to PGM maps; ASCII maps carry S and G")
    with open(path, "r", encoding="ascii") as fh:
        return load_ascii_map(fh.read())


def _fmt(value) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _print_metrics(outcome: str, m: RunMetrics) -> None:
    print(f"outcome {outcome}")
    for name in ("success", "steps", "sweeps", "path_length", "oracle_length", "suboptimality", "wall_time_ms"):
        print(f"{name} {_fmt(getattr(m, name))}")


def cmd_run(args) -> int:
    grid = _load_map(args.map, args.pgm_threshold, args.start, args.goal)
    cfg = _planner_config(args)
    t0 = time.perf_counter()
    trace = plan(grid, cfg)
    wall_ms = (time.perf_counter() - t0) * 1000.0
    oracle = shortest_path(grid)
    metrics = compute_metrics(trace, None if oracle is None else oracle.length, wall_ms)
    _print_metrics(trace.outcome, metrics)
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(serialize_trace(map_info(grid), cfg, trace, metrics))
    if args.render:
        with open(args.render, "wb") as fh:
            fh.write(render_ppm(grid, trace.positions, args.scale))
    return 0 if trace.outcome == OUTCOME_SUCCESS else 2


def cmd_batch(args) -> int:
    cfg = _planner_config(args)
    names = sorted(n for n in os.listdir(args.map_dir) if n.endswith(".txt"))
    rows: list[tuple[str, Optional[RunMetrics]]] = []
    for name in names:
        try:
            with open(os.path.join(args.map_dir, name), "r", encoding="ascii") as fh:
                grid = load_ascii_map(fh.read())
            t0 = time.perf_counter()
            trace = plan(grid, cfg)
            wall_ms = (time.perf_counter() - t0) * 1000.0
            oracle = shortest_path(grid)
            rows.append((name, compute_metrics(trace, None if oracle is None else oracle.length, wall_ms)))
        except (ValueError, OSError):
            # a malformed map gets a failure row; the batch carries on
            rows.append((name, None))
    text = format_csv(rows)
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_generate(args) -> int:
    maps = generate_maps(args.width, args.height, args.density, args.seed, args.count)
    os.makedirs(args.out_dir, exist_ok=True)
    for name, grid in maps:
        with open(os.path.join(args.out_dir, name), "w", encoding="ascii") as fh:
            fh.write(to_ascii(grid))
    print(f"wrote {len(maps)} maps to {args.out_dir}")
    return 0


def cmd_render(args) -> int:
    with open(args.trace, "r", encoding="ascii") as fh:
        doc = parse_trace(fh.read())
    grid = _load_map(args.map, args.pgm_threshold, args.start, args.goal)
    check_map_matches(doc.map, grid)
    with open(args.out, "wb") as fh:
        fh.write(render_ppm(grid, doc.trace.positions, args.scale))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="sweepnav", description="Sweep-and-select grid path planner")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p_run = sub.add_parser("run", help="plan one map and report metrics")
    p_run.add_argument("--map", required=True, help="map file (.txt ASCII or .pgm)")
    p_run.add_argument("--out", help="write the trace JSON here")
    p_run.add_argument("--render", metavar="PPM", help="write a PPM image of the run here")
    p_run.add_argument("--scale", type=int, default=8, help="render cell size in pixels (default 8)")
    p_run.add_argument("--pgm-threshold", type=int, default=128, metavar="T", help="PGM: values below T are obstacles (default 128)")
    p_run.add_argument("--start", type=_point_arg, metavar="X,Y", help="start cell (PGM maps only)")
    p_run.add_argument("--goal", type=_point_arg, metavar="X,Y", help="goal cell (PGM maps only)")
    _add_planner_flags(p_run)

    p_batch = sub.add_parser("batch", help="run every .txt map in a directory, emit CSV")
    p_batch.add_argument("map_dir", help="directory of ASCII maps")
    p_batch.add_argument("--out", help="write CSV here instead of stdout")
    _add_planner_flags(p_batch)

    p_gen = sub.add_parser("generate", help="write seeded random feasible maps")
    p_gen.add_argument("out_dir", help="directory to write gen_<seed>_<i>.txt files into")
    p_gen.add_argument("--width", type=int, default=32)
    p_gen.add_argument("--height", type=int, default=32)
    p_gen.add_argument("--density", type=float, default=0.2, help="interior obstacle probability (default 0.2)")
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--count", type=int, default=1)

    p_render = sub.add_parser("render", help="render a saved trace over its map")
    p_render.add_argument("trace", help="trace JSON file")
    p_render.add_argument("--map", required=True, help="the map the trace was produced on")
    p_render.add_argument("--out", required=True, help="output PPM path")
    p_render.add_argument("--scale", type=int, default=8)
    p_render.add_argument("--pgm-threshold", type=int, default=128, metavar="T")
    p_render.add_argument("--start", type=_point_arg, metavar="X,Y")
    p_render.add_argument("--goal", type=_point_arg, metavar="X,Y")

    return parser


_COMMANDS = {
    "run": cmd_run,
    "batch": cmd_batch,
    "generate": cmd_generate,
    "render": cmd_render,
}


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except GenerationExhaustedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        # covers map formats, config validation, trace mismatches, file I/O
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

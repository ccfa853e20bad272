"""Plan a single shipped map end to end and keep the artifacts.

Loads one fixture, runs the planner with stock settings, compares the
walked path against the exact shortest-path oracle, and writes the trace
JSON plus a PPM image of the run into demo_out/. Pass a different fixture
name to watch another map.
"""

import os
import sys

from sweepnav import (
    PlannerConfig,
    compute_metrics,
    load_ascii_map,
    map_info,
    plan,
    render_ppm,
    serialize_trace,
    shortest_path,
)

FIXTURES = os.path.join(os.path.dirname(__file__), os.pardir, "fixtures")
OUT = os.path.join(os.path.dirname(__file__), "demo_out")


def main() -> None:
    name = sys.argv[1] if len(sys.argv) > 1 else "u_trap_east.txt"
    with open(os.path.join(FIXTURES, name), "r", encoding="ascii") as fh:
        grid = load_ascii_map(fh.read())
    print(f"{name}: {grid.width}x{grid.height}, start {tuple(grid.start)}, goal {tuple(grid.goal)}")

    cfg = PlannerConfig()
    trace = plan(grid, cfg)
    oracle = shortest_path(grid)
    metrics = compute_metrics(trace, None if oracle is None else oracle.length)

    print(f"outcome: {trace.outcome}")
    print(f"position changes: {metrics.steps}, sweeps: {metrics.sweeps}")
    print(f"walked length: {trace.path_length:.3f}")
    if oracle is not None:
        print(f"oracle length: {oracle.length:.3f}")
    if metrics.suboptimality is not None:
        print(f"suboptimality: {metrics.suboptimality:.3f}")

    os.makedirs(OUT, exist_ok=True)
    base = name.rsplit(".", 1)[0]
    trace_path = os.path.join(OUT, f"{base}.json")
    ppm_path = os.path.join(OUT, f"{base}.ppm")
    with open(trace_path, "w", encoding="ascii") as fh:
        fh.write(serialize_trace(map_info(grid), cfg, trace, metrics))
    with open(ppm_path, "wb") as fh:
        fh.write(render_ppm(grid, trace.positions, scale=12))
    print(f"wrote {trace_path} and {ppm_path}")


if __name__ == "__main__":
    main()

"""Benchmark the planner on a seeded random corpus.

Generates oracle-feasible random maps, plans each with stock settings,
and prints per-map results plus the aggregate picture: success rate,
suboptimality quartiles, and total wall time. Change SEED or COUNT and
rerun; identical inputs reproduce identical numbers apart from timing.
"""

import statistics
import time

from sweepnav import compute_metrics, generate_maps, plan, shortest_path

SEED = 42
COUNT = 50
SIZE = 32
DENSITY = 0.2


def main() -> None:
    t0 = time.perf_counter()
    maps = generate_maps(SIZE, SIZE, DENSITY, seed=SEED, count=COUNT)
    gen_s = time.perf_counter() - t0

    print(f"{COUNT} maps, {SIZE}x{SIZE}, density {DENSITY}, seed {SEED} ({gen_s:.2f}s to generate)")
    print(f"{'map':>14}  {'outcome':>12}  {'steps':>5}  {'subopt':>7}")
    t0 = time.perf_counter()
    subopts = []
    wins = 0
    for name, grid in maps:
        trace = plan(grid)
        oracle = shortest_path(grid)
        m = compute_metrics(trace, None if oracle is None else oracle.length)
        sub = f"{m.suboptimality:7.3f}" if m.suboptimality is not None else "      -"
        print(f"{name:>14}  {trace.outcome:>12}  {m.steps:5d}  {sub}")
        if m.success:
            wins += 1
        if m.suboptimality is not None:
            subopts.append(m.suboptimality)
    plan_s = time.perf_counter() - t0

    print()
    print(f"success: {wins}/{COUNT} ({100.0 * wins / COUNT:.1f}%)")
    qs = statistics.quantiles(subopts, n=4)
    print(f"suboptimality quartiles: {qs[0]:.3f} / {qs[1]:.3f} / {qs[2]:.3f}")
    print(f"planning + oracle time: {plan_s:.2f}s")


if __name__ == "__main__":
    main()

"""Watch the scoring weights drift over one run.

The winner-take-all step trains the weight vector toward the features of
each winning move, so weights tell a story: on open ground the novelty
and clearance weights climb toward their feature values, and inside a
concave pocket the goal-progress weight sags as the network keeps
rewarding sideways escapes. This prints the trajectory for one of the
pocket fixtures.
"""

import os

from sweepnav import ACTION_MOVE, PlannerConfig, load_ascii_map, plan

FIXTURES = os.path.join(os.path.dirname(__file__), os.pardir, "fixtures")


def main() -> None:
    with open(os.path.join(FIXTURES, "u_trap_shallow.txt"), "r", encoding="ascii") as fh:
        grid = load_ascii_map(fh.read())

    cfg = PlannerConfig()
    trace = plan(grid, cfg)
    print(f"outcome: {trace.outcome} in {len(trace.positions) - 1} position changes")
    print()
    w = cfg.initial_weights
    print(f"{'move':>4}  {'to':>9}  {'w1':>7} {'w2':>7} {'w3':>7} {'w4':>7}")
    print(f"{'':>4}  {'(start)':>9}  {w.w1:7.3f} {w.w2:7.3f} {w.w3:7.3f} {w.w4:7.3f}")
    k = 0
    for s in trace.steps:
        if s.action != ACTION_MOVE:
            continue
        k += 1
        w = s.weights_after
        print(f"{k:>4}  {str(tuple(s.chosen_point)):>9}  {w.w1:7.3f} {w.w2:7.3f} {w.w3:7.3f} {w.w4:7.3f}")
    print()
    print("w1 weighs goal progress, w2 heading alignment, w3 clearance, w4 novelty")


if __name__ == "__main__":
    main()

"""Dissect one sensor sweep, ray by ray.

Drops a pose near an obstacle cluster and prints what every ray of the
rotating bar reports: the angle, where the ray's endpoint rounds to, the
measured clearance, and whether something blocked it. Then shows how the
raw rays collapse into movement candidates: blocked rays drop out, and
rays that round to an endpoint already claimed by a smaller angle are
deduplicated away.
"""

from sweepnav import Point, SweepConfig, candidates, load_ascii_map, sweep

MAP = """\
..........
....##....
....##....
.S........
........G.
..........
"""


def main() -> None:
    grid = load_ascii_map(MAP)
    pose = Point(3, 3)
    cfg = SweepConfig(delta_alpha=30.0, range_x=3.0)

    print(f"sweeping from {tuple(pose)}, range {cfg.range_x}, step {cfg.delta_alpha} deg")
    print(f"{'angle':>6}  {'endpoint':>10}  {'clearance':>9}  blocked")
    rays = sweep(grid, pose, cfg)
    for r in rays:
        print(f"{r.angle_deg:6.1f}  {str(tuple(r.endpoint)):>10}  {r.clearance:9.3f}  {r.blocked}")

    cands = candidates(rays, pose)
    print()
    print(f"{len(rays)} rays -> {len(cands)} movement candidates:")
    for c in cands:
        print(f"  angle {c.angle_deg:6.1f} -> {tuple(c.endpoint)}")
    dropped = len([r for r in rays if not r.blocked]) - len(cands)
    print(f"({sum(r.blocked for r in rays)} blocked, {dropped} deduplicated)")

    # at unit range the 12 orientations can only round to the 8 neighbor
    # cells, so deduplication becomes visible: first angle claims the cell
    short = SweepConfig(delta_alpha=30.0, range_x=1.0)
    rays1 = sweep(grid, pose, short)
    cands1 = candidates(rays1, pose)
    print()
    print(f"same sweep at range 1: {len(rays1)} rays -> {len(cands1)} candidates")
    for c in cands1:
        others = [r.angle_deg for r in rays1 if r.endpoint == c.endpoint and not r.blocked]
        tail = f" (also rounded to by {others[1:]})" if len(others) > 1 else ""
        print(f"  angle {c.angle_deg:6.1f} -> {tuple(c.endpoint)}{tail}")


if __name__ == "__main__":
    main()

"""Sweep-and-select plan loop.

Each iteration: snap to the goal if it is within one slide and the segment
is clear; otherwise sweep the sector, encode the unblocked candidates,
pick the winner by weighted score, train the weights toward it, and move.
A pose with no candidates first retries the sweep at halved ranges, then
backtracks, marking the abandoned cell as a virtual block so it is never
proposed again. Every action lands in the trace, which is sufficient to
replay and audit the run offline.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import NamedTuple, Optional

from .errors import InvalidConfigError
from .grid import GridMap, Point, euclid, line_cells, segment_clear
from .network import (
    DEFAULT_WEIGHTS,
    AdaptiveNetwork,
    WeightVector,
    extract_features,
    score,
    select_winner,
)
from .sensor import SensedPoint, SweepConfig, candidates, sweep

OUTCOME_SUCCESS = "Success"
OUTCOME_NO_PATH = "NoPathFound"
OUTCOME_TRAPPED = "Trapped"

ACTION_MOVE = "move"
ACTION_BACKTRACK = "backtrack"
ACTION_SNAP = "snap_to_goal"
ACTION_SHRINK = "shrink_range"


@dataclass(frozen=True)
class PlannerConfig:
    """Everything a plan run depends on besides the map itself.

    max_steps = None resolves to 10 * (width + height) at plan time.
    """

    sweep: SweepConfig = SweepConfig()
    eta: float = 0.2
    initial_weights: WeightVector = DEFAULT_WEIGHTS
    max_steps: Optional[int] = None
    backtrack_enabled: bool = True

    def __post_init__(self) -> None:
        if not (0 < self.eta < 1):
            raise InvalidConfigError(f"eta {self.eta} must lie strictly inside (0, 1)")
        if self.max_steps is not None and self.max_steps < 1:
            raise InvalidConfigError(f"max_steps {self.max_steps} must be >= 1")
        w = self.initial_weights
        if len(w) != 4 or not all(math.isfinite(c) for c in w):
            raise InvalidConfigError(f"initial_weights {w} must be 4 finite reals")
        object.__setattr__(self, "initial_weights", WeightVector(*map(float, w)))

    def resolved_max_steps(self, grid: GridMap) -> int:
        if self.max_steps is not None:
            return self.max_steps
        return 10 * (grid.width + grid.height)


class StepRecord(NamedTuple):
    """One recorded planner action.

    Fields that do not apply to an action are None: a backtrack has no
    chosen_angle or scores, a snap has no sweep data. chosen_point is the
    cell the robot ends the action on (for shrink_range, None: the pose is
    unchanged and the new ray range is in sweep_range).
    """

    action: str
    chosen_angle: Optional[float]
    chosen_point: Optional[Point]
    candidate_count: Optional[int]
    scores: Optional[tuple[float, ...]]
    weights_after: WeightVector
    sweep_range: Optional[float]


@dataclass
class PlanTrace:
    positions: list[Point]
    steps: list[StepRecord]
    outcome: str
    sweep_count: int
    path_length: float


def shrink_schedule(range_x: float) -> list[float]:
    """Fallback ray ranges to try when a sweep yields no candidates.

    Halve while still above 1, then try exactly 1 so corridors one cell
    wide stay reachable whatever the nominal range is.
    """
    out = []
    r = range_x / 2
    while r > 1:
        out.append(r)
        r /= 2
    if range_x > 1:
        out.append(1.0)
    return out


def _blocked_by_memory(pose: Point, sp: SensedPoint, blocks: set[Point]) -> bool:
    # A candidate whose line of travel crosses a remembered dead end is
    # rejected outright; the sensed geometry itself is left untouched.
    if not blocks:
        return False
    return any(cell in blocks for cell in line_cells(pose, sp.endpoint)[1:])


def plan(grid: GridMap, cfg: PlannerConfig = PlannerConfig()) -> PlanTrace:
    """Run the planner on one map. Never raises for unreachable goals; the
    failure mode lands in the trace outcome instead.
    """
    net = AdaptiveNetwork(weights=cfg.initial_weights, eta=cfg.eta)
    max_steps = cfg.resolved_max_steps(grid)
    x = cfg.sweep.range_x

    current = grid.start
    positions = [current]
    steps: list[StepRecord] = []
    stack: list[Point] = []
    moves = 0
    sweep_count = 0
    outcome = OUTCOME_NO_PATH

    while True:
        if euclid(current, grid.goal) <= x and segment_clear(grid, current, grid.goal):
            steps.append(StepRecord(ACTION_SNAP, None, grid.goal, None, None, net.weights, None))
            positions.append(grid.goal)
            outcome = OUTCOME_SUCCESS
            break
        if moves >= max_steps:
            outcome = OUTCOME_NO_PATH
            break

        cands: list[SensedPoint] = []
        used_range = x
        ladder = [x] + shrink_schedule(x)
        for i, r in enumerate(ladder):
            sweep_cfg = replace(cfg.sweep, range_x=r) if r != x else cfg.sweep
            raw = sweep(grid, current, sweep_cfg)
            sweep_count += 1
            eligible = [sp for sp in raw if not sp.blocked and not _blocked_by_memory(current, sp, net.virtual_blocks)]
            cands = candidates(eligible, current)
            used_range = r
            if cands:
                break
            if i + 1 < len(ladder):
                steps.append(StepRecord(ACTION_SHRINK, None, None, 0, None, net.weights, ladder[i + 1]))

        if not cands:
            if cfg.backtrack_enabled and stack:
                if current != grid.start and current != grid.goal:
                    net.virtual_blocks.add(current)
                prev = stack.pop()
                steps.append(StepRecord(ACTION_BACKTRACK, None, prev, 0, None, net.weights, None))
                positions.append(prev)
                current = prev
                continue
            outcome = OUTCOME_TRAPPED
            break

        feats = [
            (sp, extract_features(grid, current, sp, grid.goal, used_range, net.visit_counts))
            for sp in cands
        ]
        scores = tuple(score(net.weights, f) for _, f in feats)
        win = select_winner(net.weights, feats)
        winner_sp, winner_f = feats[win]
        net.train_on(winner_f)
        net.record_visit(winner_sp.endpoint)
        stack.append(current)
        steps.append(
            StepRecord(
                ACTION_MOVE,
                winner_sp.angle_deg,
                winner_sp.endpoint,
                len(cands),
                scores,
                net.weights,
                used_range,
            )
        )
        positions.append(winner_sp.endpoint)
        current = winner_sp.endpoint
        moves += 1

    path_length = sum(euclid(a, b) for a, b in zip(positions, positions[1:]))
    return PlanTrace(positions, steps, outcome, sweep_count, path_length)

"""Rotating-bar range sensor: sweep a sector in fixed angular increments.

One sweep rotates the bar through ``[sector_lo, sector_hi)`` in steps of
``delta_alpha`` degrees and reports one :class:`SensedPoint` per orientation.
Only rays that reach their full extent unblocked yield movement candidates;
a partially clear ray still reports its clearance but proposes nothing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .errors import InvalidConfigError, PoseInvalidError
from .grid import GridMap, Point, ray_cast


class SensedPoint(NamedTuple):
    angle_deg: float
    endpoint: Point
    clearance: float
    blocked: bool


@dataclass(frozen=True)
class SweepConfig:
    """Sector geometry of one sweep: angular step, ray length, sector bounds."""

    delta_alpha: float = 15.0
    range_x: float = 3.0
    sector_lo: float = 0.0
    sector_hi: float = 360.0

    def __post_init__(self) -> None:
        if not (math.isfinite(self.delta_alpha) and self.delta_alpha > 0):
            raise InvalidConfigError(f"delta_alpha {self.delta_alpha} must be > 0")
        if not (math.isfinite(self.range_x) and self.range_x >= 1):
            raise InvalidConfigError(f"range_x {self.range_x} must be >= 1")
        if not (self.sector_lo < self.sector_hi <= self.sector_lo + 360):
            raise InvalidConfigError(
                f"sector [{self.sector_lo}, {self.sector_hi}) must satisfy lo < hi <= lo + 360"
            )
        if self.angle_count() < 1:
            raise InvalidConfigError("sector narrower than delta_alpha")

    def angle_count(self) -> int:
        # ceil((hi - lo) / delta) in exact rational arithmetic. Float division
        # here can land on either side of an integer (360/7.2 for instance)
        # and would make the sweep miscount by one ray.
        span = Fraction(self.sector_hi) - Fraction(self.sector_lo)
        return math.ceil(span / Fraction(self.delta_alpha))

    def angles(self) -> list[float]:
        return [self.sector_lo + k * self.delta_alpha for k in range(self.angle_count())]


def sweep(grid: GridMap, pose: Point, cfg: SweepConfig) -> list[SensedPoint]:
    """Sense the whole sector from pose: one ray per angle, increasing order.

    Result length is exactly ceil((sector_hi - sector_lo) / delta_alpha).
    """
    pose = Point(*pose)
    if not grid.is_free(pose):
        raise PoseInvalidError(f"pose {pose} out of bounds or on an obstacle")
    points = []
    for angle in cfg.angles():
        hit = ray_cast(grid, pose, angle, cfg.range_x)
        points.append(SensedPoint(angle, hit.endpoint, hit.clearance, hit.blocked))
    return points


def candidates(sweep_result: list[SensedPoint], pose: Point | None = None) -> list[SensedPoint]:
    """Movement candidates of a sweep: unblocked rays only, in sweep order.

    Rays that round to an already-seen endpoint are dropped (the smallest
    angle wins), as are endpoints equal to ``pose`` when a pose is given.
    An empty result is legal and signals a trapped pose to the caller.
    """
    seen: set[Point] = set()
    out = []
    for sp in sweep_result:
        if sp.blocked or sp.endpoint in seen:
            continue
        if pose is not None and sp.endpoint == Point(*pose):
            continue
        seen.add(sp.endpoint)
        out.append(sp)
    return out

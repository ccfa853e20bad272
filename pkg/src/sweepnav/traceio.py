"""Trace (de)serialization.

A trace file is self-contained: map identity, full planner configuration,
every position and action, outcome, and summary metrics. Serialization is
byte-deterministic for a given document (fixed key order, indent, and
float repr), so identical runs produce identical files and renders or
regression diffs never require re-running the planner.

wall_time_ms is deliberately not written: it varies run to run and would
break file-level determinism. Parsed documents carry it as None.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, NamedTuple, Optional

from .errors import TraceMapMismatchError
from .grid import GridMap, Point
from .metrics import RunMetrics
from .network import WeightVector
from .planner import PlannerConfig, PlanTrace, StepRecord
from .sensor import SweepConfig

TRACE_VERSION = 1


class MapInfo(NamedTuple):
    """Map identity stored in a trace; enough to validate a later render."""

    width: int
    height: int
    start: Point
    goal: Point


@dataclass
class TraceDoc:
    map: MapInfo
    config: PlannerConfig
    trace: PlanTrace
    metrics: RunMetrics


def map_info(grid: GridMap) -> MapInfo:
    return MapInfo(grid.width, grid.height, grid.start, grid.goal)


def check_map_matches(info: MapInfo, grid: GridMap) -> None:
    """Raise unless the trace was produced on a map with this identity."""
    if map_info(grid) != MapInfo(info.width, info.height, Point(*info.start), Point(*info.goal)):
        raise TraceMapMismatchError(
            f"trace map {info} does not match grid "
            f"{grid.width}x{grid.height} start={grid.start} goal={grid.goal}"
        )


def _point(p: Point) -> list[int]:
    return [int(p[0]), int(p[1])]


def _opt_point(p: Optional[Point]) -> Optional[list[int]]:
    return None if p is None else _point(p)


def serialize_trace(info: MapInfo, cfg: PlannerConfig, trace: PlanTrace, metrics: RunMetrics) -> str:
    """Render a run to its canonical JSON text (trailing newline included)."""
    doc: dict[str, Any] = {
        "version": TRACE_VERSION,
        "map": {
            "width": info.width,
            "height": info.height,
            "start": _point(info.start),
            "goal": _point(info.goal),
        },
        "config": {
            "range_x": cfg.sweep.range_x,
            "delta_alpha": cfg.sweep.delta_alpha,
            "sector_lo": cfg.sweep.sector_lo,
            "sector_hi": cfg.sweep.sector_hi,
            "eta": cfg.eta,
            "initial_weights": list(cfg.initial_weights),
            "max_steps": cfg.max_steps,
            "backtrack_enabled": cfg.backtrack_enabled,
        },
        "positions": [_point(p) for p in trace.positions],
        "steps": [
            {
                "action": s.action,
                "chosen_angle": s.chosen_angle,
                "chosen_point": _opt_point(s.chosen_point),
                "candidate_count": s.candidate_count,
                "scores": None if s.scores is None else list(s.scores),
                "weights_after": list(s.weights_after),
                "sweep_range": s.sweep_range,
            }
            for s in trace.steps
        ],
        "outcome": trace.outcome,
        "metrics": {
            "success": metrics.success,
            "steps": metrics.steps,
            "sweeps": metrics.sweeps,
            "path_length": metrics.path_length,
            "oracle_length": metrics.oracle_length,
            "suboptimality": metrics.suboptimality,
        },
    }
    return json.dumps(doc, indent=2, sort_keys=False) + "\n"


def parse_trace(text: str) -> TraceDoc:
    """Inverse of serialize_trace: rebuild the full typed document."""
    doc = json.loads(text)
    if doc.get("version") != TRACE_VERSION:
        raise TraceMapMismatchError(f"unsupported trace version {doc.get('version')!r}")
    m = doc["map"]
    info = MapInfo(int(m["width"]), int(m["height"]), Point(*m["start"]), Point(*m["goal"]))
    c = doc["config"]
    cfg = PlannerConfig(
        sweep=SweepConfig(
            delta_alpha=c["delta_alpha"],
            range_x=c["range_x"],
            sector_lo=c["sector_lo"],
            sector_hi=c["sector_hi"],
        ),
        eta=c["eta"],
        initial_weights=WeightVector(*c["initial_weights"]),
        max_steps=c["max_steps"],
        backtrack_enabled=c["backtrack_enabled"],
    )
    steps = [
        StepRecord(
            action=s["action"],
            chosen_angle=s["chosen_angle"],
            chosen_point=None if s["chosen_point"] is None else Point(*s["chosen_point"]),
            candidate_count=s["candidate_count"],
            scores=None if s["scores"] is None else tuple(s["scores"]),
            weights_after=WeightVector(*s["weights_after"]),
            sweep_range=s["sweep_range"],
        )
        for s in doc["steps"]
    ]
    mt = doc["metrics"]
    metrics = RunMetrics(
        success=mt["success"],
        steps=mt["steps"],
        sweeps=mt["sweeps"],
        path_length=mt["path_length"],
        oracle_length=mt["oracle_length"],
        suboptimality=mt["suboptimality"],
        wall_time_ms=None,
    )
    trace = PlanTrace(
        positions=[Point(*p) for p in doc["positions"]],
        steps=steps,
        outcome=doc["outcome"],
        sweep_count=mt["sweeps"],
        path_length=mt["path_length"],
    )
    return TraceDoc(info, cfg, trace, metrics)

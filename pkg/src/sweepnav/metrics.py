"""Run summary metrics and the batch CSV format.

The CSV header and column order are frozen; downstream tooling diffs these
files, so any change here is a format break. Booleans are written as
true/false, absent values as empty fields, floats with repr precision.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import Optional, Sequence

from .planner import OUTCOME_SUCCESS, PlanTrace

CSV_HEADER = [
    "map",
    "success",
    "steps",
    "sweeps",
    "path_length",
    "oracle_length",
    "suboptimality",
    "wall_time_ms",
]


@dataclass(frozen=True)
class RunMetrics:
    """Summary of one planner run.

    steps counts position changes (moves, backtracks, and the goal snap),
    i.e. len(positions) - 1. sweeps counts every sweep performed, range
    retries included. suboptimality = path_length / oracle_length, present
    only for successful runs on maps the oracle solved. wall_time_ms is
    None for metrics parsed back from a trace file.
    """

    success: bool
    steps: int
    sweeps: int
    path_length: float
    oracle_length: Optional[float]
    suboptimality: Optional[float]
    wall_time_ms: Optional[float]


def compute_metrics(
    trace: PlanTrace,
    oracle_length: Optional[float],
    wall_time_ms: Optional[float] = None,
) -> RunMetrics:
    success = trace.outcome == OUTCOME_SUCCESS
    subopt = None
    if success and oracle_length is not None:
        subopt = trace.path_length / oracle_length
    return RunMetrics(
        success=success,
        steps=len(trace.positions) - 1,
        sweeps=trace.sweep_count,
        path_length=trace.path_length,
        oracle_length=oracle_length,
        suboptimality=subopt,
        wall_time_ms=wall_time_ms,
    )


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def format_csv(rows: Sequence[tuple[str, Optional[RunMetrics]]]) -> str:
    """Assemble the batch CSV: one row per map, in the order given.

    A None metrics entry marks a map that could not be run at all (load
    failure); it still gets a row with success=false so a batch never
    silently drops a map.
    """
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for name, m in rows:
        if m is None:
            writer.writerow([name, "false", "", "", "", "", "", ""])
            continue
        writer.writerow(
            [
                name,
                _cell(m.success),
                _cell(m.steps),
                _cell(m.sweeps),
                _cell(m.path_length),
                _cell(m.oracle_length),
                _cell(m.suboptimality),
                _cell(m.wall_time_ms),
            ]
        )
    return buf.getvalue()

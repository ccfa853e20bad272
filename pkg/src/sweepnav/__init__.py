"""sweepnav: sweep-and-select path planning on 2D occupancy grids.

A point robot senses its surroundings by sweeping rays in fixed angular
increments, scores the unblocked ray endpoints with an adaptive
winner-take-all network, and slides to the winner until the goal is in
reach. An exact octile shortest-path oracle certifies feasibility and
measures how far each walked path is from optimal.
"""

from .errors import (
    BadCharError,
    DegenerateCandidateError,
    GenerationExhaustedError,
    InvalidConfigError,
    MalformedHeaderError,
    MapError,
    MissingOrDuplicateGoalError,
    MissingOrDuplicateStartError,
    NoCandidatesError,
    OriginInvalidError,
    OutOfBoundsError,
    PoseInvalidError,
    RaggedRowsError,
    StartOrGoalOnObstacleError,
    TraceMapMismatchError,
    TruncatedDataError,
)
from .grid import (
    GridMap,
    Point,
    RayHit,
    euclid,
    line_cells,
    load_ascii_map,
    load_pgm_map,
    ray_cast,
    round_half_up,
    segment_clear,
    to_ascii,
)
from .mapgen import generate_map, generate_maps
from .metrics import CSV_HEADER, RunMetrics, compute_metrics, format_csv
from .network import (
    DEFAULT_WEIGHTS,
    AdaptiveNetwork,
    FeatureVector,
    WeightVector,
    extract_features,
    score,
    select_winner,
    train,
)
from .oracle import OraclePath, feasible, path_cost, shortest_path
from .planner import (
    ACTION_BACKTRACK,
    ACTION_MOVE,
    ACTION_SHRINK,
    ACTION_SNAP,
    OUTCOME_NO_PATH,
    OUTCOME_SUCCESS,
    OUTCOME_TRAPPED,
    PlannerConfig,
    PlanTrace,
    StepRecord,
    plan,
    shrink_schedule,
)
from .render import render_ppm
from .sensor import SensedPoint, SweepConfig, candidates, sweep
from .traceio import (
    MapInfo,
    TraceDoc,
    check_map_matches,
    map_info,
    parse_trace,
    serialize_trace,
)

__version__ = "0.1.0"

__all__ = [
    "GridMap",
    "Point",
    "RayHit",
    "SensedPoint",
    "SweepConfig",
    "FeatureVector",
    "WeightVector",
    "AdaptiveNetwork",
    "PlannerConfig",
    "PlanTrace",
    "StepRecord",
    "OraclePath",
    "RunMetrics",
    "MapInfo",
    "TraceDoc",
    "plan",
    "sweep",
    "candidates",
    "ray_cast",
    "segment_clear",
    "line_cells",
    "euclid",
    "round_half_up",
    "load_ascii_map",
    "load_pgm_map",
    "to_ascii",
    "extract_features",
    "score",
    "select_winner",
    "train",
    "shortest_path",
    "feasible",
    "path_cost",
    "compute_metrics",
    "format_csv",
    "render_ppm",
    "generate_map",
    "generate_maps",
    "serialize_trace",
    "parse_trace",
    "map_info",
    "check_map_matches",
    "shrink_schedule",
    "DEFAULT_WEIGHTS",
    "CSV_HEADER",
    "OUTCOME_SUCCESS",
    "OUTCOME_NO_PATH",
    "OUTCOME_TRAPPED",
    "ACTION_MOVE",
    "ACTION_BACKTRACK",
    "ACTION_SNAP",
    "ACTION_SHRINK",
    "MapError",
    "RaggedRowsError",
    "BadCharError",
    "MissingOrDuplicateStartError",
    "MissingOrDuplicateGoalError",
    "StartOrGoalOnObstacleError",
    "OutOfBoundsError",
    "MalformedHeaderError",
    "TruncatedDataError",
    "OriginInvalidError",
    "PoseInvalidError",
    "DegenerateCandidateError",
    "NoCandidatesError",
    "InvalidConfigError",
    "TraceMapMismatchError",
    "GenerationExhaustedError",
]

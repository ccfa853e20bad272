import json

import pytest

from sweepnav.errors import TraceMapMismatchError
from sweepnav.grid import Point, load_ascii_map
from sweepnav.metrics import compute_metrics
from sweepnav.network import WeightVector
from sweepnav.oracle import shortest_path
from sweepnav.planner import PlannerConfig, plan
from sweepnav.sensor import SweepConfig
from sweepnav.traceio import (
    TRACE_VERSION,
    MapInfo,
    check_map_matches,
    map_info,
    parse_trace,
    serialize_trace,
)

MAP_TEXT = "S....\n.##..\n...#.\n....G\n"


def make_doc(cfg=None):
    g = load_ascii_map(MAP_TEXT)
    cfg = cfg or PlannerConfig()
    trace = plan(g, cfg)
    oracle = shortest_path(g)
    metrics = compute_metrics(trace, None if oracle is None else oracle.length, 3.5)
    return g, cfg, trace, metrics


def test_serialize_shape():
    g, cfg, trace, metrics = make_doc()
    text = serialize_trace(map_info(g), cfg, trace, metrics)
    assert text.endswith("\n")
    doc = json.loads(text)
    assert doc["version"] == TRACE_VERSION
    assert list(doc) == ["version", "map", "config", "positions", "steps", "outcome", "metrics"]
    assert doc["map"] == {"width": 5, "height": 4, "start": [0, 0], "goal": [4, 3]}
    assert doc["config"]["range_x"] == 3.0
    assert doc["config"]["initial_weights"] == [1.0, 1.0, 0.25, 0.5]
    assert doc["positions"][0] == [0, 0]
    assert len(doc["positions"]) == len(trace.positions)
    assert doc["outcome"] == trace.outcome
    # wall time never lands in the file: it would break byte determinism
    assert "wall_time_ms" not in doc["metrics"]
    assert "wall_time_ms" not in text


def test_round_trip_preserves_typed_document():
    g, cfg, trace, metrics = make_doc(
        PlannerConfig(
            sweep=SweepConfig(delta_alpha=30.0, range_x=2.0, sector_lo=-90.0, sector_hi=90.0),
            eta=0.35,
            initial_weights=WeightVector(0.5, 1.5, 0.0, 0.25),
            max_steps=44,
            backtrack_enabled=False,
        )
    )
    text = serialize_trace(map_info(g), cfg, trace, metrics)
    doc = parse_trace(text)
    assert doc.map == map_info(g)
    assert doc.config == cfg
    assert doc.trace.positions == trace.positions
    assert doc.trace.steps == trace.steps
    assert doc.trace.outcome == trace.outcome
    assert doc.trace.sweep_count == trace.sweep_count
    assert doc.trace.path_length == trace.path_length
    assert doc.metrics.wall_time_ms is None
    assert doc.metrics.path_length == metrics.path_length
    assert doc.metrics.suboptimality == metrics.suboptimality


def test_serialize_parse_serialize_is_identity():
    g, cfg, trace, metrics = make_doc()
    text = serialize_trace(map_info(g), cfg, trace, metrics)
    doc = parse_trace(text)
    again = serialize_trace(doc.map, doc.config, doc.trace, doc.metrics)
    assert again == text


def test_serialization_is_deterministic():
    g, cfg, trace, metrics = make_doc()
    a = serialize_trace(map_info(g), cfg, trace, metrics)
    b = serialize_trace(map_info(g), cfg, trace, metrics)
    assert a == b


def test_unknown_version_rejected():
    g, cfg, trace, metrics = make_doc()
    text = serialize_trace(map_info(g), cfg, trace, metrics)
    doc = json.loads(text)
    doc["version"] = 99
    with pytest.raises(TraceMapMismatchError):
        parse_trace(json.dumps(doc))


def test_check_map_matches():
    g = load_ascii_map(MAP_TEXT)
    check_map_matches(map_info(g), g)
    other = load_ascii_map("S....\n....G\n")
    with pytest.raises(TraceMapMismatchError):
        check_map_matches(map_info(other), g)
    shifted = MapInfo(g.width, g.height, Point(0, 0), Point(3, 3))
    with pytest.raises(TraceMapMismatchError):
        check_map_matches(shifted, g)

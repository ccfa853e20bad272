"""Shared fixtures and the acceptance-criteria result banner."""

import os
import time
from contextlib import contextmanager

import pytest

from sweepnav.grid import load_ascii_map
from sweepnav.mapgen import generate_maps
from sweepnav.oracle import shortest_path
from sweepnav.planner import plan

FIXTURES_DIR = os.path.join(os.path.dirname(__file__), os.pardir, "fixtures")

RESULTS = []


@contextmanager
def criterion(num, name):
    """Record a pass/fail line for the end-of-run acceptance banner."""
    try:
        yield
    except BaseException:
        RESULTS.append((num, name, False))
        raise
    RESULTS.append((num, name, True))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num, name, ok in sorted(RESULTS):
        terminalreporter.write_line(f"criterion {num} ({name}): {'PASS' if ok else 'FAIL'}")


def fixture_names():
    return sorted(n for n in os.listdir(FIXTURES_DIR) if n.endswith(".txt"))


def load_fixture(name):
    with open(os.path.join(FIXTURES_DIR, name), "r", encoding="ascii") as fh:
        return load_ascii_map(fh.read())


class CorpusRun:
    def __init__(self, name, grid, trace, oracle_length):
        self.name = name
        self.grid = grid
        self.trace = trace
        self.oracle_length = oracle_length


@pytest.fixture(scope="session")
def corpus_runs():
    """Default-config planner runs over the benchmark corpus.

    The corpus is the 20 shipped fixture maps plus 50 seeded random maps
    (32x32, interior density 0.2, seed 42). Each map is planned once and
    oracle-solved once; several acceptance criteria share these runs. The
    elapsed wall time for the whole block rides along for the runtime
    budget check.
    """
    t0 = time.perf_counter()
    entries = [(name, load_fixture(name)) for name in fixture_names()]
    entries += generate_maps(32, 32, 0.2, seed=42, count=50)
    runs = []
    for name, grid in entries:
        trace = plan(grid)
        oracle = shortest_path(grid)
        runs.append(CorpusRun(name, grid, trace, None if oracle is None else oracle.length))
    elapsed = time.perf_counter() - t0
    return runs, elapsed

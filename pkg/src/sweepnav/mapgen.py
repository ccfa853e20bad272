"""Seeded random map generation for benchmarks and stress tests.

Generator procedure (frozen so a seed reproduces files byte-for-byte):
one random.Random(seed) stream drives everything. Per attempt, interior
cells (the border ring is always free) are visited row-major, top to
bottom, left to right, each becoming an obstacle when rng.random() <
density. The start is drawn uniformly from the free cells in row-major
order, the goal uniformly from the remaining free cells. Attempts that
the shortest-path oracle cannot solve are discarded and redrawn; the
stream is shared across attempts and maps, so every accepted map depends
on the seed alone. Determinism is promised within this implementation
only, not across reimplementations.
"""

from __future__ import annotations

import random

import numpy as np

from .errors import GenerationExhaustedError, InvalidConfigError
from .grid import GridMap, Point
from .oracle import feasible

MAX_ATTEMPTS = 1000


def generate_map(width: int, height: int, density: float, rng: random.Random) -> GridMap:
    """One oracle-feasible random map; raises after MAX_ATTEMPTS rejections."""
    if width < 4 or height < 4:
        raise InvalidConfigError(f"maps must be at least 4x4, got {width}x{height}")
    if not 0 <= density < 1:
        raise InvalidConfigError(f"density {density} must lie in [0, 1)")
    for _ in range(MAX_ATTEMPTS):
        cells = np.zeros((height, width), dtype=bool)
        for y in range(1, height - 1):
            for x in range(1, width - 1):
                if rng.random() < density:
                    cells[y, x] = True
        free = [Point(x, y) for y in range(height) for x in range(width) if not cells[y, x]]
        if len(free) < 2:
            continue
        start = free[rng.randrange(len(free))]
        free.remove(start)
        goal = free[rng.randrange(len(free))]
        grid = GridMap(width, height, cells, start, goal)
        if feasible(grid):
            return grid
    raise GenerationExhaustedError(
        f"no feasible {width}x{height} map at density {density} after {MAX_ATTEMPTS} attempts"
    )


def generate_maps(
    width: int, height: int, density: float, seed: int, count: int
) -> list[tuple[str, GridMap]]:
    """Batch of feasible maps with their canonical file names gen_<seed>_<i>.txt."""
    if count < 1:
        raise InvalidConfigError(f"count {count} must be >= 1")
    rng = random.Random(seed)
    out = []
    for i in range(count):
        out.append((f"gen_{seed}_{i}.txt", generate_map(width, height, density, rng)))
    return out

"""Exact shortest-path oracle over the 8-connected grid.

Uniform-cost search with octile costs: 1 per cardinal step, sqrt(2) per
diagonal. Used to certify that a map is solvable at all and as the
denominator of the suboptimality ratio. Diagonal moves between two
diagonally adjacent obstacles are allowed, matching the collision rule of
segment_clear, so both sides of the ratio share one collision model.
"""

from __future__ import annotations

import heapq
import math
from typing import NamedTuple, Optional

from .grid import GridMap, Point

SQRT2 = math.sqrt(2.0)

# Fixed expansion order: E, SE, S, SW, W, NW, N, NE. Determinism of the
# returned path (not just its length) depends on this order staying put.
NEIGHBOR_OFFSETS = (
    (1, 0),
    (1, 1),
    (0, 1),
    (-1, 1),
    (-1, 0),
    (-1, -1),
    (0, -1),
    (1, -1),
)


class OraclePath(NamedTuple):
    cells: tuple[Point, ...]
    length: float


def path_cost(cells: tuple[Point, ...]) -> float:
    """Octile cost of an 8-connected cell chain, counted then scaled.

    n_cardinal + n_diagonal * sqrt(2) computed from step counts, so the
    value is independent of summation order.
    """
    cardinal = 0
    diagonal = 0
    for a, b in zip(cells, cells[1:]):
        if a.x != b.x and a.y != b.y:
            diagonal += 1
        else:
            cardinal += 1
    return cardinal + diagonal * SQRT2


def shortest_path(grid: GridMap) -> Optional[OraclePath]:
    """Minimal-cost free path start -> goal, or None when disconnected.

    Ties resolve deterministically: neighbors expand in NEIGHBOR_OFFSETS
    order and the frontier breaks equal priorities by insertion order.
    """
    start, goal = grid.start, grid.goal
    dist: dict[Point, float] = {start: 0.0}
    parent: dict[Point, Point] = {}
    counter = 0
    frontier: list[tuple[float, int, Point]] = [(0.0, counter, start)]
    done: set[Point] = set()

    while frontier:
        d, _, p = heapq.heappop(frontier)
        if p in done:
            continue
        if p == goal:
            break
        done.add(p)
        for dx, dy in NEIGHBOR_OFFSETS:
            q = Point(p.x + dx, p.y + dy)
            if not grid.is_free(q) or q in done:
                continue
            nd = d + (SQRT2 if dx and dy else 1.0)
            if nd < dist.get(q, math.inf):
                dist[q] = nd
                parent[q] = p
                counter += 1
                heapq.heappush(frontier, (nd, counter, q))
    else:
        return None

    cells = [goal]
    while cells[-1] != start:
        cells.append(parent[cells[-1]])
    cells.reverse()
    chain = tuple(cells)
    return OraclePath(chain, path_cost(chain))


def feasible(grid: GridMap) -> bool:
    """True iff some 8-connected free path joins start and goal."""
    return shortest_path(grid) is not None

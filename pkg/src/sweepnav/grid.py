"""Occupancy-grid world model, map ingestion, and discrete line-of-sight.

Coordinate frame: ``x`` is the column index (rightward), ``y`` the row index
(downward). Angles are degrees measured counterclockwise in that frame, so 0
points along +x and 90 points down-screen along +y. The world rectangle is a
hard boundary: rays treat its edge as blocking.

Discrete lines use integer Bresenham between rounded endpoints, canonicalized
so the lexicographically smaller endpoint drives the iteration. That makes
the visited cell set independent of traversal direction, which in turn makes
:func:`segment_clear` symmetric. Two diagonally adjacent obstacles do not
block a line passing between them (only cells on the Bresenham line are
checked).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import (
    BadCharError,
    InvalidConfigError,
    MalformedHeaderError,
    MapError,
    MissingOrDuplicateGoalError,
    MissingOrDuplicateStartError,
    OriginInvalidError,
    OutOfBoundsError,
    RaggedRowsError,
    StartOrGoalOnObstacleError,
    TruncatedDataError,
)

FREE_CHAR = "."
OBSTACLE_CHAR = "#"
START_CHAR = "S"
GOAL_CHAR = "G"
_ASCII_CHARS = {FREE_CHAR, OBSTACLE_CHAR, START_CHAR, GOAL_CHAR}

_WHITESPACE = b" \t\r\n\x0b\x0c"


class Point(NamedTuple):
    """Pixel position: x = column, y = row (y grows downward)."""

    x: int
    y: int


class RayHit(NamedTuple):
    """Result of casting one ray.

    ``endpoint`` is the last free in-bounds cell reached, ``clearance`` the
    Euclidean distance from the origin to the first blocking cell capped at
    the ray length, and ``blocked`` whether an obstacle or the world edge was
    met within that length. ``blocked=False`` implies the endpoint sits at the
    ray's full extent and ``clearance`` equals the ray length.
    """

    endpoint: Point
    clearance: float
    blocked: bool


def euclid(a: Point, b: Point) -> float:
    """Euclidean distance between two pixel positions."""
    return math.hypot(b.x - a.x, b.y - a.y)


def round_half_up(value: float) -> int:
    """Round to the nearest integer with ties toward +inf (both signs)."""
    return math.floor(value + 0.5)


@dataclass(frozen=True, eq=False)
class GridMap:
    """Immutable binary occupancy world with start and goal pixels.

    ``cells`` is a boolean array of shape (height, width); True marks an
    obstacle. The array is made read-only on construction, so a GridMap can
    be shared freely across concurrent planner runs.
    """

    width: int
    height: int
    cells: np.ndarray
    start: Point
    goal: Point

    def __post_init__(self) -> None:
        cells = np.asarray(self.cells, dtype=bool)
        if cells.shape != (self.height, self.width):
            raise MapError(
                f"cell array shape {cells.shape} does not match "
                f"{self.height}x{self.width}"
            )
        if self.width < 1 or self.height < 1:
            raise MapError("map must be at least 1x1")
        cells.setflags(write=False)
        object.__setattr__(self, "cells", cells)
        object.__setattr__(self, "start", Point(*self.start))
        object.__setattr__(self, "goal", Point(*self.goal))
        for name, p in (("start", self.start), ("goal", self.goal)):
            if not self.in_bounds(p):
                raise OutOfBoundsError(f"{name} {p} outside {self.width}x{self.height} grid")
            if self.cells[p.y, p.x]:
                raise StartOrGoalOnObstacleError(f"{name} {p} lies on an obstacle")
        if self.start == self.goal:
            raise MapError("start and goal must differ")

    def in_bounds(self, p: Point) -> bool:
        return 0 <= p[0] < self.width and 0 <= p[1] < self.height

    def is_obstacle(self, p: Point) -> bool:
        """True for obstacle cells; out-of-bounds positions are not obstacles."""
        return self.in_bounds(p) and bool(self.cells[p[1], p[0]])

    def is_free(self, p: Point) -> bool:
        """True iff p is in bounds and not an obstacle."""
        return self.in_bounds(p) and not self.cells[p[1], p[0]]

    def free_count(self) -> int:
        return int(self.width * self.height - np.count_nonzero(self.cells))


def load_ascii_map(text: str) -> GridMap:
    """Parse an ASCII map: '.' free, '#' obstacle, one 'S' start, one 'G' goal.

    Row 0 is the first text line; newline separates rows.
    """
    lines = text.splitlines()
    if not lines:
        raise MapError("empty map text")
    width = len(lines[0])
    if any(len(line) != width for line in lines):
        raise RaggedRowsError("map rows have unequal lengths")
    if width == 0:
        raise MapError("map rows are empty")
    height = len(lines)

    cells = np.zeros((height, width), dtype=bool)
    starts: list[Point] = []
    goals: list[Point] = []
    for y, line in enumerate(lines):
        for x, ch in enumerate(line):
            if ch not in _ASCII_CHARS:
                raise BadCharError(f"unexpected character {ch!r} at ({x}, {y})")
            if ch == OBSTACLE_CHAR:
                cells[y, x] = True
            elif ch == START_CHAR:
                starts.append(Point(x, y))
            elif ch == GOAL_CHAR:
                goals.append(Point(x, y))
    if len(starts) != 1:
        raise MissingOrDuplicateStartError(f"expected exactly one 'S', found {len(starts)}")
    if len(goals) != 1:
        raise MissingOrDuplicateGoalError(f"expected exactly one 'G', found {len(goals)}")
    return GridMap(width, height, cells, starts[0], goals[0])


def to_ascii(grid: GridMap) -> str:
    """Render a GridMap back to the ASCII format (inverse of load_ascii_map)."""
    rows = []
    for y in range(grid.height):
        row = []
        for x in range(grid.width):
            p = Point(x, y)
            if p == grid.start:
                row.append(START_CHAR)
            elif p == grid.goal:
                row.append(GOAL_CHAR)
            elif grid.cells[y, x]:
                row.append(OBSTACLE_CHAR)
            else:
                row.append(FREE_CHAR)
        rows.append("".join(row))
    return "\n".join(rows) + "\n"


def _pgm_token(data: bytes, pos: int) -> tuple[bytes, int]:
    n = len(data)
    while pos < n:
        c = data[pos]
        if c in _WHITESPACE:
            pos += 1
        elif c == ord("#"):
            while pos < n and data[pos] not in b"\r\n":
                pos += 1
        else:
            break
    if pos >= n:
        raise MalformedHeaderError("unexpected end of data in header")
    begin = pos
    while pos < n and data[pos] not in _WHITESPACE and data[pos] != ord("#"):
        pos += 1
    return data[begin:pos], pos


def _pgm_int(data: bytes, pos: int, what: str) -> tuple[int, int]:
    token, pos = _pgm_token(data, pos)
    try:
        value = int(token)
    except ValueError:
        raise MalformedHeaderError(f"non-numeric {what}: {token!r}") from None
    return value, pos


def load_pgm_map(data: bytes, threshold: int, start: Point, goal: Point) -> GridMap:
    """Parse a PGM image (plain P2 or binary P5, maxval <= 255) into a GridMap.

    A pixel strictly below ``threshold`` becomes an obstacle; anything else is
    free. ``start`` and ``goal`` come from the caller since the image carries
    no markers.
    """
    if not 0 <= threshold <= 255:
        raise MalformedHeaderError(f"threshold {threshold} outside 0..255")
    magic, pos = _pgm_token(data, 0)
    if magic not in (b"P2", b"P5"):
        raise MalformedHeaderError(f"unsupported magic {magic!r}")
    width, pos = _pgm_int(data, pos, "width")
    height, pos = _pgm_int(data, pos, "height")
    maxval, pos = _pgm_int(data, pos, "maxval")
    if width < 1 or height < 1:
        raise MalformedHeaderError(f"bad dimensions {width}x{height}")
    if not 1 <= maxval <= 255:
        raise MalformedHeaderError(f"maxval {maxval} outside 1..255")

    count = width * height
    if magic == b"P5":
        if pos >= len(data) or data[pos] not in _WHITESPACE:
            raise MalformedHeaderError("missing whitespace after maxval")
        pos += 1
        raster = data[pos : pos + count]
        if len(raster) < count:
            raise TruncatedDataError(f"raster holds {len(raster)} of {count} bytes")
        values = np.frombuffer(raster, dtype=np.uint8).astype(np.int64)
    else:
        samples = []
        for _ in range(count):
            try:
                value, pos = _pgm_int(data, pos, "sample")
            except MalformedHeaderError as exc:
                if "unexpected end of data" in str(exc):
                    raise TruncatedDataError(
                        f"raster holds {len(samples)} of {count} samples"
                    ) from None
                raise
            samples.append(value)
        values = np.asarray(samples, dtype=np.int64)

    if values.min() < 0 or values.max() > maxval:
        raise MalformedHeaderError("sample value outside 0..maxval")
    cells = (values < threshold).reshape(height, width)
    return GridMap(width, height, cells, Point(*start), Point(*goal))


def _bresenham(a: Point, b: Point) -> list[Point]:
    # Classic integer Bresenham over all octants; emits a..b inclusive.
    dx = b.x - a.x
    dy = b.y - a.y
    xsign = 1 if dx > 0 else -1
    ysign = 1 if dy > 0 else -1
    dx = abs(dx)
    dy = abs(dy)
    if dx > dy:
        xx, xy, yx, yy = xsign, 0, 0, ysign
    else:
        dx, dy = dy, dx
        xx, xy, yx, yy = 0, ysign, xsign, 0
    d = 2 * dy - dx
    y = 0
    cells = []
    for x in range(dx + 1):
        cells.append(Point(a.x + x * xx + y * yx, a.y + x * xy + y * yy))
        if d >= 0:
            y += 1
            d -= 2 * dx
        d += 2 * dy
    return cells


def line_cells(a: Point, b: Point) -> list[Point]:
    """Cells of the discrete line a..b inclusive, in a-to-b order.

    The cell set is direction-symmetric: the lexicographically smaller
    endpoint drives the Bresenham iteration and the result is reversed when
    needed, so line_cells(a, b) and line_cells(b, a) visit the same cells.
    """
    a = Point(*a)
    b = Point(*b)
    if (a.x, a.y) <= (b.x, b.y):
        return _bresenham(a, b)
    cells = _bresenham(b, a)
    cells.reverse()
    return cells


def ray_cast(grid: GridMap, origin: Point, angle_deg: float, max_dist: float) -> RayHit:
    """Cast one ray from origin at angle_deg, at most max_dist pixels long.

    The ray target is origin + round(max_dist * (cos a, sin a)) with ties
    rounded toward +inf. Cells of the discrete line (origin excluded) are
    walked in order; the first obstacle or out-of-bounds cell blocks the ray.
    """
    origin = Point(*origin)
    if not grid.is_free(origin):
        raise OriginInvalidError(f"origin {origin} out of bounds or on an obstacle")
    if max_dist < 1:
        raise InvalidConfigError(f"max_dist {max_dist} must be >= 1")
    rad = math.radians(angle_deg)
    target = Point(
        origin.x + round_half_up(max_dist * math.cos(rad)),
        origin.y + round_half_up(max_dist * math.sin(rad)),
    )
    endpoint = origin
    for cell in line_cells(origin, target)[1:]:
        if not grid.is_free(cell):
            return RayHit(endpoint, min(max_dist, euclid(origin, cell)), True)
        endpoint = cell
    return RayHit(endpoint, max_dist, False)


def segment_clear(grid: GridMap, a: Point, b: Point) -> bool:
    """True iff every cell on the discrete line from a to b is free.

    Both endpoints are included; uses the same traversal rule as ray_cast,
    so the result is symmetric in a and b.
    """
    a = Point(*a)
    b = Point(*b)
    if not grid.in_bounds(a) or not grid.in_bounds(b):
        raise OutOfBoundsError(f"segment endpoints {a}, {b} must be in bounds")
    return all(not grid.cells[c.y, c.x] for c in line_cells(a, b))

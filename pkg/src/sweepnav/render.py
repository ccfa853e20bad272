"""Binary PPM (P6) rendering of a map plus a walked path.

Pure function of (map, positions, scale): byte-identical output across
runs. Path segments are rasterized with the same discrete-line rule the
planner uses for collision checks, so the drawn path covers exactly the
cells the safety invariant certified.
"""

from __future__ import annotations

import numpy as np

from .errors import InvalidConfigError, OutOfBoundsError
from .grid import GridMap, Point, line_cells

COLOR_FREE = (255, 255, 255)
COLOR_OBSTACLE = (0, 0, 0)
COLOR_PATH = (255, 0, 0)
COLOR_START = (0, 200, 0)
COLOR_GOAL = (0, 0, 255)


def render_ppm(grid: GridMap, positions: list[Point], scale: int = 1) -> bytes:
    """Draw the map with the path overlaid; each cell is a scale x scale block.

    Start and goal are painted over the path so they stay visible.
    """
    if scale < 1:
        raise InvalidConfigError(f"scale {scale} must be >= 1")
    img = np.empty((grid.height, grid.width, 3), dtype=np.uint8)
    img[:] = COLOR_FREE
    img[grid.cells] = COLOR_OBSTACLE

    pts = [Point(*p) for p in positions]
    for p in pts:
        if not grid.in_bounds(p):
            raise OutOfBoundsError(f"path position {p} outside {grid.width}x{grid.height} map")
        img[p.y, p.x] = COLOR_PATH
    for a, b in zip(pts, pts[1:]):
        for c in line_cells(a, b):
            img[c.y, c.x] = COLOR_PATH

    img[grid.start.y, grid.start.x] = COLOR_START
    img[grid.goal.y, grid.goal.x] = COLOR_GOAL

    if scale > 1:
        img = np.repeat(np.repeat(img, scale, axis=0), scale, axis=1)
    header = f"P6\n{grid.width * scale} {grid.height * scale}\n255\n".encode("ascii")
    return header + img.tobytes()

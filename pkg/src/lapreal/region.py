"""Barycentric realizability grids and the CSV / SVG emitters.

The grid holds one membership bit per topology for every lattice point
(i, j, k) with i + j + k = resolution on the eigenvalue simplex
x + y + z = normalization.  The SVG reproduces the five region panels:
realizable interior cells in gray, realizable cells with a zero
coordinate in black, the rest white.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass

import numpy as np

from .realizability import MASKS

PANEL_ORDER = ("star", "cycle", "path", "kite", "k4")

_TITLES = {
    "star": "star",
    "cycle": "cycle",
    "path": "path",
    "kite": "kite",
    "k4": "K4",
}

GRAY = "#808080"
BLACK = "#000000"
WHITE = "#ffffff"

SQRT3 = math.sqrt(3.0)


@dataclass(frozen=True)
class RegionGrid:
    resolution: int
    normalization: float
    bary: np.ndarray  # (cells, 3) integer lattice coordinates
    masks: np.ndarray  # (cells, 5) booleans in PANEL_ORDER

    @property
    def cell_count(self) -> int:
        return self.bary.shape[0]

    def column(self, name: str) -> np.ndarray:
        return self.masks[:, PANEL_ORDER.index(name)]

    def coords(self) -> np.ndarray:
        """Scaled (x, y, z) coordinates of every lattice point."""
        return self.bary * (self.normalization / self.resolution)


def _max_workers() -> int:
    # REGION_THREADS caps grid parallelism; evaluation is a single
    # vectorized pass, which never exceeds any positive cap.
    raw = os.environ.get("REGION_THREADS")
    if raw is None:
        return 1
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"REGION_THREADS must be a positive integer, got {raw!r}")
    if value < 1:
        raise ValueError(f"REGION_THREADS must be a positive integer, got {raw!r}")
    return value


def evaluate_grid(resolution: int, normalization: float = 1.0) -> RegionGrid:
    """Evaluate all five predicates on the barycentric lattice."""
    if resolution < 2:
        raise ValueError(f"resolution must be >= 2, got {resolution}")
    if normalization <= 0:
        raise ValueError(f"normalization must be positive, got {normalization}")
    _max_workers()
    rows = []
    for i in range(resolution + 1):
        j = np.arange(resolution - i + 1)
        block = np.empty((j.size, 3), dtype=int)
        block[:, 0] = i
        block[:, 1] = j
        block[:, 2] = resolution - i - j
        rows.append(block)
    bary = np.concatenate(rows)
    scale = normalization / resolution
    x, y, z = bary[:, 0] * scale, bary[:, 1] * scale, bary[:, 2] * scale
    masks = np.column_stack(
        [
            MASKS["star"](x, y, z),
            MASKS["cycle"](x, y, z),
            MASKS["path"](x, y, z),
            MASKS["kite"](x, y, z),
            MASKS["complete"](x, y, z),
        ]
    )
    return RegionGrid(resolution, normalization, bary, masks)


def write_csv(grid: RegionGrid, path: str) -> None:
    """CSV with header x,y,z,star,cycle,path,kite,k4; booleans as 0/1."""
    coords = grid.coords()
    lines = ["x,y,z,star,cycle,path,kite,k4"]
    for row, mask in zip(coords, grid.masks):
        nums = ",".join(format(v, ".9g") for v in row)
        bits = ",".join("1" if b else "0" for b in mask)
        lines.append(f"{nums},{bits}")
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


def _cartesian(i: int, j: int, k: int, res: int) -> tuple[float, float]:
    # barycentric (x, y, z) -> ((z - x)/(x+y+z), sqrt(3)*y/(x+y+z));
    # vertices map to (-1, 0), (0, sqrt(3)), (1, 0)
    return (k - i) / res, SQRT3 * j / res


def _runs(flags: np.ndarray):
    """Maximal runs of consecutive True entries as (start, stop) inclusive."""
    idx = np.flatnonzero(flags)
    if idx.size == 0:
        return
    breaks = np.flatnonzero(np.diff(idx) > 1)
    starts = np.concatenate(([0], breaks + 1))
    stops = np.concatenate((breaks, [idx.size - 1]))
    for a, b in zip(starts, stops):
        yield int(idx[a]), int(idx[b])


def _panel_elements(grid: RegionGrid, column: np.ndarray) -> list[str]:
    res = grid.resolution
    cell = 1.0 / res
    half_h = SQRT3 / (2.0 * res)
    lookup = {}
    for (i, j, k), flag in zip(grid.bary, column):
        lookup[(int(i), int(j))] = bool(flag)
    parts = []
    # gray interior: one rectangle per run of realizable points in a row
    for j in range(res + 1):
        flags = np.array([lookup[(i, j)] for i in range(res - j + 1)])
        y = SQRT3 * j / res
        for a, b in _runs(flags):
            x_hi, _ = _cartesian(a, j, res - j - a, res)
            x_lo, _ = _cartesian(b, j, res - j - b, res)
            parts.append(
                f'<rect x="{x_lo - cell:.6f}" y="{y - half_h:.6f}" '
                f'width="{(x_hi - x_lo) + 2 * cell:.6f}" height="{2 * half_h:.6f}" '
                f'fill="{GRAY}"/>'
            )
    # black overlay: realizable points with some zero coordinate
    width = 1.8 * cell
    edges = [
        [(i, 0) for i in range(res + 1)],  # bottom edge, y = 0
        [(0, j) for j in range(res + 1)],  # left edge, x = 0
        [(res - j, j) for j in range(res + 1)],  # right edge, z = 0
    ]
    for points in edges:
        flags = np.array([lookup[(i, j)] for i, j in points])
        for a, b in _runs(flags):
            i0, j0 = points[a]
            i1, j1 = points[b]
            x0, y0 = _cartesian(i0, j0, res - i0 - j0, res)
            x1, y1 = _cartesian(i1, j1, res - i1 - j1, res)
            parts.append(
                f'<line x1="{x0:.6f}" y1="{y0:.6f}" x2="{x1:.6f}" y2="{y1:.6f}" '
                f'stroke="{BLACK}" stroke-width="{width:.6f}" stroke-linecap="round"/>'
            )
    return parts


def write_svg(grid: RegionGrid, path: str) -> None:
    """Standalone SVG 1.1 document with one <g> panel per topology."""
    scale = 160.0
    panel_w = 2.4 * scale
    panel_h = 2.2 * scale
    total_w = panel_w * len(PANEL_ORDER)
    tri = f"-1,0 1,0 0,{SQRT3:.6f}"
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{total_w:.0f}" height="{panel_h:.0f}" '
        f'viewBox="0 0 {total_w:.0f} {panel_h:.0f}">',
        "<!-- barycentric map: (x,y,z) -> ((z-x)/(x+y+z), sqrt(3)*y/(x+y+z)); "
        "triangle vertices (-1,0), (1,0), (0,sqrt(3)) -->",
        "<defs>",
        f'<clipPath id="tri"><polygon points="{tri}"/></clipPath>',
        "</defs>",
        f'<rect width="{total_w:.0f}" height="{panel_h:.0f}" fill="{WHITE}"/>',
    ]
    for idx, name in enumerate(PANEL_ORDER):
        cx = panel_w * idx + panel_w / 2.0
        base_y = panel_h - 0.25 * scale
        parts.append(
            f'<g id="panel-{name}" transform="translate({cx:.1f},{base_y:.1f}) '
            f'scale({scale:.0f},{-scale:.0f})">'
        )
        parts.append(f'<polygon points="{tri}" fill="{WHITE}"/>')
        parts.append('<g clip-path="url(#tri)">')
        parts.extend(_panel_elements(grid, grid.column(name)))
        parts.append("</g>")
        parts.append(
            f'<polygon points="{tri}" fill="none" stroke="{BLACK}" stroke-width="0.012"/>'
        )
        parts.append("</g>")
        parts.append(
            f'<text x="{cx:.1f}" y="{panel_h - 8:.1f}" text-anchor="middle" '
            f'font-family="sans-serif" font-size="16">{_TITLES[name]}</text>'
        )
    parts.append("</svg>")
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(parts) + "\n")


def render_region(
    resolution: int,
    normalization: float = 1.0,
    csv_path: str | None = None,
    svg_path: str | None = None,
) -> RegionGrid:
    """Evaluate the grid and emit the requested files."""
    grid = evaluate_grid(resolution, normalization)
    if csv_path:
        write_csv(grid, csv_path)
    if svg_path:
        write_svg(grid, svg_path)
    return grid

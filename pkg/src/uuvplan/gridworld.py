"""Unit-cell occupancy grids in two or three dimensions.

Cells are closed unit squares/cubes addressed by integer indices. A
continuous point belongs to the cell found by flooring each coordinate.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

Cell = tuple[int, ...]

SQRT2 = math.sqrt(2.0)
SQRT3 = math.sqrt(3.0)


def neighbor_offsets(dims: int) -> np.ndarray:
    """All non-zero offsets in {-1, 0, 1}^dims, in lexicographic order."""
    offs = [d for d in itertools.product((-1, 0, 1), repeat=dims) if any(d)]
    return np.array(offs, dtype=np.int64)


@dataclass(frozen=True)
class GridMap:
    """Binary occupancy grid with 1 m cells.

    Parameters
    ----------
    extent : tuple of int
        Number of cells along each axis; its length sets the dimension.
    obstacles : iterable of cells
        Occupied cell indices.
    """

    extent: tuple[int, ...]
    obstacles: frozenset = frozenset()
    occupancy: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        extent = tuple(int(e) for e in self.extent)
        if len(extent) not in (2, 3):
            raise ValueError(f"grid must be 2D or 3D, got {len(extent)} axes")
        if any(e < 1 for e in extent):
            raise ValueError(f"extent must be >= 1 on every axis, got {extent}")
        obstacles = frozenset(tuple(int(v) for v in c) for c in self.obstacles)
        occ = np.zeros(extent, dtype=bool)
        for c in obstacles:
            if len(c) != len(extent) or not all(0 <= v < e for v, e in zip(c, extent)):
                raise ValueError(f"obstacle {c} outside grid of extent {extent}")
            occ[c] = True
        occ.flags.writeable = False
        object.__setattr__(self, "extent", extent)
        object.__setattr__(self, "obstacles", obstacles)
        object.__setattr__(self, "occupancy", occ)

    @property
    def dims(self) -> int:
        return len(self.extent)

    @property
    def n_cells(self) -> int:
        return int(np.prod(self.extent))

    def in_bounds(self, c: Sequence[int]) -> bool:
        return len(c) == self.dims and all(0 <= v < e for v, e in zip(c, self.extent))

    def is_obstacle(self, c: Sequence[int]) -> bool:
        return bool(self.occupancy[tuple(c)])

    def is_free(self, c: Sequence[int]) -> bool:
        return self.in_bounds(c) and not self.is_obstacle(c)

    def cell_of(self, pos: Iterable[float]) -> Cell:
        """Cell containing a continuous position (floor per axis)."""
        return tuple(int(math.floor(v)) for v in pos)

    def point_blocked(self, pos: Iterable[float]) -> bool:
        c = self.cell_of(pos)
        return self.in_bounds(c) and self.is_obstacle(c)

    def point_inside(self, pos: Iterable[float]) -> bool:
        pos = tuple(pos)
        return all(0.0 <= v <= e for v, e in zip(pos, self.extent))

    def _check(self, c):
        if not self.in_bounds(c):
            raise ValueError(f"cell {tuple(c)} outside grid of extent {self.extent}")


def neighbors(gmap: GridMap, c: Sequence[int]) -> list[Cell]:
    """In-bounds cells adjacent to ``c`` (8 in 2D, 26 in 3D at most).

    Order is lexicographic by offset so downstream tie-breaking is stable.
    """
    gmap._check(c)
    out = []
    for off in neighbor_offsets(gmap.dims):
        n = tuple(int(a + b) for a, b in zip(c, off))
        if gmap.in_bounds(n):
            out.append(n)
    return out


def step_length(a: Sequence[int], b: Sequence[int]) -> float:
    """Length of one grid move: 1, sqrt(2) or sqrt(3)."""
    if len(a) != len(b):
        raise ValueError("dimension mismatch")
    diff = [abs(int(x) - int(y)) for x, y in zip(a, b)]
    if max(diff) != 1:
        raise ValueError(f"{tuple(a)} and {tuple(b)} are not adjacent")
    return math.sqrt(sum(diff))


def euclid(a: Sequence[float], b: Sequence[float]) -> float:
    if len(a) != len(b):
        raise ValueError(f"dimension mismatch: {len(a)} vs {len(b)}")
    return math.dist(a, b)


def octile_distance(a: Sequence[int], b: Sequence[int]) -> float:
    """Shortest 8/26-connected path length between two cells with no obstacles."""
    if len(a) != len(b):
        raise ValueError("dimension mismatch")
    d = sorted((abs(int(x) - int(y)) for x, y in zip(a, b)), reverse=True)
    if len(d) == 2:
        return (d[0] - d[1]) + SQRT2 * d[1]
    return (d[0] - d[1]) + SQRT2 * (d[1] - d[2]) + SQRT3 * d[2]


def cell_center(c: Sequence[int]) -> np.ndarray:
    return np.asarray(c, dtype=float) + 0.5

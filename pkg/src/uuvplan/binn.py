"""Bio-inspired neural network (BINN) grid planner.

Every grid cell is a neuron. Starting from the vehicle's cell, the
activities of the adjacent neurons are evaluated with

    a_i = f(a_j + exp(-|i - T| [+ |i - j|]) + J_i)

and the vehicle moves to the most active neighbour. ``f`` is the
piecewise-linear transfer function and ``J_i`` the external input
(-1 obstacle, 0 already searched, +1 unsearched).

The bracketed ``|i - j|`` term appears in the printed update rule but
makes the greedy choice prefer diagonals regardless of progress towards
the target; it is available through ``BinnParams.literal_exponent``. The
default omits it, which is the reading that reproduces the published
obstacle-free path lengths.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence

import numpy as np

from .errors import EndpointBlocked, NoPath
from .gridworld import Cell, GridMap, euclid, neighbor_offsets, step_length


@dataclass(frozen=True)
class BinnParams:
    k_f: float = 0.5
    max_steps: Optional[int] = None
    literal_exponent: bool = False

    def __post_init__(self):
        if not 0.0 < self.k_f <= 1.0:
            raise ValueError(f"k_f must lie in (0, 1], got {self.k_f}")
        if self.max_steps is not None and self.max_steps < 1:
            raise ValueError(f"max_steps must be >= 1, got {self.max_steps}")

    def step_budget(self, gmap: GridMap) -> int:
        if self.max_steps is not None:
            return int(self.max_steps)
        return 4 * gmap.n_cells


@dataclass
class ActivityField:
    """Per-neuron activity and searched flags for one planning run."""

    activity: np.ndarray
    searched: np.ndarray

    @classmethod
    def zeros(cls, gmap: GridMap) -> "ActivityField":
        return cls(np.zeros(gmap.extent), np.zeros(gmap.extent, dtype=bool))

    @property
    def n_searched(self) -> int:
        return int(self.searched.sum())


@dataclass(frozen=True)
class Path:
    waypoints: tuple[Cell, ...]
    length: float = field(default=float("nan"))

    def __post_init__(self):
        wps = tuple(tuple(int(v) for v in c) for c in self.waypoints)
        if not wps:
            raise ValueError("path needs at least one waypoint")
        object.__setattr__(self, "waypoints", wps)
        if math.isnan(self.length):
            object.__setattr__(self, "length", path_length(wps))

    def __len__(self):
        return len(self.waypoints)

    @property
    def start(self) -> Cell:
        return self.waypoints[0]

    @property
    def end(self) -> Cell:
        return self.waypoints[-1]


def transfer(x: float, k_f: float = 0.5) -> float:
    return -1.0 if x < 0 else k_f * x


def external_input(gmap: GridMap, fld: ActivityField, i: Sequence[int]) -> float:
    gmap._check(i)
    i = tuple(i)
    if gmap.is_obstacle(i):
        return -1.0
    return 0.0 if fld.searched[i] else 1.0


def candidate_activity(fld: ActivityField, j: Sequence[int], i: Sequence[int],
                       target: Sequence[int], params: BinnParams, gmap: GridMap) -> float:
    """Activity neuron ``i`` would take if reached from the active neuron ``j``.

    Pure: the field is not modified.
    """
    step_length(j, i)  # raises for non-adjacent pairs
    expo = -euclid(i, target)
    if params.literal_exponent:
        expo += euclid(i, j)
    x = fld.activity[tuple(j)] + math.exp(expo) + external_input(gmap, fld, i)
    return transfer(x, params.k_f)


def _scores(gmap, fld, cur, target, params, offsets):
    """Vectorised ``candidate_activity`` over all in-bounds neighbours of ``cur``."""
    cand = np.asarray(cur) + offsets
    ok = np.all((cand >= 0) & (cand < np.asarray(gmap.extent)), axis=1)
    cand = cand[ok]
    idx = tuple(cand.T)
    blocked = gmap.occupancy[idx]
    ext = np.where(blocked, -1.0, np.where(fld.searched[idx], 0.0, 1.0))
    expo = -np.sqrt(((cand - np.asarray(target)) ** 2).sum(axis=1))
    if params.literal_exponent:
        expo = expo + np.sqrt((np.abs(offsets[ok])).sum(axis=1))
    x = fld.activity[tuple(cur)] + np.exp(expo) + ext
    act = np.where(x < 0, -1.0, params.k_f * x)
    return cand, act, blocked


def iter_plan(gmap: GridMap, start: Sequence[int], target: Sequence[int],
              params: BinnParams = BinnParams(),
              fld: Optional[ActivityField] = None) -> Iterator[tuple[Cell, ActivityField]]:
    """Yield ``(cell, field)`` for the start cell and after every move.

    Stops once the target is reached; raises ``NoPath`` when the step
    budget runs out first. Obstacle cells are never selected.
    """
    start, target = tuple(start), tuple(target)
    for name, c in (("start", start), ("target", target)):
        gmap._check(c)
        if gmap.is_obstacle(c):
            raise EndpointBlocked(f"{name} cell {c} is an obstacle")
    if len(start) != len(target):
        raise ValueError("start and target dimension mismatch")
    if fld is None:
        fld = ActivityField.zeros(gmap)
    offsets = neighbor_offsets(gmap.dims)

    cur = start
    yield cur, fld
    for _ in range(params.step_budget(gmap)):
        if cur == target:
            return
        fld.searched[cur] = True
        cand, act, blocked = _scores(gmap, fld, cur, target, params, offsets)
        if blocked.all():
            break
        act = np.where(blocked, -np.inf, act)
        k = int(np.argmax(act))
        nxt = tuple(int(v) for v in cand[k])
        fld.activity[nxt] = act[k]
        cur = nxt
        yield cur, fld
    if cur != target:
        raise NoPath(f"no path from {start} to {target} within "
                     f"{params.step_budget(gmap)} steps")


def plan_path(gmap: GridMap, start: Sequence[int], target: Sequence[int],
              params: BinnParams = BinnParams()) -> Path:
    """Greedy neural-activity path from ``start`` to ``target``."""
    cells = [c for c, _ in iter_plan(gmap, start, target, params)]
    return Path(tuple(cells))


def path_length(waypoints) -> float:
    if isinstance(waypoints, Path):
        return waypoints.length
    wps = list(waypoints)
    return float(sum(step_length(a, b) for a, b in zip(wps, wps[1:])))

"""Kinematic waypoint following under ocean currents.

Vehicles are points. Each step the controller aims at the active
waypoint with the desired speed; the actual velocity is the commanded
velocity plus the local current. In ``BNNP`` mode the command is the
desired velocity itself, so the current drags the vehicle off track. In
``CBNNTAP`` mode the command is the adjustment velocity ``v_d - v_cur``,
which cancels the current exactly (unless an actuation cap saturates it).
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .binn import Path
from .currents import CurrentField
from .gridworld import GridMap


class Mode(str, enum.Enum):
    BNNP = "bnnp"
    CBNNTAP = "cbnntap"

    @classmethod
    def parse(cls, value) -> "Mode":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).strip().lower())
        except ValueError:
            raise ValueError(f"unknown mode {value!r}; expected 'bnnp' or 'cbnntap'") from None


class Status(str, enum.Enum):
    REACHED = "reached"
    COLLISION = "collision"
    FAILED = "failed"


@dataclass(frozen=True)
class SimConfig:
    dt: float = 0.02
    v_d: float = 1.0
    arrive_eps: float = 0.05
    time_factor: float = 5.0
    actuation_cap: Optional[float] = None

    def __post_init__(self):
        if not self.dt > 0:
            raise ValueError(f"dt must be > 0, got {self.dt}")
        if not self.v_d > 0:
            raise ValueError(f"v_d must be > 0, got {self.v_d}")
        if not self.arrive_eps > 0:
            raise ValueError(f"arrive_eps must be > 0, got {self.arrive_eps}")
        if not self.time_factor >= 1:
            raise ValueError(f"time_factor must be >= 1, got {self.time_factor}")
        if self.actuation_cap is not None and not self.actuation_cap > 0:
            raise ValueError(f"actuation_cap must be > 0, got {self.actuation_cap}")


@dataclass
class TrajectoryRecord:
    """Time series of the vehicle state.

    Row ``k`` holds the state at ``t[k]`` and the velocities applied over
    the following ``dt``. The last row is the terminal state, at rest.
    """

    t: np.ndarray
    position: np.ndarray
    commanded: np.ndarray
    current: np.ndarray
    actual: np.ndarray
    saturated: np.ndarray
    traveled: float

    def __len__(self):
        return len(self.t)


@dataclass(frozen=True)
class SimOutcome:
    status: Status
    distance: Optional[float] = None
    position: Optional[tuple] = None
    time: Optional[float] = None
    reason: Optional[str] = None
    max_cross_track: float = 0.0
    saturated_steps: int = 0

    def to_dict(self) -> dict:
        return {
            "status": self.status.value,
            "distance": self.distance,
            "position": list(self.position) if self.position is not None else None,
            "time": self.time,
            "reason": self.reason,
            "max_cross_track": self.max_cross_track,
            "saturated_steps": self.saturated_steps,
        }


def compensation(v_d, v_cur, cap: Optional[float] = None) -> np.ndarray:
    """Adjustment velocity that cancels the current: ``v_d - v_cur``.

    With ``cap`` set, the result is scaled down to that magnitude when it
    would exceed it.
    """
    v_d = np.asarray(v_d, dtype=float)
    v_cur = np.asarray(v_cur, dtype=float)
    if v_d.shape != v_cur.shape:
        raise ValueError(f"dimension mismatch: {v_d.shape} vs {v_cur.shape}")
    adj = v_d - v_cur
    if cap is not None:
        mag = math.sqrt(adj @ adj)
        if mag > cap:
            adj = adj * (cap / mag)
    return adj


def is_saturated(v_d, v_cur, cap: Optional[float]) -> bool:
    if cap is None:
        return False
    adj = np.asarray(v_d, dtype=float) - np.asarray(v_cur, dtype=float)
    return math.sqrt(adj @ adj) > cap


def desired_velocity(pos, waypoint, speed: float) -> np.ndarray:
    d = np.asarray(waypoint, dtype=float) - np.asarray(pos, dtype=float)
    n = math.sqrt(d @ d)
    if n <= 1e-12:
        raise ValueError("position coincides with the waypoint")
    return d * (speed / n)


def waypoint_centers(path: Path) -> np.ndarray:
    return np.asarray(path.waypoints, dtype=float) + 0.5


def polyline_distance(points, vertices) -> np.ndarray:
    """Distance from each point to the polyline through ``vertices``."""
    p = np.atleast_2d(np.asarray(points, dtype=float))
    v = np.atleast_2d(np.asarray(vertices, dtype=float))
    if len(v) == 1:
        return np.linalg.norm(p - v[0], axis=1)
    a, b = v[:-1], v[1:]
    ab = b - a
    ap = p[:, None, :] - a[None, :, :]
    denom = np.maximum((ab * ab).sum(axis=1), 1e-300)
    s = np.clip((ap * ab[None]).sum(axis=2) / denom, 0.0, 1.0)
    closest = a[None] + s[..., None] * ab[None]
    return np.linalg.norm(p[:, None, :] - closest, axis=2).min(axis=1)


def cross_track_error(rec, path) -> float:
    """Largest distance between the trajectory and the planned polyline."""
    pos = rec.position if isinstance(rec, TrajectoryRecord) else rec
    verts = waypoint_centers(path) if isinstance(path, Path) else path
    if len(pos) == 0:
        return 0.0
    return float(polyline_distance(pos, verts).max())


def follow_path(path: Path, mode, fld: CurrentField, gmap: GridMap,
                cfg: SimConfig = SimConfig()) -> tuple[TrajectoryRecord, SimOutcome]:
    """Integrate the vehicle along ``path`` with a fixed time step.

    A step that would carry the vehicle past the active waypoint is
    shortened to end on it; the waypoint is captured when that landing step
    finishes within ``arrive_eps``. Terminates with ``Reached`` once the
    last waypoint is captured,
    ``Collision`` when the position enters an obstacle cell, and
    ``Failed`` on timeout, excessive cross-track error or leaving the map.
    """
    mode = Mode.parse(mode)
    if not isinstance(path, Path) or len(path) == 0:
        raise ValueError("follow_path needs a non-empty Path")
    if len(path.start) != gmap.dims:
        raise ValueError("path and map dimension mismatch")
    verts = waypoint_centers(path)
    dims = gmap.dims
    dt = cfg.dt
    budget = cfg.time_factor * path.length / cfg.v_d
    max_dev = 0.5 * max(gmap.extent)
    zero = np.zeros(dims)

    ts, ps, cmds, curs, acts, sats = [], [], [], [], [], []
    pos = verts[0].copy()
    t = 0.0
    traveled = 0.0
    max_ct = 0.0
    active = 1
    n_sat = 0
    outcome = None

    def terminal(**kw):
        return SimOutcome(max_cross_track=max_ct, saturated_steps=n_sat, **kw)

    step = 0
    while True:
        while active < len(verts) and math.dist(pos, verts[active]) <= 1e-9:
            active += 1
        if active >= len(verts):
            outcome = terminal(status=Status.REACHED, distance=traveled, time=t)
            break
        if t > budget:
            outcome = terminal(status=Status.FAILED, reason="timeout", time=t)
            break

        # a step that would overshoot the waypoint is shortened to end on it
        wp = verts[active]
        gap = math.dist(pos, wp)
        landing = gap <= cfg.v_d * dt + 1e-9
        v_des = desired_velocity(pos, wp, gap / dt if landing else cfg.v_d)
        v_cur = np.asarray(fld.sample(pos, t), dtype=float)
        if mode is Mode.CBNNTAP:
            sat = is_saturated(v_des, v_cur, cfg.actuation_cap)
            v_cmd = compensation(v_des, v_cur, cfg.actuation_cap)
        else:
            sat = False
            v_cmd = v_des
        v_act = v_cmd + v_cur
        n_sat += sat

        ts.append(t)
        ps.append(pos)
        cmds.append(v_cmd)
        curs.append(v_cur)
        acts.append(v_act)
        sats.append(sat)

        pos = pos + v_act * dt
        traveled += math.sqrt(v_act @ v_act) * dt
        step += 1
        t = step * dt
        if landing and math.dist(pos, wp) <= cfg.arrive_eps:
            active += 1

        ct = float(polyline_distance(pos, verts)[0])
        max_ct = max(max_ct, ct)
        if gmap.point_blocked(pos):
            outcome = terminal(status=Status.COLLISION, position=tuple(float(v) for v in pos),
                               time=t)
            break
        if not gmap.point_inside(pos):
            outcome = terminal(status=Status.FAILED, reason="out-of-bounds", time=t)
            break
        if ct > max_dev:
            outcome = terminal(status=Status.FAILED, reason="max-deviation", time=t)
            break

    ts.append(t)
    ps.append(pos)
    for lst in (cmds, curs, acts):
        lst.append(zero)
    sats.append(False)
    rec = TrajectoryRecord(
        t=np.asarray(ts),
        position=np.asarray(ps),
        commanded=np.asarray(cmds),
        current=np.asarray(curs),
        actual=np.asarray(acts),
        saturated=np.asarray(sats, dtype=bool),
        traveled=traveled,
    )
    return rec, outcome

"""Target assignment from normalised pre-planned path distances.

Rows of the assignment matrix are targets, columns are vehicles. The
greedy rule repeatedly takes the smallest entry of the residue matrix
and deletes its row and column until every target has a vehicle.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .binn import BinnParams, Path, plan_path
from .errors import AllPairsInfeasible, InfeasibleResidue, NoPath
from .gridworld import GridMap


def _default_ids(prefix, k):
    return tuple(f"{prefix}{i}" for i in range(k))


@dataclass(frozen=True)
class AssignmentMatrix:
    raw: np.ndarray
    normalized: np.ndarray
    target_ids: tuple
    vehicle_ids: tuple
    paths: dict = field(default_factory=dict, compare=False, repr=False)

    @classmethod
    def from_raw(cls, raw, target_ids: Optional[Sequence] = None,
                 vehicle_ids: Optional[Sequence] = None, paths=None) -> "AssignmentMatrix":
        raw = np.array(raw, dtype=float)
        if raw.ndim != 2:
            raise ValueError("assignment matrix must be 2-D")
        m, n = raw.shape
        if m > n:
            raise ValueError(f"{m} targets outnumber {n} vehicles")
        if np.any(raw < 0) or np.any(np.isnan(raw)):
            raise ValueError("distances must be non-negative")
        finite = np.isfinite(raw)
        for r in range(m):
            if not finite[r].any():
                tid = target_ids[r] if target_ids is not None else r
                raise AllPairsInfeasible(f"target {tid} unreachable by every vehicle")
        top = raw[finite].max()
        norm = raw / top if top > 0 else np.where(finite, 0.0, np.inf)
        target_ids = tuple(target_ids) if target_ids is not None else _default_ids("T", m)
        vehicle_ids = tuple(vehicle_ids) if vehicle_ids is not None else _default_ids("V", n)
        if len(target_ids) != m or len(vehicle_ids) != n:
            raise ValueError("id lists do not match matrix shape")
        raw.flags.writeable = False
        norm.flags.writeable = False
        return cls(raw, norm, target_ids, vehicle_ids, dict(paths or {}))

    @property
    def shape(self):
        return self.raw.shape


@dataclass(frozen=True)
class PriorityList:
    """Ordered (target index, vehicle index, normalised value) selections."""

    pairs: tuple
    unassigned: tuple
    inspections: int
    target_ids: tuple = ()
    vehicle_ids: tuple = ()

    def __iter__(self):
        return iter(self.pairs)

    def __len__(self):
        return len(self.pairs)

    @property
    def total(self) -> float:
        return float(sum(v for _, _, v in self.pairs))

    def labelled(self):
        """Pairs as (target id, vehicle id, value)."""
        return [(self.target_ids[r], self.vehicle_ids[c], v) for r, c, v in self.pairs]


def build_matrix(gmap: GridMap, vehicles: Sequence, targets: Sequence,
                 params: BinnParams = BinnParams(),
                 vehicle_ids: Optional[Sequence] = None,
                 target_ids: Optional[Sequence] = None) -> AssignmentMatrix:
    """Plan every vehicle-to-target path and collect the distances.

    Pairs the planner cannot connect get an infinite distance.
    """
    m, n = len(targets), len(vehicles)
    if m > n:
        raise ValueError(f"{m} targets outnumber {n} vehicles")
    raw = np.full((m, n), np.inf)
    paths: dict[tuple[int, int], Path] = {}
    for r, tgt in enumerate(targets):
        for c, veh in enumerate(vehicles):
            try:
                p = plan_path(gmap, veh, tgt, params)
            except NoPath:
                continue
            paths[r, c] = p
            raw[r, c] = p.length
    return AssignmentMatrix.from_raw(raw, target_ids, vehicle_ids, paths)


def greedy_assign(matrix) -> PriorityList:
    """Pick residue-matrix minima until every target row is used.

    Ties go to the smallest target index, then the smallest vehicle index.
    ``inspections`` counts the residue entries examined, which is
    sum((m-k)(n-k)) for k < m.
    """
    if not isinstance(matrix, AssignmentMatrix):
        matrix = AssignmentMatrix.from_raw(matrix)
    a = matrix.normalized
    m, n = a.shape
    rows = list(range(m))
    cols = list(range(n))
    pairs = []
    inspections = 0
    for _ in range(m):
        sub = a[np.ix_(rows, cols)]
        inspections += sub.size
        dead = ~np.isfinite(sub).any(axis=1)
        if dead.any():
            r = rows[int(np.argmax(dead))]
            raise InfeasibleResidue(f"target {matrix.target_ids[r]} has no reachable "
                                    "vehicle left")
        k = int(np.argmin(sub))
        r, c = rows[k // len(cols)], cols[k % len(cols)]
        pairs.append((r, c, float(a[r, c])))
        rows.remove(r)
        cols.remove(c)
    return PriorityList(tuple(pairs), tuple(cols), inspections,
                        matrix.target_ids, matrix.vehicle_ids)

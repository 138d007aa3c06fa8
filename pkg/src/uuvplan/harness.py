"""Scenario files, experiment orchestration and result emission."""
from __future__ import annotations

import csv
import hashlib
import json
import math
import re
from dataclasses import dataclass, field, replace
from importlib import resources
from pathlib import Path as FsPath
from typing import Iterable, Optional, Sequence

import numpy as np

from .assignment import AssignmentMatrix, PriorityList, build_matrix, greedy_assign
from .binn import BinnParams, Path
from .currents import CurrentField, Uniform, Zero, field_from_dict
from .errors import ScenarioError
from .gridworld import GridMap
from .nav import Mode, SimConfig, SimOutcome, TrajectoryRecord, follow_path

SCHEMA_VERSION = 1

_FLAT_LIST = re.compile(r"\[\s*([^\[\]{}\"]*?)\s*\]", re.S)


def dumps(obj) -> str:
    """Indented JSON with scalar-only lists kept on one line."""
    text = json.dumps(obj, indent=2)
    return _FLAT_LIST.sub(lambda m: "[" + re.sub(r"\s*\n\s*", " ", m.group(1)) + "]", text) + "\n"


@dataclass(frozen=True)
class Scenario:
    map: GridMap
    vehicles: tuple  # ((id, cell), ...)
    targets: tuple
    field: CurrentField = Zero()
    sim: SimConfig = SimConfig()
    binn: BinnParams = BinnParams()
    name: str = ""

    @property
    def vehicle_ids(self):
        return tuple(v for v, _ in self.vehicles)

    @property
    def target_ids(self):
        return tuple(t for t, _ in self.targets)

    def with_field(self, fld: CurrentField) -> "Scenario":
        return replace(self, field=fld)

    def to_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "name": self.name,
            "map": {
                "dims": self.map.dims,
                "extent": list(self.map.extent),
                "obstacles": [list(c) for c in sorted(self.map.obstacles)],
            },
            "vehicles": [{"id": i, "cell": list(c)} for i, c in self.vehicles],
            "targets": [{"id": i, "cell": list(c)} for i, c in self.targets],
            "field": self.field.to_dict(),
            "sim": {
                "dt": self.sim.dt,
                "v_d": self.sim.v_d,
                "arrive_eps": self.sim.arrive_eps,
                "time_factor": self.sim.time_factor,
                "actuation_cap": self.sim.actuation_cap,
            },
            "binn": {
                "k_f": self.binn.k_f,
                "max_steps": self.binn.max_steps,
                "literal_exponent": self.binn.literal_exponent,
            },
        }

    def digest(self) -> str:
        blob = json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode()).hexdigest()


def _agents(raw, key, problems):
    out = []
    if not isinstance(raw, list):
        problems.append(f"{key}: expected a list")
        return out
    for k, item in enumerate(raw):
        try:
            out.append((str(item["id"]), tuple(int(v) for v in item["cell"])))
        except (KeyError, TypeError, ValueError):
            problems.append(f"{key}[{k}]: expected {{'id': ..., 'cell': [...]}}")
    return out


def scenario_from_dict(d: dict) -> Scenario:
    """Build and validate a scenario; all violations are reported together."""
    problems = []
    if not isinstance(d, dict):
        raise ScenarioError("scenario: expected a JSON object")
    version = d.get("schema_version")
    if version != SCHEMA_VERSION:
        problems.append(f"schema_version: expected {SCHEMA_VERSION}, got {version!r}")

    gmap = None
    m = d.get("map", {})
    try:
        extent = tuple(int(e) for e in m["extent"])
        if "dims" in m and int(m["dims"]) != len(extent):
            problems.append(f"map.dims: {m['dims']} does not match extent {list(extent)}")
        gmap = GridMap(extent, frozenset(tuple(c) for c in m.get("obstacles", [])))
    except (KeyError, TypeError) as exc:
        problems.append(f"map: malformed ({exc})")
    except ValueError as exc:
        problems.append(f"map: {exc}")

    vehicles = _agents(d.get("vehicles"), "vehicles", problems)
    targets = _agents(d.get("targets"), "targets", problems)
    for key, agents in (("vehicles", vehicles), ("targets", targets)):
        ids = [i for i, _ in agents]
        if len(set(ids)) != len(ids):
            problems.append(f"{key}: duplicate ids")
        if gmap is None:
            continue
        for k, (i, c) in enumerate(agents):
            if not gmap.in_bounds(c):
                problems.append(f"{key}[{k}] ({i}): cell {list(c)} outside map")
            elif gmap.is_obstacle(c):
                problems.append(f"{key}[{k}] ({i}): cell {list(c)} is an obstacle")
    if not vehicles:
        problems.append("vehicles: at least one vehicle required")
    if not targets:
        problems.append("targets: at least one target required")
    if len(targets) > len(vehicles):
        problems.append(f"targets: {len(targets)} targets outnumber {len(vehicles)} vehicles")

    fld = Zero()
    try:
        fld = field_from_dict(d.get("field", {"variant": "zero"}))
        if gmap is not None and fld.dims is not None and fld.dims != gmap.dims:
            problems.append(f"field: {fld.variant} is {fld.dims}-D but map is {gmap.dims}-D")
    except (TypeError, ValueError) as exc:
        problems.append(f"field: {exc}")

    sim = SimConfig()
    try:
        sim = SimConfig(**d.get("sim", {}))
    except (TypeError, ValueError) as exc:
        problems.append(f"sim: {exc}")
    binn = BinnParams()
    try:
        binn = BinnParams(**d.get("binn", {}))
    except (TypeError, ValueError) as exc:
        problems.append(f"binn: {exc}")

    if problems:
        raise ScenarioError(problems)
    return Scenario(gmap, tuple(vehicles), tuple(targets), fld, sim, binn,
                    str(d.get("name", "")))


def load_scenario(path) -> Scenario:
    path = FsPath(path)
    try:
        data = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise ScenarioError(f"{path.name}: parse error at line {exc.lineno}: {exc.msg}") from exc
    return scenario_from_dict(data)


def save_scenario(s: Scenario, path) -> None:
    FsPath(path).write_text(dumps(s.to_dict()))


def bundled_scenario_path(name: str) -> FsPath:
    if not name.endswith(".json"):
        name += ".json"
    return FsPath(str(resources.files("uuvplan") / "scenarios" / name))


def bundled_scenario(name: str) -> Scenario:
    """Load one of the scenarios shipped with the package (e.g. ``"2d_static"``)."""
    return load_scenario(bundled_scenario_path(name))


@dataclass
class PairResult:
    vehicle: str
    target: str
    mode: Mode
    outcome: SimOutcome
    record: TrajectoryRecord = field(repr=False)

    @property
    def pair_id(self) -> str:
        return f"{self.vehicle}-{self.target}"


@dataclass
class RunReport:
    scenario: Scenario
    matrix: AssignmentMatrix
    priority: PriorityList
    modes: tuple
    results: list = field(default_factory=list)

    @property
    def input_hash(self) -> str:
        h = hashlib.sha256(self.scenario.digest().encode())
        h.update(",".join(m.value for m in self.modes).encode())
        return h.hexdigest()

    def path_for(self, target: str, vehicle: str) -> Path:
        r = self.matrix.target_ids.index(target)
        c = self.matrix.vehicle_ids.index(vehicle)
        return self.matrix.paths[r, c]

    def result(self, pair_id: str, mode) -> PairResult:
        mode = Mode.parse(mode)
        for res in self.results:
            if res.pair_id == pair_id and res.mode is mode:
                return res
        raise KeyError((pair_id, mode))

    def to_dict(self) -> dict:
        def finite(row):
            return [float(v) if math.isfinite(v) else None for v in row]

        paths = {}
        for tid, vid, _ in self.priority.labelled():
            p = self.path_for(tid, vid)
            paths[f"{vid}-{tid}"] = {"waypoints": [list(c) for c in p.waypoints],
                                     "length": p.length}
        return {
            "schema_version": SCHEMA_VERSION,
            "scenario": self.scenario.name,
            "input_hash": self.input_hash,
            "field": self.scenario.field.to_dict(),
            "matrix": {
                "targets": list(self.matrix.target_ids),
                "vehicles": list(self.matrix.vehicle_ids),
                "raw": [finite(r) for r in self.matrix.raw],
                "normalized": [finite(r) for r in self.matrix.normalized],
            },
            "priority": [{"target": t, "vehicle": v, "value": val}
                         for t, v, val in self.priority.labelled()],
            "unassigned_vehicles": [self.matrix.vehicle_ids[c] for c in self.priority.unassigned],
            "paths": paths,
            "results": [
                {"pair": r.pair_id, "vehicle": r.vehicle, "target": r.target,
                 "mode": r.mode.value, "traveled": r.record.traveled, **r.outcome.to_dict()}
                for r in self.results
            ],
        }

    def to_json(self) -> str:
        return dumps(self.to_dict())


def _modes(modes) -> tuple:
    if isinstance(modes, str):
        modes = modes.split(",")
    out = []
    for m in modes:
        m = Mode.parse(m)
        if m not in out:
            out.append(m)
    return tuple(out)


def plan_scenario(s: Scenario) -> tuple[AssignmentMatrix, PriorityList]:
    verts = [c for _, c in s.vehicles]
    tgts = [c for _, c in s.targets]
    matrix = build_matrix(s.map, verts, tgts, s.binn, s.vehicle_ids, s.target_ids)
    return matrix, greedy_assign(matrix)


def run_experiment(s: Scenario, modes: Iterable = (Mode.BNNP, Mode.CBNNTAP),
                   planned: Optional[tuple] = None) -> RunReport:
    """Assign targets, then simulate every assigned pair in every mode.

    ``planned`` may carry a ``(matrix, priority)`` tuple from an earlier
    run on the same map to skip re-planning.
    """
    modes = _modes(modes)
    matrix, priority = planned if planned is not None else plan_scenario(s)
    report = RunReport(s, matrix, priority, modes)
    for tid, vid, _ in priority.labelled():
        p = report.path_for(tid, vid)
        for mode in modes:
            rec, outcome = follow_path(p, mode, s.field, s.map, s.sim)
            report.results.append(PairResult(vid, tid, mode, outcome, rec))
    return report


def csv_header(dims: int) -> list:
    axes = "xyz"[:dims]
    cols = ["t"] + [f"pos_{a}" for a in axes]
    for kind in ("cmd", "cur", "act"):
        cols += [f"{kind}_{a}" for a in axes]
    return cols + ["mode", "pair"]


def write_trajectories(report: RunReport, path) -> None:
    dims = report.scenario.map.dims
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(csv_header(dims))
        for res in report.results:
            rec = res.record
            for k in range(len(rec)):
                w.writerow([rec.t[k].item(),
                            *rec.position[k].tolist(),
                            *rec.commanded[k].tolist(),
                            *rec.current[k].tolist(),
                            *rec.actual[k].tolist(),
                            res.mode.value, res.pair_id])


def write_overlay(report: RunReport, path) -> None:
    """SVG of the map, planned paths and simulated trajectories (2D only)."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    from matplotlib.patches import Rectangle

    s = report.scenario
    w, h = s.map.extent
    with matplotlib.rc_context({"svg.hashsalt": "uuvplan", "svg.fonttype": "none"}):
        fig, ax = plt.subplots(figsize=(6, 6 * h / w))
        for c in sorted(s.map.obstacles):
            ax.add_patch(Rectangle(c, 1, 1, color="0.2", lw=0))
        colors = {Mode.BNNP: "tab:orange", Mode.CBNNTAP: "tab:green"}
        styles = {Mode.BNNP: "-", Mode.CBNNTAP: "--"}
        for tid, vid, _ in report.priority.labelled():
            p = np.asarray(report.path_for(tid, vid).waypoints, dtype=float) + 0.5
            ax.plot(p[:, 0], p[:, 1], color="k", lw=2.5, alpha=0.35)
        for res in report.results:
            pos = res.record.position
            ax.plot(pos[:, 0], pos[:, 1], styles[res.mode], color=colors[res.mode], lw=1.2,
                    label=f"{res.pair_id} {res.mode.value}")
            if res.outcome.status.value == "collision":
                ax.plot(*pos[-1], marker="*", color="gold", ms=12, mec="k")
        for vid, c in s.vehicles:
            ax.plot(c[0] + 0.5, c[1] + 0.5, "s", color="tab:blue")
            ax.annotate(vid, (c[0] + 0.5, c[1] + 0.9), ha="center", fontsize=8)
        for tid, c in s.targets:
            ax.plot(c[0] + 0.5, c[1] + 0.5, "s", color="tab:red")
            ax.annotate(tid, (c[0] + 0.5, c[1] + 0.9), ha="center", fontsize=8)
        ax.set_xlim(0, w)
        ax.set_ylim(0, h)
        ax.set_aspect("equal")
        ax.set_xticks(range(0, w + 1, max(1, w // 10)))
        ax.set_yticks(range(0, h + 1, max(1, h // 10)))
        ax.grid(True, lw=0.3)
        ax.set_title(f"{s.name or 'scenario'}: {s.field.variant} current")
        if report.results:
            ax.legend(fontsize=6, loc="upper left")
        fig.savefig(path, format="svg", metadata={"Date": None})
        plt.close(fig)


def emit_outputs(report: RunReport, out_dir) -> list:
    """Write trajectories.csv, report.json, scenario.json and (2D) overlay.svg."""
    out = FsPath(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    save_scenario(report.scenario, out / "scenario.json")
    written.append(out / "scenario.json")
    (out / "report.json").write_text(report.to_json())
    written.append(out / "report.json")
    if report.results:
        write_trajectories(report, out / "trajectories.csv")
        written.append(out / "trajectories.csv")
    if report.scenario.map.dims == 2:
        write_overlay(report, out / "overlay.svg")
        written.append(out / "overlay.svg")
    return written


SWEEP_DIRECTIONS = (0.0, 45.0, 90.0, 135.0)
SWEEP_SPEEDS = (0.1, 0.3, 0.5, 0.7)


def sweep_fields(directions: Sequence[float] = SWEEP_DIRECTIONS,
                 speeds: Sequence[float] = SWEEP_SPEEDS,
                 fixed_speed: float = 0.3, fixed_direction: float = 45.0,
                 full_grid: bool = False) -> list:
    """Uniform 2D currents for a sweep, as ``(label, field)`` pairs.

    By default directions vary at ``fixed_speed`` and speeds vary at
    ``fixed_direction``; ``full_grid`` takes the cross product instead.
    """
    if full_grid:
        combos = [(d, v) for d in directions for v in speeds]
    else:
        combos = [(d, fixed_speed) for d in directions] + [(fixed_direction, v) for v in speeds]
    seen, out = set(), []
    for d, v in combos:
        if (d, v) in seen:
            continue
        seen.add((d, v))
        out.append((f"dir{d:g}_speed{v:g}", Uniform(speed=v, direction_deg=d)))
    return out


def run_sweep(s: Scenario, modes=(Mode.BNNP, Mode.CBNNTAP), fields=None) -> list:
    """Run the experiment once per current field; planning is shared."""
    if fields is None:
        fields = sweep_fields()
    planned = plan_scenario(s)
    return [(label, run_experiment(s.with_field(f), modes, planned)) for label, f in fields]


def sweep_summary(runs: list) -> dict:
    rows = []
    for label, rep in runs:
        for r in rep.results:
            rows.append({"condition": label, "field": rep.scenario.field.to_dict(),
                         "pair": r.pair_id, "mode": r.mode.value,
                         "status": r.outcome.status.value, "traveled": r.record.traveled,
                         "max_cross_track": r.outcome.max_cross_track})
    return {"schema_version": SCHEMA_VERSION, "runs": rows}

import json

import pytest

from uuvplan.cli import main
from uuvplan.harness import bundled_scenario_path


def test_simulate(tmp_path):
    rc = main(["simulate", "--scenario", str(bundled_scenario_path("2d_static")),
               "--out", str(tmp_path), "--modes", "bnnp,cbnntap"])
    assert rc == 0
    assert {p.name for p in tmp_path.iterdir()} == {
        "overlay.svg", "report.json", "scenario.json", "trajectories.csv"}


def test_plan_only(tmp_path):
    rc = main(["plan", "--scenario", str(bundled_scenario_path("3d_helix")),
               "--out", str(tmp_path)])
    assert rc == 0
    report = json.loads((tmp_path / "report.json").read_text())
    assert report["results"] == []
    assert [p["vehicle"] for p in report["priority"]] == ["II", "IV", "III"]


def test_sweep(tmp_path):
    rc = main(["sweep", "--scenario", str(bundled_scenario_path("2d_static")),
               "--out", str(tmp_path), "--modes", "cbnntap"])
    assert rc == 0
    summary = json.loads((tmp_path / "sweep_summary.json").read_text())
    assert len(summary["runs"]) == 7 * 3
    assert (tmp_path / "dir45_speed0.7" / "trajectories.csv").exists()


def test_sweep_rejects_3d(tmp_path):
    assert main(["sweep", "--scenario", str(bundled_scenario_path("3d_helix")),
                 "--out", str(tmp_path)]) == 1


@pytest.mark.parametrize("mutate", [
    lambda d: d["vehicles"][0].update(cell=d["map"]["obstacles"][0]),
    lambda d: d.update(schema_version=0),
])
def test_validation_errors_exit_1(tmp_path, mutate, capsys):
    d = json.loads(bundled_scenario_path("2d_static").read_text())
    mutate(d)
    f = tmp_path / "s.json"
    f.write_text(json.dumps(d))
    assert main(["plan", "--scenario", str(f), "--out", str(tmp_path / "o")]) == 1
    assert "invalid scenario" in capsys.readouterr().err


def test_bad_mode_and_missing_file_exit_1(tmp_path):
    s = str(bundled_scenario_path("2d_static"))
    assert main(["simulate", "--scenario", s, "--out", str(tmp_path), "--modes", "pid"]) == 1
    assert main(["plan", "--scenario", str(tmp_path / "nope.json"), "--out", str(tmp_path)]) == 1


def test_unreachable_target_exits_2(tmp_path):
    d = {"schema_version": 1, "map": {"dims": 2, "extent": [6, 6],
                                      "obstacles": [[3, y] for y in range(6)]},
         "vehicles": [{"id": "I", "cell": [0, 0]}], "targets": [{"id": "A", "cell": [5, 5]}]}
    f = tmp_path / "s.json"
    f.write_text(json.dumps(d))
    assert main(["simulate", "--scenario", str(f), "--out", str(tmp_path / "o")]) == 2

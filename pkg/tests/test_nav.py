import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from uuvplan.binn import Path, plan_path
from uuvplan.currents import Uniform, Wave2D, Zero
from uuvplan.gridworld import GridMap
from uuvplan.nav import (Mode, SimConfig, Status, compensation, cross_track_error,
                         desired_velocity, follow_path, polyline_distance)

OPEN = GridMap((20, 20))
PATH_IA = plan_path(OPEN, (9, 9), (5, 8))


def test_compensation_collinear():
    np.testing.assert_allclose(compensation((1, 0), (0.3, 0)), (0.7, 0), atol=1e-15)


def test_compensation_oblique_current():
    c = 0.3 / math.sqrt(2)
    adj = compensation((1, 0), (c, c))
    np.testing.assert_allclose(adj, (1 - 0.2121, -0.2121), atol=1e-4)
    np.testing.assert_allclose(adj + (c, c), (1, 0), atol=1e-15)


def test_compensation_zero_current_3d():
    np.testing.assert_array_equal(compensation((0, 1, 0), (0, 0, 0)), (0, 1, 0))


def test_compensation_cap_and_mismatch():
    adj = compensation((1, 0), (-1, 0), cap=1.5)
    assert np.linalg.norm(adj) == pytest.approx(1.5)
    with pytest.raises(ValueError):
        compensation((1, 0), (0, 0, 0))


@pytest.mark.parametrize("pos,wp,speed,expected", [
    ((0, 0), (3, 4), 1, (0.6, 0.8)),
    ((0, 0), (1, 0), 2, (2, 0)),
    ((0, 0, 0), (0, 0, 5), 1, (0, 0, 1)),
])
def test_desired_velocity(pos, wp, speed, expected):
    np.testing.assert_allclose(desired_velocity(pos, wp, speed), expected, atol=1e-15)


def test_desired_velocity_degenerate():
    with pytest.raises(ValueError):
        desired_velocity((1, 1), (1, 1), 1.0)


def test_cross_track_examples():
    verts = np.array([[0.0, 0.0], [4.0, 0.0]])
    assert cross_track_error(np.array([[1.0, 0.0], [3.0, 0.0]]), verts) == 0
    assert cross_track_error(np.array([[2.0, 0.5]]), verts) == pytest.approx(0.5)
    assert polyline_distance([[6.0, 0.0]], verts)[0] == pytest.approx(2.0)
    assert polyline_distance([[1.0, 1.0]], [[0.0, 0.0]])[0] == pytest.approx(math.sqrt(2))


def test_sim_config_validation():
    for bad in ({"dt": 0}, {"v_d": -1}, {"arrive_eps": 0}, {"time_factor": 0.5},
                {"actuation_cap": 0}):
        with pytest.raises(ValueError):
            SimConfig(**bad)


@pytest.mark.parametrize("fld", [Zero(), Uniform(0.3, 0), Uniform(0.5, 45), Uniform(0.7, 135),
                                 Wave2D()])
def test_compensated_run_follows_plan(fld):
    rec, out = follow_path(PATH_IA, Mode.CBNNTAP, fld, OPEN)
    assert out.status is Status.REACHED
    assert out.distance == pytest.approx(4.4142, abs=2 * 0.05)
    assert out.distance == pytest.approx(PATH_IA.length, abs=1e-9)
    assert out.max_cross_track < 1e-9


def test_zero_current_modes_coincide():
    a, _ = follow_path(PATH_IA, "bnnp", Zero(), OPEN)
    b, _ = follow_path(PATH_IA, "cbnntap", Zero(), OPEN)
    np.testing.assert_allclose(a.position, b.position, rtol=0, atol=1e-12)


def test_bundled_map_baseline_fails_on_ia(static2d):
    p = plan_path(static2d.map, (9, 9), (5, 8))
    fld = Uniform(0.5, 45)
    _, base = follow_path(p, "bnnp", fld, static2d.map, static2d.sim)
    _, comp = follow_path(p, "cbnntap", fld, static2d.map, static2d.sim)
    assert base.status in (Status.COLLISION, Status.FAILED)
    assert comp.status is Status.REACHED


def test_collision_lies_in_obstacle(static2d):
    p = plan_path(static2d.map, (9, 9), (5, 8))
    rec, out = follow_path(p, "bnnp", Uniform(0.5, 45), static2d.map)
    assert out.status is Status.COLLISION
    assert static2d.map.point_blocked(out.position)
    assert any(static2d.map.point_blocked(x) for x in rec.position)


def test_record_invariants():
    rec, out = follow_path(PATH_IA, "bnnp", Wave2D(), OPEN)
    np.testing.assert_allclose(rec.actual, rec.commanded + rec.current, rtol=0, atol=1e-12)
    speeds = np.linalg.norm(rec.actual, axis=1)
    assert rec.traveled == pytest.approx(speeds.sum() * 0.02, abs=1e-9 * max(1, len(rec) / 1000))
    steps = np.linalg.norm(np.diff(rec.position, axis=0), axis=1)
    assert steps.sum() == pytest.approx(rec.traveled, abs=1e-9)
    assert np.all(np.diff(rec.t) > 0)
    assert out.max_cross_track == pytest.approx(cross_track_error(rec, PATH_IA))


def test_timeout_when_current_overpowers():
    rec, out = follow_path(PATH_IA, "bnnp", Uniform(1.5, 45), OPEN)
    assert out.status is Status.FAILED
    assert out.reason in ("timeout", "max-deviation", "out-of-bounds")


def test_strong_current_can_push_out_of_map():
    p = Path(((1, 1), (2, 1), (3, 1)))
    _, out = follow_path(p, "bnnp", Uniform(3.0, 270), GridMap((5, 5)))
    assert out.status is Status.FAILED and out.reason == "out-of-bounds"


def test_actuation_cap_saturates_and_drifts():
    cfg = SimConfig(actuation_cap=0.9)
    rec, out = follow_path(PATH_IA, "cbnntap", Uniform(0.5, 90), OPEN, cfg)
    assert out.saturated_steps > 0
    assert rec.saturated.any()
    assert out.max_cross_track > 1e-3
    assert np.linalg.norm(rec.commanded, axis=1).max() <= 0.9 + 1e-12


def test_single_waypoint_path_is_reached_immediately():
    rec, out = follow_path(Path(((3, 3),)), "bnnp", Uniform(0.3, 0), OPEN)
    assert out.status is Status.REACHED and out.distance == 0
    assert len(rec) == 1


def test_invalid_inputs():
    with pytest.raises(ValueError):
        follow_path(PATH_IA, "pid", Zero(), OPEN)
    with pytest.raises(ValueError):
        follow_path(PATH_IA, "bnnp", Zero(), GridMap((20, 20, 20)))


@pytest.mark.parametrize("direction", [0, 45, 90, 135])
def test_baseline_deviation_grows_with_speed(direction):
    p = plan_path(OPEN, (4, 17), (14, 14))
    devs = [follow_path(p, "bnnp", Uniform(v, direction), OPEN)[1].max_cross_track
            for v in (0.1, 0.3, 0.5, 0.7)]
    assert devs[0] > 0
    assert devs == sorted(devs)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_compensated_trajectory_ignores_current(seed):
    rng = np.random.default_rng(seed)
    a = tuple(int(v) for v in rng.integers(0, 20, 2))
    b = tuple(int(v) for v in rng.integers(0, 20, 2))
    p = plan_path(OPEN, a, b)
    ref, _ = follow_path(p, "cbnntap", Zero(), OPEN)
    f1 = Uniform(float(rng.uniform(0, 0.95)), float(rng.uniform(0, 360)))
    for fld in (f1, Wave2D()):
        rec, out = follow_path(p, "cbnntap", fld, OPEN)
        assert out.status is Status.REACHED
        assert rec.position.shape == ref.position.shape
        np.testing.assert_allclose(rec.position, ref.position, rtol=0, atol=1e-9)
        np.testing.assert_allclose(rec.actual[:-1], ref.actual[:-1], rtol=0, atol=1e-12)

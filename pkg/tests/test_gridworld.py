import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from oracles import dijkstra_length
from uuvplan.gridworld import GridMap, euclid, neighbors, octile_distance, step_length


def test_interior_cell_has_eight_neighbors():
    assert len(neighbors(GridMap((20, 20)), (5, 5))) == 8


def test_corner_cell_is_clipped():
    assert sorted(neighbors(GridMap((20, 20)), (0, 0))) == [(0, 1), (1, 0), (1, 1)]


def test_interior_3d_cell_has_26_neighbors():
    assert len(neighbors(GridMap((10, 10, 10)), (5, 5, 5))) == 26


def test_neighbor_order_is_lexicographic_by_offset():
    got = neighbors(GridMap((5, 5)), (2, 2))
    assert got == [(1, 1), (1, 2), (1, 3), (2, 1), (2, 3), (3, 1), (3, 2), (3, 3)]


def test_neighbors_rejects_out_of_bounds():
    with pytest.raises(ValueError):
        neighbors(GridMap((4, 4)), (4, 0))


@pytest.mark.parametrize("a,b,expected", [
    ((0, 0), (1, 0), 1.0),
    ((0, 0), (1, 1), 1.41421356),
    ((0, 0, 0), (1, 1, 1), 1.73205081),
])
def test_step_length(a, b, expected):
    assert step_length(a, b) == pytest.approx(expected, abs=1e-8)


@pytest.mark.parametrize("a,b", [((0, 0), (2, 0)), ((0, 0), (0, 0)), ((0, 0), (0, 0, 1))])
def test_step_length_rejects_non_adjacent(a, b):
    with pytest.raises(ValueError):
        step_length(a, b)


def test_euclid_examples():
    assert euclid((9, 9), (5, 8)) == pytest.approx(math.sqrt(17))
    assert euclid((6, 3, 3), (4, 4, 4)) == pytest.approx(math.sqrt(6))
    assert euclid((3, 3), (3, 3)) == 0
    with pytest.raises(ValueError):
        euclid((1, 2), (1, 2, 3))


cells3 = st.tuples(*[st.integers(0, 7)] * 3)


@given(cells3, st.data())
def test_neighbors_exclude_self_and_stay_in_bounds(c, data):
    g = GridMap((8, 8, 8))
    ns = neighbors(g, c)
    assert c not in ns
    assert all(g.in_bounds(n) for n in ns)
    n = data.draw(st.sampled_from(ns))
    assert step_length(c, n) == step_length(n, c)


def test_grid_rejects_obstacle_outside():
    with pytest.raises(ValueError):
        GridMap((3, 3), frozenset({(3, 0)}))
    with pytest.raises(ValueError):
        GridMap((3,))


def test_point_to_cell_floors_boundaries_down():
    g = GridMap((4, 4), frozenset({(1, 1)}))
    assert g.cell_of((1.0, 1.0)) == (1, 1)
    assert g.cell_of((0.999, 1.5)) == (0, 1)
    assert g.point_blocked((1.5, 1.0))
    assert not g.point_blocked((2.0, 1.5))


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 3), st.data())
def test_octile_matches_dijkstra_on_empty_map(dims, data):
    ext = (9,) * dims
    g = GridMap(ext)
    cell = st.tuples(*[st.integers(0, 8)] * dims)
    a, b = data.draw(cell), data.draw(cell)
    assert octile_distance(a, b) == pytest.approx(dijkstra_length(g, a, b), abs=1e-9)

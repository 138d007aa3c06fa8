# # Planning a path with the neural activity grid
#
# Every cell of the map is a neuron. The vehicle looks at its neighbours,
# computes the activity each would receive, and steps to the strongest one.
# Unsearched cells are attractive, searched cells are neutral, obstacles
# are repulsive.

# %%
import numpy as np

from uuvplan import GridMap, BinnParams, plan_path, iter_plan

gmap = GridMap((20, 20))
path = plan_path(gmap, (9, 9), (5, 8))
print(path.waypoints)
print("length %.4f m" % path.length)  # 3 + sqrt(2)

# %% [markdown]
# Watching the planner step by step. Each yield is the current cell plus the
# activity field after the update.

# %%
for cell, field in iter_plan(gmap, (9, 9), (5, 8)):
    print(cell, "searched:", field.n_searched, "peak activity: %.3f" % field.activity.max())

# %% [markdown]
# Obstacles. A wall with a single gap forces a detour.

# %%
wall = frozenset((10, y) for y in range(20) if y != 3)
walled = GridMap((20, 20), wall)
detour = plan_path(walled, (2, 15), (17, 15))
print(len(detour), "waypoints, %.3f m" % detour.length)

grid = np.full(walled.extent, ".")
grid[walled.occupancy] = "#"
for c in detour.waypoints:
    grid[c] = "o"
print("\n".join("".join(row) for row in grid.T[::-1]))

# %% [markdown]
# Reading the exponent as exp(-(|i-T| + |i-j|)) penalises step length too,
# which tilts the choice toward diagonal hops.

# %%
literal = plan_path(gmap, (9, 9), (5, 8), BinnParams(literal_exponent=True))
print(literal.waypoints, "%.4f" % literal.length)

# 3D works the same way with 26 neighbours
cube = GridMap((10, 10, 10))
print("%.4f" % plan_path(cube, (6, 3, 3), (4, 4, 4)).length)   # 1 + sqrt(3)
print("%.4f" % plan_path(cube, (2, 1, 1), (5, 8, 1)).length)   # 4 + 3 sqrt(2)

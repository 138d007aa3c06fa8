# # Greedy target assignment
#
# Rows are targets and columns are vehicles. The matrix holds planned path
# lengths divided by the largest one. The greedy rule keeps taking the
# smallest remaining entry.

# %%
import numpy as np

from uuvplan import AssignmentMatrix, greedy_assign, build_matrix, bundled_scenario

table = np.array([[0.1451, 0.1987, 0.3261, 0.3788],
                  [0.5730, 0.6335, 0.8135, 1.0],
                  [0.2547, 0.5994, 0.7453, 0.4611]])
m = AssignmentMatrix.from_raw(table, ("A", "B", "C"), ("I", "II", "III", "IV"))
pl = greedy_assign(m)
for t, v, val in pl.labelled():
    print(f"{t} <- {v}  {val:.4f}")
print("total %.4f, entries inspected %d" % (pl.total, pl.inspections))

# %% [markdown]
# Greedy is not always optimal. Brute force over the 24 injective
# assignments finds a cheaper total on this matrix.

# %%
from itertools import permutations

best = min(permutations(range(4), 3), key=lambda cols: table[range(3), cols].sum())
print("optimal columns", best, "total %.4f" % table[range(3), best].sum())

# %% [markdown]
# Building the matrix from a scenario plans every vehicle/target pair.

# %%
s = bundled_scenario("2d_static")
mat = build_matrix(s.map, [c for _, c in s.vehicles], [c for _, c in s.targets],
                   s.binn, s.vehicle_ids, s.target_ids)
np.set_printoptions(precision=4, suppress=True)
print(mat.normalized)
print(greedy_assign(mat).labelled())

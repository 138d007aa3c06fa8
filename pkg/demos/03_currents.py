# # Current fields
#
# Uniform currents are constant vectors. The wave field follows the curves
# x = 5 sin(0.1 y) + b and the helix field follows
# (10 sin(0.1 z) + g, 10 cos(0.1 z) + h, z). Speed grows with height.

# %%
import numpy as np
import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt

from uuvplan import Uniform, Wave2D, Helix3D

print(Uniform(0.3, 45).sample((0.0, 0.0)))
print(Uniform(0.3, 45, elevation_deg=30).sample((0.0, 0.0, 0.0)))

wave = Wave2D()
for y in (0, 5, 10, 19):
    v = wave.sample((3.0, y))
    print(y, v.round(4), "|v| = %.3f" % np.linalg.norm(v))

helix = Helix3D()
print(helix.sample((1.0, 1.0, 4.0)).round(4))

# %%
xs, ys = np.meshgrid(np.arange(0, 20, 1.0), np.arange(0, 20, 1.0))
uv = np.array([wave.sample((x, y)) for x, y in zip(xs.ravel(), ys.ravel())])
fig, ax = plt.subplots(figsize=(5, 5))
ax.quiver(xs, ys, uv[:, 0].reshape(xs.shape), uv[:, 1].reshape(xs.shape))
ax.set_title("wave current")
fig.savefig("wave_current.png", dpi=80)
print("wrote wave_current.png")

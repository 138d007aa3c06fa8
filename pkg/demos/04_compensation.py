# # Tracking a planned path in a current
#
# Without compensation the vehicle commands the desired velocity and the
# current is simply added on top. With compensation it commands
# v_d - v_cur, so the two cancel.

# %%
from uuvplan import (GridMap, plan_path, follow_path, SimConfig, Uniform, Zero,
                     cross_track_error)

gmap = GridMap((20, 20))
path = plan_path(gmap, (9, 9), (5, 8))
current = Uniform(0.3, 45)

for mode in ("bnnp", "cbnntap"):
    rec, out = follow_path(path, mode, current, gmap)
    print(f"{mode:8s} {out.status.value:9s} traveled {rec.traveled:.4f} m, "
          f"cross-track {cross_track_error(rec, path):.4f} m")

rec0, _ = follow_path(path, "bnnp", Zero(), gmap)
print("still water %.4f m" % rec0.traveled)

# %% [markdown]
# With an actuation cap the adjustment velocity saturates once the current
# is strong enough, and tracking degrades again.

# %%
cfg = SimConfig(actuation_cap=1.2)
for speed in (0.1, 0.3, 0.7):
    rec, out = follow_path(path, "cbnntap", Uniform(speed, 0), gmap, cfg)
    print(speed, out.status.value, out.saturated_steps, "saturated steps",
          "%.4f" % out.max_cross_track)

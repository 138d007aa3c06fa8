# # Full experiment and sweep on the bundled 2D scenario

# %%
from pathlib import Path

from uuvplan import bundled_scenario, run_experiment, emit_outputs
from uuvplan.harness import run_sweep, sweep_fields

s = bundled_scenario("2d_static")
report = run_experiment(s)
for t, v, val in report.priority.labelled():
    print(f"{v} -> {t} ({val:.4f})")
for r in report.results:
    o = r.outcome
    print(f"{r.pair_id:5s} {r.mode.value:8s} {o.status.value:9s} "
          f"{r.record.traveled:8.4f} m  max dev {o.max_cross_track:.3f}")

out = Path("demo_out")
print([p.name for p in emit_outputs(report, out)])

# %% [markdown]
# Sweep speed at a fixed 45 degree heading. Only the uncompensated runs
# change.

# %%
fields = sweep_fields(directions=(45.0,), full_grid=True)
for label, rep in run_sweep(s, fields=fields):
    row = [f"{r.pair_id}:{r.outcome.status.value[0].upper()}"
           for r in rep.results if r.mode.value == "bnnp"]
    print(label, " ".join(row))

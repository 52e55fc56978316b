"""
How often is the bound sharp?
=============================

Run the bound against the exact depth for every connected graph on at most
six vertices and tabulate the gap depth - bound by power.
"""
import numpy as np

from edgedepth.explore import RunConfig, run_sweep, summarize

records = run_sweep(RunConfig(min_n=2, max_n=6, powers=(1, 2, 3)))
print(summarize(records).to_text())

###############################################################################
# Gap histogram per power. A gap of 0 is a sharp instance; a negative gap
# would be a bug and never shows up.
t = np.array([r["t"] for r in records])
gap = np.array([r["oracle_depth"] - r["combined"] for r in records])
for k in (1, 2, 3):
    values, counts = np.unique(gap[t == k], return_counts=True)
    print(f"t={k}:", dict(zip(values.tolist(), counts.tolist())))

###############################################################################
# The five instances where the bound is furthest from the true depth.
worst = sorted(records, key=lambda r: r["combined"] - r["oracle_depth"])[:5]
for r in worst:
    print(r["canonical_key"], "t", r["t"], "depth", r["oracle_depth"], "bound", r["combined"])

"""
Watts-Strogatz and Holme-Kim sweeps
===================================

Average absolute index and per-generation STOC count over all start nodes
and replicates, for each rewiring probability p and triad probability q.
The defaults reproduce the full protocol (N = 3000, 11 parameter values,
10 replicates); set ``QUICK = False`` for a run of a few seconds.
"""

import matplotlib.pyplot as plt

from stocnet import SweepConfig, emit_csv, run_sweep, summarize

QUICK = False
kw = {"n": 600, "replicates": 2} if QUICK else {}

fig, axes = plt.subplots(2, 2, figsize=(10, 7))
for col, model in enumerate(("ws", "hk")):
    result = run_sweep(SweepConfig(model, **kw))
    emit_csv(result, f"sweep_{model}.csv")
    for p in result.parameters:
        axes[0, col].plot(result.series(p, "n_abs_mean"), label=f"{p:.3g}")
        axes[1, col].plot(result.series(p, "stoc_mean"))
    axes[0, col].set_title(f"{model}: absolute index")
    axes[1, col].set_title(f"{model}: STOCs per generation")
    axes[1, col].set_xlabel("generation")
    axes[0, col].legend(fontsize=6)
    for s in summarize(result):
        print(f"{model} {s.parameter:<8.4g} N peak at {s.n_peak_generation} ({s.n_peak_value:.0f}), "
              f"STOC peak at {s.stoc_peak_generation}, total STOCs {s.euler_total_mean:.0f}")

fig.tight_layout()
fig.savefig("sweeps.png", dpi=120)

"""
Total STOC count and the extended Euler formula
===============================================

Summing STOCs over every generation (including the dummy generation after
the last one) gives 1 + edges - nodes for any connected graph, planar or
not, and from every start node.
"""

import numpy as np

from stocnet import census, decompose, euler_total, generators

graphs = {
    "K5 (non-planar)": generators.erdos_renyi(5, 10, seed=0),
    "WS(500, 6, 0.2)": generators.watts_strogatz(500, 6, 0.2, seed=1),
    "HK(500, 3, 0.8)": generators.holme_kim(500, 3, 0.8, seed=1),
}
rng = np.random.default_rng(0)
for name, g in graphs.items():
    starts = rng.choice(g.node_count, size=4, replace=False).tolist()
    totals = [census(g, decompose(g, s)).total for s in starts]
    print(f"{name:16s} STOC totals from starts {list(starts)}: {totals}; 1+E-N = {euler_total(g, 0)}")

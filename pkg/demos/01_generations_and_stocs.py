"""
Generations, primary edges and STOCs on a six-node graph
========================================================

Pick a start node, split the graph into BFS generations, and count the
cycles that carry exactly one secondary edge.
"""

from stocnet import build_graph, census, decompose, local_absolute_index, local_relative_index

# nodes v1..v6 are ids 0..5
g = build_graph([(0, 1), (0, 2), (0, 3), (2, 3), (1, 5), (2, 5), (3, 4), (4, 5)])
d = decompose(g, start=0)

print("levels:", [[v + 1 for v in level] for level in d.level_sets])
for (u, v), gen, cls in zip(g.edges, d.edge_gen, d.edge_class):
    print(f"  v{u + 1}-v{v + 1}: edge generation {gen}, {cls}")

# absolute index: nodes first reached at each hop
print("N_M:", local_absolute_index(d).values.tolist())
print("R_M:", local_relative_index(d).values.tolist())

c = census(g, d)
for m in range(len(c.per_gen_total)):
    print(f"generation {m}: STOC sizes {c.row(m)}")
print("total STOCs:", c.total, "= 1 + edges - nodes =", 1 + g.edge_count - g.node_count)

"""
The index/STOC recursion on lattices
====================================

The number of nodes in generation M follows from the degrees of the
previous generation and the STOC counts.  On a k-regular graph it also has
a closed form in the STOC counts alone.  Both are exact, so every residual
below is an integer zero.
"""

from stocnet import census, closed_form_index, decompose, generators, local_absolute_index, residual_report

lattices = {
    "ring(10)": generators.ring(10),
    "extended_ring(20, 2)": generators.extended_ring(20, 2),
    "triangular 6x6": generators.triangular_lattice(6, 6),
    "square 6x6": generators.square_lattice(6, 6),
    "torus 10x10": generators.square_lattice(10, 10, torus=True),
}

for name, g in lattices.items():
    worst = max(residual_report(g, decompose(g, s)).max_abs_residual for s in range(g.node_count))
    print(f"{name:22s} worst recursion residual over all starts: {worst}")

# closed form on the torus, from one start
g = lattices["torus 10x10"]
d = decompose(g, 0)
c = census(g, d)
print("BFS levels :", local_absolute_index(d).values[1:].tolist())
print("closed form:", [closed_form_index(4, c, m) for m in range(1, d.last_gen + 1)])

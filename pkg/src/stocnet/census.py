"""STOC census: cycles that contain exactly one secondary edge.

Each secondary edge closes exactly one cycle with the primary spanning
tree, its fundamental cycle.  For a secondary edge ``(u, w)`` with lowest
common tree ancestor ``a`` the cycle has
``gen(u) + gen(w) - 2 gen(a) + 1`` nodes, and its generation is the edge
generation of ``(u, w)``.  An edge inside one generation closes an odd
cycle; an extra parent edge closes an even one.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .decomposition import UNREACHED, GenerationDecomposition
from .errors import MismatchedInputs
from .graph import Graph, connected_component

__all__ = [
    "StocCensus",
    "census",
    "euler_total",
    "cumulative_stoc",
    "stoc_per_generation_by_difference",
]


@dataclass(frozen=True, eq=False)
class StocCensus:
    """Counts of generation-M STOCs with j nodes for one decomposition.

    ``per_gen_total`` and ``cumulative`` are indexed by generation
    ``0 .. L + 1``; generation ``L + 1`` holds the edges inside the last
    generation.
    """

    decomposition: GenerationDecomposition
    counts: dict[tuple[int, int], int]
    per_gen_total: tuple[int, ...]
    cumulative: tuple[int, ...]

    @property
    def total(self) -> int:
        return self.cumulative[-1]

    def count(self, generation: int, size: int) -> int:
        return self.counts.get((generation, size), 0)

    def row(self, generation: int) -> dict[int, int]:
        """``{j: C[generation][j]}`` for the nonzero entries."""
        return {j: c for (m, j), c in sorted(self.counts.items()) if m == generation}

    def vector(self, generation: int) -> list[int]:
        """Counts for ``j = 3 .. 2*generation`` (empty below generation 2)."""
        return [self.count(generation, j) for j in range(3, 2 * generation + 1)]

    def odd(self, generation: int) -> int:
        return sum(c for (m, j), c in self.counts.items() if m == generation and j % 2)

    def even(self, generation: int) -> int:
        return sum(c for (m, j), c in self.counts.items() if m == generation and not j % 2)


def _check_pair(g: Graph, d: GenerationDecomposition):
    if d.graph is not g and d.graph != g:
        raise MismatchedInputs("decomposition was computed from a different graph")


def census(g: Graph, d: GenerationDecomposition) -> StocCensus:
    _check_pair(g, d)
    gen = d.node_gen
    parent = d.parent
    counts: Counter[tuple[int, int]] = Counter()
    per_gen = [0] * (d.last_gen + 2)
    for u, w, m in d.secondary_edges():
        a, b = (u, w) if gen[u] >= gen[w] else (w, u)
        while gen[a] > gen[b]:
            a = parent[a]
        while a != b:
            a, b = parent[a], parent[b]
        size = gen[u] + gen[w] - 2 * gen[a] + 1
        if (size % 2 == 1) != (gen[u] == gen[w]):
            raise AssertionError(f"parity violated on edge ({u}, {w})")
        counts[m, size] += 1
        per_gen[m] += 1
    running = 0
    cumulative = []
    for c in per_gen:
        running += c
        cumulative.append(running)
    return StocCensus(d, dict(counts), tuple(per_gen), tuple(cumulative))


def euler_total(g: Graph, component_of: int) -> int:
    """``1 + edges - nodes`` over the component containing ``component_of``."""
    nodes = connected_component(g, component_of)
    edges = sum(g.degree(v) for v in nodes) // 2
    return 1 + edges - len(nodes)


def cumulative_stoc(c: StocCensus, generation: int) -> int:
    """Number of STOCs of generation ``<= generation``."""
    if generation < 0:
        return 0
    return c.cumulative[min(generation, len(c.cumulative) - 1)]


def stoc_per_generation_by_difference(g: Graph, d: GenerationDecomposition) -> list[int]:
    """Per-generation STOC counts from differences of ``1 + edges - nodes``.

    The cumulative value at generation M counts nodes of generation ``<= M``
    and edges of edge generation ``<= M``; no cycle is enumerated.
    """
    _check_pair(g, d)
    size = d.last_gen + 2
    nodes = [len(level) for level in d.level_sets] + [0]
    edges = [0] * size
    for m in d.edge_gen:
        if m != UNREACHED:
            edges[m] += 1
    out = []
    prev = 0
    n_sum = e_sum = 0
    for m in range(size):
        n_sum += nodes[m]
        e_sum += edges[m]
        cum = 1 + e_sum - n_sum
        out.append(cum - prev)
        prev = cum
    return out

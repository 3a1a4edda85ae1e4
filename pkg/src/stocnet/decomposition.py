"""Generation decomposition of a graph seen from one start node.

Node generation is the BFS hop distance from the start.  An edge whose
endpoints sit at generations ``g`` and ``g`` or ``g + 1`` belongs to edge
generation ``g + 1``.  Every non-start node owns exactly one primary edge to
a parent in the previous generation; all other edges (extra parent edges and
every edge inside one generation) are secondary.  Primary edges form a BFS
spanning tree of the start node's component.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

from .errors import IdOutOfRange
from .graph import Graph

__all__ = ["UNREACHED", "GenerationDecomposition", "decompose", "eccentricity"]

UNREACHED = -1
PRIMARY = "primary"
SECONDARY = "secondary"


@dataclass(frozen=True, eq=False)
class GenerationDecomposition:
    """BFS generations and primary/secondary edge classes for one start node.

    ``node_gen``, ``parent`` are indexed by node id, ``edge_gen`` and
    ``edge_class`` by position in ``graph.edges``.  Unreachable nodes and
    their edges carry ``UNREACHED`` / ``None``.
    """

    graph: Graph
    start: int
    node_gen: tuple[int, ...]
    parent: tuple[int | None, ...]
    edge_gen: tuple[int, ...]
    edge_class: tuple[str | None, ...]
    level_sets: tuple[tuple[int, ...], ...]

    @property
    def last_gen(self) -> int:
        return len(self.level_sets) - 1

    @property
    def reachable_count(self) -> int:
        return sum(len(level) for level in self.level_sets)

    def secondary_edges(self):
        """Yield ``(u, v, edge_gen)`` for every secondary edge."""
        for (u, v), gen, cls in zip(self.graph.edges, self.edge_gen, self.edge_class):
            if cls == SECONDARY:
                yield u, v, gen

    def primary_edges(self):
        for (u, v), cls in zip(self.graph.edges, self.edge_class):
            if cls == PRIMARY:
                yield u, v


def decompose(g: Graph, start: int, tie_break_seed: int | None = None) -> GenerationDecomposition:
    """Decompose ``g`` into generations as seen from ``start``.

    The primary parent of a node is its smallest-id neighbor in the previous
    generation, unless ``tie_break_seed`` is given, in which case it is drawn
    uniformly from those neighbors with a generator seeded by it.
    """
    if not 0 <= start < g.node_count:
        raise IdOutOfRange(f"start {start} not in graph with {g.node_count} nodes")
    adj = g.adjacency
    gen = [UNREACHED] * g.node_count
    gen[start] = 0
    levels: list[list[int]] = [[start]]
    queue = deque([start])
    while queue:
        u = queue.popleft()
        du = gen[u] + 1
        for w in adj[u]:
            if gen[w] == UNREACHED:
                gen[w] = du
                if du == len(levels):
                    levels.append([])
                levels[du].append(w)
                queue.append(w)

    rng = None if tie_break_seed is None else np.random.default_rng(tie_break_seed)
    parent: list[int | None] = [None] * g.node_count
    for level in levels[1:]:
        for v in level:
            want = gen[v] - 1
            if rng is None:
                parent[v] = next(u for u in adj[v] if gen[u] == want)
            else:
                options = [u for u in adj[v] if gen[u] == want]
                parent[v] = options[int(rng.integers(len(options)))]

    edge_gen = []
    edge_class = []
    for u, v in g.edges:
        gu, gv = gen[u], gen[v]
        if gu == UNREACHED:
            edge_gen.append(UNREACHED)
            edge_class.append(None)
            continue
        edge_gen.append(min(gu, gv) + 1)
        edge_class.append(PRIMARY if parent[v] == u or parent[u] == v else SECONDARY)

    return GenerationDecomposition(
        graph=g,
        start=start,
        node_gen=tuple(gen),
        parent=tuple(parent),
        edge_gen=tuple(edge_gen),
        edge_class=tuple(edge_class),
        level_sets=tuple(tuple(level) for level in levels),
    )


def eccentricity(d: GenerationDecomposition) -> int:
    """Largest generation holding at least one node (``L``)."""
    return d.last_gen

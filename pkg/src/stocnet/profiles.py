"""Per-start generation profiles for many start nodes at once.

For each start node this computes how many nodes sit in each generation
and how many edges belong to each edge generation.  Those two tables are
all the averaged indices and the difference-method STOC counts need, so
large sweeps never build per-start decomposition objects.
"""

from __future__ import annotations

from dataclasses import dataclass

import numba
import numpy as np

from .graph import Graph

__all__ = ["GenerationProfiles", "generation_profiles"]


@numba.njit(cache=True)
def _profiles(indptr, indices, eu, ev, starts, n):
    s_count = starts.shape[0]
    width = n + 2
    node_counts = np.zeros((s_count, width), np.int32)
    edge_counts = np.zeros((s_count, width), np.int32)
    dist = np.empty(n, np.int32)
    queue = np.empty(n, np.int32)
    top = 0
    for row in range(s_count):
        s = starts[row]
        dist[:] = -1
        dist[s] = 0
        queue[0] = s
        head = 0
        tail = 1
        while head < tail:
            u = queue[head]
            head += 1
            du = dist[u] + 1
            for e in range(indptr[u], indptr[u + 1]):
                w = indices[e]
                if dist[w] < 0:
                    dist[w] = du
                    queue[tail] = w
                    tail += 1
        last = dist[queue[tail - 1]]
        for i in range(tail):
            node_counts[row, dist[queue[i]]] += 1
        for e in range(eu.shape[0]):
            a = dist[eu[e]]
            if a >= 0:
                b = dist[ev[e]]
                edge_counts[row, min(a, b) + 1] += 1
        if last + 2 > top:
            top = last + 2
    return node_counts[:, :top], edge_counts[:, :top]


@dataclass(frozen=True)
class GenerationProfiles:
    """Generation tables for a set of start nodes.

    ``node_counts[i, M]`` is the number of generation-M nodes seen from
    ``starts[i]``; ``edge_counts[i, M]`` the number of edges of edge
    generation M.  Columns run over ``0 .. max(L) + 1`` and are zero past a
    start's own last generation.
    """

    starts: np.ndarray
    node_counts: np.ndarray
    edge_counts: np.ndarray

    @property
    def stoc_counts(self) -> np.ndarray:
        """Per-generation STOC counts by differences of ``1 + edges - nodes``."""
        out = self.edge_counts.astype(np.int64) - self.node_counts
        out[:, 0] = 0
        return out

    @property
    def last_gen(self) -> np.ndarray:
        """Eccentricity of each start."""
        nz = self.node_counts > 0
        return nz.shape[1] - 1 - np.argmax(nz[:, ::-1], axis=1)


def generation_profiles(g: Graph, starts=None) -> GenerationProfiles:
    """Profiles for ``starts`` (all nodes by default), in the order given."""
    if starts is None:
        starts = np.arange(g.node_count, dtype=np.int32)
    starts = np.asarray(starts, dtype=np.int32)
    indptr, indices = g.csr
    edges = g.edge_array
    nodes, edge_counts = _profiles(
        indptr, indices, edges[:, 0].copy(), edges[:, 1].copy(), starts, np.int32(g.node_count)
    )
    return GenerationProfiles(starts, nodes, edge_counts)

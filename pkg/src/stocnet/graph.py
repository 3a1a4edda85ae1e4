"""Undirected simple graphs with contiguous integer node ids.

A :class:`Graph` is immutable once built.  Neighbor lists are sorted
ascending so every traversal over the graph is deterministic.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, TextIO

import numpy as np

from .errors import DuplicateEdge, GraphError, IdOutOfRange, ParseError, SelfLoop

__all__ = [
    "Graph",
    "build_graph",
    "load_edge_list",
    "write_edge_list",
    "connected_component",
]


@dataclass(frozen=True, eq=False)
class Graph:
    """Undirected simple graph.

    Attributes
    ----------
    node_count : int
        Nodes are ``0 .. node_count - 1``.
    edges : tuple of (int, int)
        Each edge once, as ``(u, v)`` with ``u < v``, sorted lexicographically.
    adjacency : tuple of tuple of int
        Sorted neighbor ids per node.
    labels : tuple of int, optional
        Original label of each node when the graph was loaded from a file.
    """

    node_count: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[tuple[int, ...], ...] = field(repr=False)
    labels: tuple[int, ...] | None = field(default=None, repr=False)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @cached_property
    def degrees(self) -> np.ndarray:
        return np.fromiter((len(a) for a in self.adjacency), dtype=np.int64, count=self.node_count)

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        return {e: i for i, e in enumerate(self.edges)}

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self.edge_index

    @cached_property
    def edge_array(self) -> np.ndarray:
        """``(edge_count, 2)`` int32 array of the edge tuples."""
        return np.array(self.edges, dtype=np.int32).reshape(-1, 2)

    @cached_property
    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        """``(indptr, indices)`` of the symmetric adjacency in CSR layout."""
        indptr = np.zeros(self.node_count + 1, dtype=np.int32)
        np.cumsum(self.degrees, out=indptr[1:])
        indices = np.fromiter(
            (w for nbrs in self.adjacency for w in nbrs), dtype=np.int32, count=int(indptr[-1])
        )
        return indptr, indices

    def label(self, v: int) -> int:
        return v if self.labels is None else self.labels[v]

    def is_regular(self) -> bool:
        return self.node_count == 0 or bool(np.all(self.degrees == self.degrees[0]))

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.node_count == other.node_count and self.edges == other.edges

    def __hash__(self):
        return hash((self.node_count, self.edges))


def _from_validated(node_count, edge_set, labels=None) -> Graph:
    adj: list[list[int]] = [[] for _ in range(node_count)]
    for u, v in edge_set:
        adj[u].append(v)
        adj[v].append(u)
    g = Graph(
        node_count=node_count,
        edges=tuple(sorted(edge_set)),
        adjacency=tuple(tuple(sorted(a)) for a in adj),
        labels=labels,
    )
    assert sum(len(a) for a in g.adjacency) == 2 * g.edge_count
    return g


def build_graph(edge_pairs: Iterable[tuple[int, int]], node_count: int | None = None) -> Graph:
    """Validate ``edge_pairs`` and build a :class:`Graph`.

    Without ``node_count`` the node set is ``0 .. max id`` and every one of
    those ids must appear in some edge.

    Raises
    ------
    SelfLoop, DuplicateEdge, IdOutOfRange
        With the index of the offending pair in the message.
    """
    seen: set[tuple[int, int]] = set()
    max_id = -1
    for i, (u, v) in enumerate(edge_pairs):
        u, v = int(u), int(v)
        if u < 0 or v < 0:
            raise IdOutOfRange(f"pair {i} ({u}, {v}): negative node id")
        if node_count is not None and (u >= node_count or v >= node_count):
            raise IdOutOfRange(f"pair {i} ({u}, {v}): id >= node_count={node_count}")
        if u == v:
            raise SelfLoop(f"pair {i} ({u}, {v}): self-loop")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise DuplicateEdge(f"pair {i} ({u}, {v}): duplicate edge")
        seen.add(key)
        max_id = max(max_id, key[1])

    if node_count is None:
        node_count = max_id + 1
        touched = {x for e in seen for x in e}
        if len(touched) != node_count:
            missing = min(set(range(node_count)) - touched)
            raise GraphError(f"node {missing} has no edges; pass node_count to allow isolated nodes")
    return _from_validated(node_count, seen)


def load_edge_list(stream: TextIO) -> Graph:
    """Read a whitespace-separated edge list.

    Labels are remapped to contiguous ids in order of first appearance;
    the original labels are kept in ``Graph.labels``.
    """
    mapping: dict[int, int] = {}
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(stream, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected 2 fields, got {len(parts)}", line=lineno)
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"non-integer label in {line!r}", line=lineno) from None
        if a < 0 or b < 0:
            raise ParseError(f"negative label in {line!r}", line=lineno)
        if a == b:
            raise SelfLoop(f"line {lineno}: self-loop on label {a}")
        u = mapping.setdefault(a, len(mapping))
        v = mapping.setdefault(b, len(mapping))
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise DuplicateEdge(f"line {lineno}: duplicate edge {a} {b}")
        seen.add(key)
    labels = tuple(mapping)
    return _from_validated(len(labels), seen, labels=labels)


def write_edge_list(g: Graph, stream: TextIO) -> None:
    """Write ``g`` in the format read by :func:`load_edge_list`, using original labels."""
    stream.write(f"# nodes={g.node_count} edges={g.edge_count}\n")
    for u, v in g.edges:
        stream.write(f"{g.label(u)} {g.label(v)}\n")


def connected_component(g: Graph, v: int) -> set[int]:
    if not 0 <= v < g.node_count:
        raise IdOutOfRange(f"node {v} not in graph with {g.node_count} nodes")
    seen = {v}
    queue = deque([v])
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return seen

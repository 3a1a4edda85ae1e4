"""Absolute and relative propagation indices.

The local absolute index of generation M is the number of nodes first
reached at hop M from a start node.  The local relative index is the ratio
of consecutive absolute indices.  Averaged versions take the mean over start
nodes; absolute averages count generations past a start's eccentricity as 0,
relative averages skip starts for which the ratio is undefined.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .decomposition import GenerationDecomposition
from .errors import EmptySample, IdOutOfRange
from .graph import Graph
from .profiles import generation_profiles

__all__ = [
    "IndexSeries",
    "select_starts",
    "local_absolute_index",
    "local_relative_index",
    "absolute_index",
    "relative_index",
    "relative_from_counts",
]


@dataclass(frozen=True, eq=False)
class IndexSeries:
    kind: str  # "absolute" | "relative"
    scope: str  # "local" | "averaged"
    values: np.ndarray
    start: int | None = None
    support_counts: np.ndarray | None = field(default=None, repr=False)
    dispersion: np.ndarray | None = field(default=None, repr=False)

    def __len__(self):
        return len(self.values)

    def __getitem__(self, generation):
        return self.values[generation]


def local_absolute_index(d: GenerationDecomposition) -> IndexSeries:
    values = np.array([len(level) for level in d.level_sets], dtype=np.int64)
    return IndexSeries("absolute", "local", values, start=d.start)


def local_relative_index(d: GenerationDecomposition) -> IndexSeries:
    n = local_absolute_index(d).values
    return IndexSeries("relative", "local", n[1:] / n[:-1], start=d.start)


def select_starts(g: Graph, starts: Sequence[int] | None = None, sample_size: int | None = None,
                  seed: int = 0) -> np.ndarray:
    """Resolve a start-node selection to a sorted id array.

    Explicit ``starts`` win; otherwise a seeded uniform sample without
    replacement of ``sample_size`` nodes; otherwise every node.
    """
    if starts is not None:
        chosen = np.asarray(sorted(set(int(s) for s in starts)), dtype=np.int32)
        if chosen.size and (chosen[0] < 0 or chosen[-1] >= g.node_count):
            raise IdOutOfRange("start node outside the graph")
    elif sample_size is not None:
        if sample_size > g.node_count:
            raise EmptySample(f"sample of {sample_size} from {g.node_count} nodes")
        rng = np.random.default_rng(seed)
        chosen = np.sort(rng.choice(g.node_count, size=sample_size, replace=False)).astype(np.int32)
    else:
        chosen = np.arange(g.node_count, dtype=np.int32)
    if chosen.size == 0:
        raise EmptySample("no start nodes selected")
    return chosen


def relative_from_counts(node_counts: np.ndarray):
    """Mean, std and support of per-start ratios ``N[M+1] / N[M]``.

    ``node_counts`` has one row per start.  A start contributes to
    generation M only when it reaches generation ``M + 1``.
    """
    counts = node_counts.astype(float)
    width = counts.shape[1]
    if width < 2:
        empty = np.zeros(0)
        return empty, empty, np.zeros(0, dtype=np.int64)
    num, den = counts[:, 1:], counts[:, :-1]
    defined = num > 0
    ratios = np.where(defined, num / np.where(den > 0, den, 1.0), 0.0)
    support = defined.sum(axis=0)
    with np.errstate(invalid="ignore", divide="ignore"):
        mean = ratios.sum(axis=0) / support
        var = (np.where(defined, ratios - mean, 0.0) ** 2).sum(axis=0) / support
    return mean, np.sqrt(var), support


def absolute_index(g: Graph, starts: Sequence[int] | None = None, sample_size: int | None = None,
                   seed: int = 0) -> IndexSeries:
    """Average local absolute index over the selected starts (all by default)."""
    chosen = select_starts(g, starts, sample_size, seed)
    prof = generation_profiles(g, chosen)
    counts = prof.node_counts[:, : int(prof.last_gen.max()) + 1].astype(float)
    return IndexSeries(
        "absolute",
        "averaged",
        counts.mean(axis=0),
        support_counts=(counts > 0).sum(axis=0),
        dispersion=counts.std(axis=0),
    )


def relative_index(g: Graph, starts: Sequence[int] | None = None, sample_size: int | None = None,
                   seed: int = 0) -> IndexSeries:
    """Average local relative index; generation M averages only starts that reach M + 1."""
    chosen = select_starts(g, starts, sample_size, seed)
    prof = generation_profiles(g, chosen)
    counts = prof.node_counts[:, : int(prof.last_gen.max()) + 1]
    mean, std, support = relative_from_counts(counts)
    return IndexSeries("relative", "averaged", mean, support_counts=support, dispersion=std)

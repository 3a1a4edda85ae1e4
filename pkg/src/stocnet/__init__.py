"""Propagation indices and STOC census for undirected networks.

Seen from a start node, a graph splits into BFS generations.  The absolute
index counts the nodes first reached at each hop; a STOC is a cycle that
contains exactly one secondary (non-BFS-tree) edge.  This package computes
both, checks the exact relations between them, and runs Watts-Strogatz and
Holme-Kim parameter sweeps.
"""

from .census import StocCensus, census, cumulative_stoc, euler_total, stoc_per_generation_by_difference
from .decomposition import GenerationDecomposition, decompose, eccentricity
from .generators import (
    barabasi_albert,
    erdos_renyi,
    extended_ring,
    holme_kim,
    ring,
    square_lattice,
    triangular_lattice,
    watts_strogatz,
)
from .graph import Graph, build_graph, connected_component, load_edge_list, write_edge_list
from .harness import SweepConfig, SweepResult, emit_csv, read_csv, run_sweep, summarize
from .indices import IndexSeries, absolute_index, local_absolute_index, local_relative_index, relative_index
from .profiles import generation_profiles
from .verification import (
    closed_form_index,
    iterated_regular_index,
    recursion_residual,
    residual_report,
    tie_break_invariance_check,
)

__version__ = "0.1.0"

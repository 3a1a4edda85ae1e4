"""Exact checks of the relations between absolute indices and STOC counts.

For a start node and generation ``M >= 2``::

    N_M = sum over generation-(M-1) nodes of (degree - 1)
          - 2 * (odd STOCs of generation M)
          - (even STOCs of generation M)
          - (even STOCs of generation M-1)

On a k-regular graph the first term becomes ``(k - 1) N_{M-1}``; iterating
from ``N_1 = k`` gives a closed form in the STOC counts alone.  All
arithmetic here is on Python integers.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .census import StocCensus, census
from .decomposition import GenerationDecomposition, decompose
from .errors import BadGeneration, MismatchedInputs, NotRegular
from .graph import Graph, connected_component
from .indices import local_absolute_index

__all__ = [
    "ResidualReport",
    "recursion_residual",
    "residual_report",
    "closed_form_index",
    "iterated_regular_index",
    "correction_combination",
    "TieBreakReport",
    "tie_break_invariance_check",
    "suite_graphs",
    "run_suite",
]


@dataclass(frozen=True)
class ResidualReport:
    equation: str  # "recursion" | "regular" | "closed_form"
    start: int
    residuals: dict[int, int]

    @property
    def max_abs_residual(self) -> int:
        return max((abs(r) for r in self.residuals.values()), default=0)

    @property
    def ok(self) -> bool:
        return self.max_abs_residual == 0


def correction_combination(c: StocCensus, generation: int) -> int:
    """``2 * odd(M) + even(M) + even(M - 1)``: the STOC part of the recursion."""
    return 2 * c.odd(generation) + c.even(generation) + c.even(generation - 1)


def recursion_residual(g: Graph, d: GenerationDecomposition, c: StocCensus, generation: int) -> int:
    """Left minus right side of the recursion at ``generation``.

    Valid for ``2 <= generation <= L + 1``; at the dummy generation ``L + 1``
    the absolute index is 0 and the edges inside generation L are the odd
    STOCs.
    """
    if d.graph is not g and d.graph != g or c.decomposition is not d:
        raise MismatchedInputs("decomposition/census not derived from this graph")
    if not 2 <= generation <= d.last_gen + 1:
        raise BadGeneration(f"generation {generation} outside 2..{d.last_gen + 1}")
    tree_term = sum(g.degree(j) - 1 for j in d.level_sets[generation - 1])
    rhs = tree_term - correction_combination(c, generation)
    n_m = len(d.level_sets[generation]) if generation <= d.last_gen else 0
    return n_m - rhs


def _regular_degree(c: StocCensus) -> int:
    d = c.decomposition
    g = d.graph
    degrees = {g.degree(v) for v in connected_component(g, d.start)}
    if len(degrees) != 1:
        raise NotRegular(f"component of start {d.start} has degrees {sorted(degrees)}")
    return degrees.pop()


def closed_form_index(k: int, c: StocCensus, generation: int) -> int:
    """Absolute index at ``generation >= 1`` of a k-regular graph from STOC counts only."""
    if _regular_degree(c) != k:
        raise NotRegular(f"graph is not {k}-regular")
    if generation < 1:
        raise BadGeneration("closed form starts at generation 1")
    m = generation
    value = k * (k - 1) ** (m - 1)
    for j in range(2, m + 1):
        odd = 2 * sum((k - 1) ** (m - i) * c.count(i, 2 * j - 1) for i in range(j, m + 1))
        even_past = k * sum((k - 1) ** (m - 1 - i) * c.count(i, 2 * j) for i in range(j, m))
        value -= odd + even_past + c.count(m, 2 * j)
    return value


def iterated_regular_index(k: int, c: StocCensus, generation: int) -> int:
    """Iterate ``N_M = (k - 1) N_{M-1} - corrections`` upward from ``N_1 = k``."""
    if _regular_degree(c) != k:
        raise NotRegular(f"graph is not {k}-regular")
    if generation < 1:
        raise BadGeneration("iteration starts at generation 1")
    n = k
    for m in range(2, generation + 1):
        n = (k - 1) * n - correction_combination(c, m)
    return n


def residual_report(g: Graph, d: GenerationDecomposition, c: StocCensus | None = None,
                    equation: str = "recursion") -> ResidualReport:
    """Residuals at every generation of ``d``.

    ``recursion`` checks generations ``2 .. L + 1``; ``regular`` and ``closed_form``
    compare the regular-graph iteration and closed form with the BFS level
    sizes over ``1 .. L``.
    """
    c = census(g, d) if c is None else c
    n = local_absolute_index(d).values
    if equation == "recursion":
        res = {m: recursion_residual(g, d, c, m) for m in range(2, d.last_gen + 2)}
    elif equation in ("regular", "closed_form"):
        k = _regular_degree(c)
        fn = iterated_regular_index if equation == "regular" else closed_form_index
        res = {m: int(n[m]) - fn(k, c, m) for m in range(1, d.last_gen + 1)}
    else:
        raise ValueError(f"unknown equation {equation!r}")
    return ResidualReport(equation, d.start, res)


@dataclass
class TieBreakReport:
    start: int
    trials: int
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def tie_break_invariance_check(g: Graph, start: int, trials: int = 10, seed: int = 0) -> TieBreakReport:
    """Compare per-generation secondary totals and recursion corrections across random tie-breaks."""
    if trials < 2:
        raise ValueError("need at least 2 trials")
    seeds = np.random.SeedSequence(seed).generate_state(trials)
    report = TieBreakReport(start, trials)
    reference = None
    for t, s in enumerate(seeds):
        c = census(g, decompose(g, start, tie_break_seed=int(s)))
        gens = range(len(c.per_gen_total))
        observed = (c.per_gen_total, tuple(correction_combination(c, m) for m in gens))
        if reference is None:
            reference = observed
            continue
        for name, got, want in zip(("per_gen_total", "correction"), observed, reference):
            if got != want:
                report.violations.append(f"trial {t}: {name} {list(got)} != {list(want)}")
    return report


def suite_graphs(name: str, seed: int = 0):
    """Named verification corpora as ``(label, graph)`` pairs.

    ``lattices`` holds the regular and near-regular lattices; ``random``
    holds seeded ER, WS and HK graphs.
    """
    from . import generators as gen

    out = []
    if name in ("lattices", "all"):
        out += [
            ("ring(9)", gen.ring(9)),
            ("ring(10)", gen.ring(10)),
            ("ring(21)", gen.ring(21)),
            ("extended_ring(20,2)", gen.extended_ring(20, 2)),
            ("extended_ring(24,2)", gen.extended_ring(24, 2)),
            ("triangular(6x6)", gen.triangular_lattice(6, 6)),
            ("square(6x6)", gen.square_lattice(6, 6)),
            ("torus(6x6)", gen.square_lattice(6, 6, torus=True)),
            ("torus(10x10)", gen.square_lattice(10, 10, torus=True)),
        ]
    if name in ("random", "all"):
        for i in range(10):
            out.append((f"er(60,150,seed={seed + i})", gen.erdos_renyi(60, 150, seed + i)))
        for p in (0.0, 0.1, 0.5):
            out.append((f"ws(80,6,{p})", gen.watts_strogatz(80, 6, p, seed)))
        for q in (0.0, 0.5, 1.0):
            out.append((f"hk(80,3,{q})", gen.holme_kim(80, 3, q, seed)))
    if not out:
        raise ValueError(f"unknown suite {name!r}")
    return out


def run_suite(name: str, seed: int = 0):
    """Run every check on a corpus; returns rows ``(graph, check, passed, detail)``."""
    rows = []
    for label, g in suite_graphs(name, seed):
        starts = range(g.node_count)
        worst = 0
        for s in starts:
            d = decompose(g, s)
            c = census(g, d)
            worst = max(worst, residual_report(g, d, c).max_abs_residual)
        rows.append((label, "recursion", worst == 0, f"max |residual| = {worst}"))

        d = decompose(g, 0)
        c = census(g, d)
        expected = 1 + g.edge_count - g.node_count
        connected = d.reachable_count == g.node_count
        if connected:
            rows.append((label, "euler", c.total == expected, f"S = {c.total}, 1+E-N = {expected}"))

        if g.is_regular() and connected:
            worst = 0
            for eq in ("regular", "closed_form"):
                for s in starts:
                    d = decompose(g, s)
                    worst = max(worst, residual_report(g, d, equation=eq).max_abs_residual)
            rows.append((label, "closed form", worst == 0, f"max |residual| = {worst}"))

        tb = tie_break_invariance_check(g, 0, trials=5, seed=seed)
        rows.append((label, "tie-break", tb.ok, "; ".join(tb.violations[:2]) or "invariant"))
    return rows

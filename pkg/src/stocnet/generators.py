"""Seeded graph generators: verification lattices and random network families.

All random generators draw from ``numpy.random.default_rng(seed)`` (PCG64),
so the same arguments always give the same graph.
"""

from __future__ import annotations

from math import comb

import numpy as np

from .errors import BadDegree, BadParameter, BadProbability, TooSmall
from .graph import Graph, _from_validated

__all__ = [
    "ring",
    "extended_ring",
    "square_lattice",
    "triangular_lattice",
    "watts_strogatz",
    "holme_kim",
    "barabasi_albert",
    "erdos_renyi",
    "generate",
]


def _key(u, v):
    return (u, v) if u < v else (v, u)


def _check_probability(name, value):
    if not 0.0 <= value <= 1.0:
        raise BadProbability(f"{name}={value} is outside [0, 1]")


def ring(n: int) -> Graph:
    if n < 3:
        raise TooSmall(f"ring needs n >= 3, got {n}")
    return extended_ring(n, 1)


def extended_ring(n: int, r: int) -> Graph:
    """Node ``i`` is joined to ``i±1, ..., i±r`` (mod n)."""
    if r < 1 or n <= 2 * r:
        raise TooSmall(f"extended ring needs n > 2r >= 2, got n={n}, r={r}")
    edges = {_key(i, (i + j) % n) for i in range(n) for j in range(1, r + 1)}
    return _from_validated(n, edges)


def square_lattice(rows: int, cols: int, torus: bool = False) -> Graph:
    """4-neighbor grid; node ``(r, c)`` has id ``r * cols + c``."""
    least = 3 if torus else 2
    if rows < least or cols < least:
        raise TooSmall(f"square lattice needs rows, cols >= {least}, got {rows}x{cols}")
    edges = set()
    for r in range(rows):
        for c in range(cols):
            u = r * cols + c
            if c + 1 < cols or torus:
                edges.add(_key(u, r * cols + (c + 1) % cols))
            if r + 1 < rows or torus:
                edges.add(_key(u, ((r + 1) % rows) * cols + c))
    return _from_validated(rows * cols, edges)


def triangular_lattice(rows: int, cols: int) -> Graph:
    """6-neighbor lattice with offset rows.

    Even rows connect down/up to columns ``c-1`` and ``c``; odd rows to
    ``c`` and ``c+1``.  Interior nodes have degree 6.
    """
    if rows < 2 or cols < 2:
        raise TooSmall(f"triangular lattice needs rows, cols >= 2, got {rows}x{cols}")
    edges = set()
    for r in range(rows):
        shift = -1 if r % 2 == 0 else 0
        for c in range(cols):
            u = r * cols + c
            if c + 1 < cols:
                edges.add(_key(u, u + 1))
            if r + 1 < rows:
                for cc in (c + shift, c + shift + 1):
                    if 0 <= cc < cols:
                        edges.add(_key(u, (r + 1) * cols + cc))
    return _from_validated(rows * cols, edges)


def watts_strogatz(n: int, k: int, p: float, seed: int) -> Graph:
    """Watts-Strogatz small world by one-endpoint rewiring.

    Starts from ``extended_ring(n, k // 2)``.  Edges ``(i, i+j)`` are visited
    for ``j = 1 .. k/2`` and ``i = 0 .. n-1``; with probability ``p`` the
    endpoint ``i+j`` is replaced by a uniformly chosen node that is neither
    ``i`` nor already adjacent to it.  The edge count is always ``n*k/2``.
    """
    if k % 2 or k < 2 or k >= n:
        raise BadDegree(f"watts_strogatz needs even k with 2 <= k < n, got k={k}, n={n}")
    _check_probability("p", p)
    rng = np.random.default_rng(seed)
    adj = [set() for _ in range(n)]
    for i in range(n):
        for j in range(1, k // 2 + 1):
            w = (i + j) % n
            adj[i].add(w)
            adj[w].add(i)
    if p > 0:
        for j in range(1, k // 2 + 1):
            for i in range(n):
                v = (i + j) % n
                if rng.random() >= p or len(adj[i]) >= n - 1:
                    continue
                w = int(rng.integers(n))
                while w == i or w in adj[i]:
                    w = int(rng.integers(n))
                adj[i].discard(v)
                adj[v].discard(i)
                adj[i].add(w)
                adj[w].add(i)
    edges = {_key(u, w) for u in range(n) for w in adj[u]}
    return _from_validated(n, edges)


def holme_kim(n: int, m: int, q: float, seed: int) -> Graph:
    """Holme-Kim growth with triad formation.

    Begins with a clique on ``m + 1`` nodes.  Every new node adds ``m``
    edges: the first by preferential attachment, each later one by triad
    formation with probability ``q`` (a random neighbor of the most recent
    preferential-attachment target) and by preferential attachment
    otherwise.  Triad formation falls back to preferential attachment when
    no eligible neighbor exists.  ``q = 0`` is the Barabasi-Albert model.
    """
    if m < 1 or m >= n:
        raise BadParameter(f"holme_kim needs 1 <= m < n, got m={m}, n={n}")
    _check_probability("q", q)
    rng = np.random.default_rng(seed)
    adj = [set() for _ in range(n)]
    # each node appears once per unit of degree, so uniform draws are degree-proportional
    repeated: list[int] = []
    for u in range(m + 1):
        for v in range(u + 1, m + 1):
            adj[u].add(v)
            adj[v].add(u)
            repeated += (u, v)

    for source in range(m + 1, n):
        pool_size = len(repeated)

        def preferential():
            while True:
                t = repeated[int(rng.integers(pool_size))]
                if t not in adj[source]:
                    return t

        target = preferential()
        chosen = [target]
        adj[source].add(target)
        for _ in range(m - 1):
            if q > 0 and rng.random() < q:
                candidates = sorted(adj[target] - adj[source] - {source})
                if candidates:
                    t = candidates[int(rng.integers(len(candidates)))]
                    chosen.append(t)
                    adj[source].add(t)
                    continue
            target = preferential()
            chosen.append(target)
            adj[source].add(target)
        for t in chosen:
            adj[t].add(source)
            repeated += (source, t)

    edges = {_key(u, w) for u in range(n) for w in adj[u]}
    return _from_validated(n, edges)


def barabasi_albert(n: int, m: int, seed: int) -> Graph:
    return holme_kim(n, m, 0.0, seed)


def erdos_renyi(n: int, edge_count: int, seed: int) -> Graph:
    """Uniform simple graph on ``n`` nodes with exactly ``edge_count`` edges."""
    total = comb(n, 2)
    if n < 1 or not 0 <= edge_count <= total:
        raise BadParameter(f"erdos_renyi needs 0 <= edge_count <= C(n,2)={total}, got {edge_count}")
    rng = np.random.default_rng(seed)
    picks = rng.choice(total, size=edge_count, replace=False)
    # decode a pair index into (u, v), u < v, row-major over the upper triangle
    starts = np.array([comb(n, 2) - comb(n - u, 2) for u in range(n)], dtype=np.int64)
    u = np.searchsorted(starts, picks, side="right") - 1
    v = picks - starts[u] + u + 1
    return _from_validated(n, {(int(a), int(b)) for a, b in zip(u, v)})


def generate(model: str, **params) -> Graph:
    """Dispatch by model name (the names used by the ``generate`` CLI)."""
    seed = params.get("seed", 0)
    match model:
        case "ring":
            return ring(params["n"])
        case "xring" | "extended_ring":
            return extended_ring(params["n"], params["r"])
        case "sqlattice" | "square_lattice":
            return square_lattice(params["rows"], params["cols"])
        case "torus" | "square_torus":
            return square_lattice(params["rows"], params["cols"], torus=True)
        case "trilattice" | "triangular_lattice":
            return triangular_lattice(params["rows"], params["cols"])
        case "ws" | "watts_strogatz":
            return watts_strogatz(params["n"], params["k"], params["p"], seed)
        case "hk" | "holme_kim":
            return holme_kim(params["n"], params["m"], params["q"], seed)
        case "ba" | "barabasi_albert":
            return barabasi_albert(params["n"], params["m"], seed)
        case "er" | "erdos_renyi":
            return erdos_renyi(params["n"], params["edges"], seed)
    raise BadParameter(f"unknown model {model!r}")

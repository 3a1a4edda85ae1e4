"""Parameter sweeps over Watts-Strogatz and Holme-Kim networks.

For every grid value and replicate a seeded graph is generated (regenerated
with a fresh seed if it comes out disconnected), generation profiles are
computed from every selected start node, and the absolute index, relative
index and per-generation STOC counts are averaged over starts and then over
replicates.  Per-start series are zero-padded to a common generation axis.
"""

from __future__ import annotations

import configparser
import csv
import logging
import time
from dataclasses import asdict, dataclass, field, fields
from pathlib import Path
from typing import Iterable

import numpy as np

from . import generators
from .errors import ConfigError, GenerationFailure
from .graph import Graph
from .indices import relative_from_counts, select_starts
from .profiles import generation_profiles

__all__ = [
    "SweepConfig",
    "SweepRow",
    "ReplicateRecord",
    "SweepResult",
    "SummaryRow",
    "default_grid",
    "run_sweep",
    "sweep_graphs",
    "emit_csv",
    "read_csv",
    "summarize",
    "load_config",
]

log = logging.getLogger(__name__)

CSV_COLUMNS = (
    "model", "parameter", "generation", "n_abs_mean", "n_abs_std",
    "r_rel_mean", "r_rel_std", "stoc_mean", "stoc_std", "support_count",
)
DEFAULT_DEGREE = {"ws": 6, "hk": 3}


def default_grid(model: str) -> tuple[float, ...]:
    if model == "ws":
        return tuple(2.0 ** -m for m in range(10, -1, -1))
    if model == "hk":
        return tuple(round(0.1 * i, 10) for i in range(11))
    raise ConfigError(f"unknown model {model!r}; expected 'ws' or 'hk'")


@dataclass(frozen=True)
class SweepConfig:
    """One sweep: ``degree`` is k for ``ws`` and m for ``hk``."""

    model: str
    n: int = 3000
    degree: int | None = None
    grid: tuple[float, ...] | None = None
    replicates: int = 10
    seed: int = 0
    sample_size: int | None = None
    sample_seed: int = 0
    max_attempts: int = 20

    def __post_init__(self):
        if self.model not in DEFAULT_DEGREE:
            raise ConfigError(f"unknown model {self.model!r}; expected 'ws' or 'hk'")
        if self.degree is None:
            object.__setattr__(self, "degree", DEFAULT_DEGREE[self.model])
        if self.grid is None:
            object.__setattr__(self, "grid", default_grid(self.model))
        object.__setattr__(self, "grid", tuple(float(x) for x in self.grid))
        if not self.grid:
            raise ConfigError("parameter grid is empty")
        if any(not 0.0 <= x <= 1.0 for x in self.grid):
            raise ConfigError(f"grid values must lie in [0, 1]: {self.grid}")
        if self.replicates < 1:
            raise ConfigError("replicates must be >= 1")
        if self.sample_size is not None and not 1 <= self.sample_size <= self.n:
            raise ConfigError(f"sample size {self.sample_size} outside 1..{self.n}")

    def make_graph(self, parameter: float, seed: int) -> Graph:
        if self.model == "ws":
            return generators.watts_strogatz(self.n, self.degree, parameter, seed)
        return generators.holme_kim(self.n, self.degree, parameter, seed)


@dataclass(frozen=True)
class SweepRow:
    model: str
    parameter: float
    generation: int
    n_abs_mean: float
    n_abs_std: float
    r_rel_mean: float
    r_rel_std: float
    stoc_mean: float
    stoc_std: float
    support_count: int


@dataclass(frozen=True)
class ReplicateRecord:
    parameter: float
    replicate: int
    seed: int
    attempts: int
    nodes: int
    edges: int
    euler_total: int
    stoc_sum: int  # identical for every start, checked during the sweep


@dataclass
class SweepResult:
    model: str
    rows: list[SweepRow]
    replicates: list[ReplicateRecord]
    metadata: dict = field(default_factory=dict)
    # wall-clock facts; kept out of the CSV so reruns are byte-identical
    started_at: float = 0.0
    elapsed: float = 0.0

    @property
    def parameters(self) -> list[float]:
        return sorted({r.parameter for r in self.rows})

    def series(self, parameter: float, column: str) -> np.ndarray:
        rows = sorted((r for r in self.rows if r.parameter == parameter), key=lambda r: r.generation)
        return np.array([getattr(r, column) for r in rows], dtype=float)

    def euler_total_mean(self, parameter: float) -> float:
        return float(np.mean([r.euler_total for r in self.replicates if r.parameter == parameter]))


def _pad(a: np.ndarray, width: int) -> np.ndarray:
    out = np.zeros((a.shape[0], width), dtype=a.dtype)
    w = min(width, a.shape[1])
    out[:, :w] = a[:, :w]
    return out


def _last_nonzero(a: np.ndarray) -> int:
    cols = np.flatnonzero(np.any(a != 0, axis=0))
    return int(cols[-1]) if cols.size else 0


def sweep_graphs(model: str, parameter: float, graphs: Iterable[Graph], starts=None,
                 seeds: Iterable[int] | None = None, attempts: Iterable[int] | None = None,
                 sample_size: int | None = None, sample_seed: int = 0):
    """Aggregate one grid point from already generated replicate graphs.

    Returns ``(rows, records)``.
    """
    graphs = list(graphs)
    seeds = list(seeds) if seeds is not None else [0] * len(graphs)
    attempts = list(attempts) if attempts is not None else [1] * len(graphs)
    per_rep = []
    records = []
    for r, g in enumerate(graphs):
        chosen = select_starts(g, starts, sample_size, sample_seed + r)
        prof = generation_profiles(g, chosen)
        stoc = prof.stoc_counts
        sums = stoc.sum(axis=1)
        euler = 1 + g.edge_count - g.node_count
        reached = prof.node_counts.sum(axis=1)
        if np.any((reached == g.node_count) & (sums != euler)):
            raise AssertionError(f"STOC sum differs from 1+E-N={euler} on replicate {r}")
        per_rep.append((prof.node_counts, stoc))
        records.append(ReplicateRecord(parameter, r, seeds[r], attempts[r], g.node_count,
                                       g.edge_count, euler, int(sums[0])))

    width = 1 + max(max(_last_nonzero(n), _last_nonzero(s)) for n, s in per_rep)
    n_means, s_means, r_means, r_support = [], [], [], []
    for nodes, stoc in per_rep:
        nodes = _pad(nodes, width)
        n_means.append(nodes.mean(axis=0))
        s_means.append(_pad(stoc, width).mean(axis=0))
        mean, _, support = relative_from_counts(nodes)
        r_means.append(np.append(mean, np.nan))
        r_support.append(np.append(support, 0))
    n_means, s_means = np.array(n_means), np.array(s_means)
    r_means, r_support = np.array(r_means), np.array(r_support)

    has_r = r_support > 0
    r_count = has_r.sum(axis=0)
    with np.errstate(invalid="ignore", divide="ignore"):
        r_mean = np.where(has_r, r_means, 0.0).sum(axis=0) / r_count
        r_std = np.sqrt((np.where(has_r, r_means - r_mean, 0.0) ** 2).sum(axis=0) / r_count)

    rows = [
        SweepRow(model, float(parameter), m,
                 float(n_means[:, m].mean()), float(n_means[:, m].std()),
                 float(r_mean[m]), float(r_std[m]),
                 float(s_means[:, m].mean()), float(s_means[:, m].std()),
                 int(r_support[:, m].sum()))
        for m in range(width)
    ]
    return rows, records


def _connected_replicate(cfg: SweepConfig, parameter: float, replicate: int):
    for attempt in range(cfg.max_attempts):
        seed = cfg.seed + replicate + attempt * cfg.replicates
        g = cfg.make_graph(parameter, seed)
        if generation_profiles(g, [0]).node_counts.sum() == g.node_count:
            return g, seed, attempt + 1
        log.warning("%s p=%g replicate %d: seed %d gave a disconnected graph; reseeding",
                    cfg.model, parameter, replicate, seed)
    raise GenerationFailure(
        f"{cfg.model} parameter={parameter} replicate {replicate}: "
        f"no connected graph in {cfg.max_attempts} attempts"
    )


def run_sweep(cfg: SweepConfig) -> SweepResult:
    started = time.time()
    rows: list[SweepRow] = []
    records: list[ReplicateRecord] = []
    for parameter in cfg.grid:
        graphs, seeds, attempts = [], [], []
        for r in range(cfg.replicates):
            g, seed, tries = _connected_replicate(cfg, parameter, r)
            graphs.append(g)
            seeds.append(seed)
            attempts.append(tries)
        prow, prec = sweep_graphs(cfg.model, parameter, graphs, seeds=seeds, attempts=attempts,
                                  sample_size=cfg.sample_size, sample_seed=cfg.sample_seed)
        rows += prow
        records += prec
        log.info("%s parameter=%g done (%d generations)", cfg.model, parameter, len(prow))
    config = asdict(cfg)
    config["grid"] = list(cfg.grid)
    meta = {
        "config": config,
        "padding": "zero-pad per-start series to the longest generation axis",
        "seeds": {p: [r.seed for r in records if r.parameter == p] for p in cfg.grid},
    }
    return SweepResult(cfg.model, rows, records, meta, started_at=started,
                       elapsed=time.time() - started)


def _fmt(x) -> str:
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    if isinstance(x, str):
        return x
    return f"{x:.6g}"


def emit_csv(result: SweepResult, path) -> Path:
    """Write ``result`` as CSV with '#' metadata comment lines."""
    path = Path(path)
    with path.open("w", encoding="utf-8", newline="") as fh:
        fh.write(f"# stocnet sweep model={result.model}\n")
        for key, value in result.metadata.get("config", {}).items():
            fh.write(f"# config {key}={value}\n")
        fh.write(f"# padding={result.metadata.get('padding', 'zero-pad')}\n")
        for p in result.parameters:
            recs = [r for r in result.replicates if r.parameter == p]
            fh.write(f"# parameter={_fmt(p)} seeds={[r.seed for r in recs]} "
                     f"euler_total={[r.euler_total for r in recs]}\n")
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for row in result.rows:
            writer.writerow([_fmt(getattr(row, c)) for c in CSV_COLUMNS])
    return path


def read_csv(path) -> list[SweepRow]:
    """Parse a file written by :func:`emit_csv` back into rows."""
    types = {f.name: f.type for f in fields(SweepRow)}
    out = []
    with Path(path).open(encoding="utf-8") as fh:
        reader = csv.DictReader(line for line in fh if not line.startswith("#"))
        for rec in reader:
            kw = {}
            for name, raw in rec.items():
                t = types[name]
                kw[name] = raw if t == "str" else int(raw) if t == "int" else float(raw)
            out.append(SweepRow(**kw))
    return out


@dataclass(frozen=True)
class SummaryRow:
    model: str
    parameter: float
    n_peak_generation: int
    n_peak_value: float
    stoc_peak_generation: int
    euler_total_mean: float


def summarize(result: SweepResult) -> list[SummaryRow]:
    """Peak locations of the averaged absolute index and STOC curves per parameter."""
    out = []
    for p in result.parameters:
        n = result.series(p, "n_abs_mean")
        s = result.series(p, "stoc_mean")
        out.append(SummaryRow(result.model, p, int(np.argmax(n)), float(n.max()),
                              int(np.argmax(s)), result.euler_total_mean(p)))
    return out


_INT_KEYS = ("n", "k", "m", "degree", "replicates", "seed", "sample", "sample_seed")


def load_config(path, overrides: dict | None = None) -> SweepConfig:
    """Build a :class:`SweepConfig` from a flat ``key = value`` file.

    Keys mirror the ``sweep`` CLI flags: model, n, k (ws), m (hk), grid
    (comma-separated), replicates, seed, sample, sample_seed.  Non-None
    entries of ``overrides`` replace file values.
    """
    values: dict = {}
    if path is not None:
        parser = configparser.ConfigParser(inline_comment_prefixes=("#",))
        try:
            parser.read_string("[sweep]\n" + Path(path).read_text(encoding="utf-8"))
        except (OSError, configparser.Error) as exc:
            raise ConfigError(f"cannot read config {path}: {exc}") from exc
        values.update(parser["sweep"])
    values.update({k: v for k, v in (overrides or {}).items() if v is not None})
    unknown = set(values) - set(_INT_KEYS) - {"model", "grid"}
    if unknown:
        raise ConfigError(f"unknown config keys: {sorted(unknown)}")
    if "model" not in values:
        raise ConfigError("config needs a model")
    try:
        ints = {k: int(values[k]) for k in _INT_KEYS if k in values}
        grid = values.get("grid")
        if isinstance(grid, str):
            grid = None if grid.strip() in ("", "default") else tuple(
                float(x) for x in grid.split(",") if x.strip())
            if grid == ():
                raise ConfigError("parameter grid is empty")
    except ValueError as exc:
        raise ConfigError(f"bad config value: {exc}") from exc
    degree = ints.get("degree", ints.get("k" if values["model"] == "ws" else "m"))
    return SweepConfig(
        model=str(values["model"]),
        n=ints.get("n", 3000),
        degree=degree,
        grid=grid,
        replicates=ints.get("replicates", 10),
        seed=ints.get("seed", 0),
        sample_size=ints.get("sample"),
        sample_seed=ints.get("sample_seed", 0),
    )

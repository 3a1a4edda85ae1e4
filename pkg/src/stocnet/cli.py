"""Command line interface: ``stocnet {generate,analyze,sweep,verify}``.

Exit codes: 0 success, 1 verification failure, 2 input or config error.
"""

from __future__ import annotations

import argparse
import csv
import logging
import sys
from pathlib import Path

from . import generators
from .census import census, stoc_per_generation_by_difference
from .decomposition import decompose
from .errors import StocnetError
from .graph import load_edge_list, write_edge_list
from .harness import emit_csv, load_config, run_sweep, summarize
from .indices import relative_from_counts, select_starts
from .profiles import generation_profiles
from .verification import run_suite

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


def _fmt(x):
    return f"{x:.6g}" if isinstance(x, float) else str(x)


def _write_rows(path: Path, header, rows):
    with path.open("w", encoding="utf-8", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        for row in rows:
            w.writerow([_fmt(x) for x in row])


def cmd_generate(args) -> int:
    params = {k: getattr(args, k) for k in ("n", "k", "m", "r", "rows", "cols", "p", "q", "edges", "seed")
              if getattr(args, k) is not None}
    try:
        g = generators.generate(args.model, **params)
    except KeyError as exc:
        raise StocnetError(f"model {args.model} needs --{exc.args[0]}") from None
    with open(args.out, "w", encoding="utf-8") as fh:
        write_edge_list(g, fh)
    print(f"wrote {g.node_count} nodes, {g.edge_count} edges to {args.out}")
    return EXIT_OK


def _label_to_id(g, label):
    if g.labels is None:
        return label
    try:
        return g.labels.index(label)
    except ValueError:
        raise StocnetError(f"start label {label} not in graph") from None


def cmd_analyze(args) -> int:
    try:
        with open(args.graph, encoding="utf-8") as fh:
            g = load_edge_list(fh)
    except OSError as exc:
        raise StocnetError(str(exc)) from exc
    out = Path(args.out)
    if args.start is not None:
        starts = select_starts(g, [_label_to_id(g, args.start)])
    elif args.sample is not None:
        starts = select_starts(g, sample_size=args.sample, seed=args.sample_seed)
    else:
        starts = select_starts(g)
    if args.dump_decomposition and args.start is None:
        raise StocnetError("--dump-decomposition needs --start")

    prof = generation_profiles(g, starts)
    width = int(prof.last_gen.max()) + 1
    nodes = prof.node_counts[:, :width].astype(float)
    r_mean, r_std, support = relative_from_counts(nodes)
    stoc = prof.stoc_counts.astype(float)
    index_rows = []
    for m in range(width):
        r = (float(r_mean[m]), float(r_std[m]), int(support[m])) if m < width - 1 else (float("nan"), float("nan"), 0)
        index_rows.append((m, float(nodes[:, m].mean()), float(nodes[:, m].std()), r[0], r[1], r[2],
                           float(stoc[:, m].mean()) if m < stoc.shape[1] else 0.0))
    _write_rows(out, ("generation", "n_abs_mean", "n_abs_std", "r_rel_mean", "r_rel_std",
                      "support_count", "stoc_mean"), index_rows)

    census_rows, summary_rows = [], []
    for s in starts:
        d = decompose(g, int(s))
        c = census(g, d)
        label = g.label(int(s))
        census_rows += [(label, m, j, n) for (m, j), n in sorted(c.counts.items())]
        diff = stoc_per_generation_by_difference(g, d)
        if list(diff) != list(c.per_gen_total):
            raise AssertionError(f"difference method disagrees with census at start {label}")
        summary_rows += [(label, m, t, cum) for m, (t, cum) in enumerate(zip(c.per_gen_total, c.cumulative))]
        if args.dump_decomposition:
            _write_rows(out.with_suffix(".nodes.csv"), ("node", "gen", "parent"),
                        [(g.label(v), d.node_gen[v], "" if d.parent[v] is None else g.label(d.parent[v]))
                         for v in range(g.node_count)])
            _write_rows(out.with_suffix(".edges.csv"), ("u", "v", "edge_gen", "class"),
                        [(g.label(u), g.label(v), eg, cls or "")
                         for (u, v), eg, cls in zip(g.edges, d.edge_gen, d.edge_class)])
    _write_rows(out.with_suffix(".census.csv"), ("start", "generation", "j", "count"), census_rows)
    _write_rows(out.with_suffix(".stoc.csv"), ("start", "generation", "per_gen_total", "cumulative"),
                summary_rows)
    print(f"analyzed {len(starts)} start(s); wrote {out}")
    return EXIT_OK


def cmd_sweep(args) -> int:
    overrides = {
        "model": args.model, "n": args.n, "k": args.k, "m": args.m, "grid": args.grid,
        "replicates": args.replicates, "seed": args.seed, "sample": args.sample,
        "sample_seed": args.sample_seed,
    }
    cfg = load_config(args.config, overrides)
    result = run_sweep(cfg)
    outdir = Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)
    path = emit_csv(result, outdir / f"sweep_{cfg.model}.csv")
    summary = summarize(result)
    _write_rows(outdir / f"summary_{cfg.model}.csv",
                ("model", "parameter", "n_peak_generation", "n_peak_value", "stoc_peak_generation",
                 "euler_total_mean"),
                [(s.model, s.parameter, s.n_peak_generation, s.n_peak_value, s.stoc_peak_generation,
                  s.euler_total_mean) for s in summary])
    print(f"wrote {path} ({len(result.rows)} rows, {result.elapsed:.1f}s)")
    return EXIT_OK


def cmd_verify(args) -> int:
    rows = run_suite(args.suite, seed=args.seed)
    width = max(len(r[0]) for r in rows)
    failed = 0
    for label, check, ok, detail in rows:
        failed += not ok
        print(f"{'PASS' if ok else 'FAIL'}  {label:<{width}}  {check:<12} {detail}")
    print(f"{len(rows) - failed}/{len(rows)} checks passed")
    return EXIT_FAIL if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="stocnet", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="write a generated graph as an edge list")
    p.add_argument("--model", required=True,
                   choices=["ring", "xring", "sqlattice", "trilattice", "torus", "ws", "hk", "ba", "er"])
    for name in ("n", "k", "m", "r", "rows", "cols", "edges"):
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--p", type=float)
    p.add_argument("--q", type=float)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("analyze", help="indices and STOC census of an edge-list graph")
    p.add_argument("--graph", required=True)
    sel = p.add_mutually_exclusive_group()
    sel.add_argument("--start", type=int, help="start node label")
    sel.add_argument("--all-starts", action="store_true")
    sel.add_argument("--sample", type=int)
    p.add_argument("--sample-seed", type=int, default=0)
    p.add_argument("--dump-decomposition", action="store_true")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("sweep", help="run a ws/hk parameter sweep")
    p.add_argument("--config")
    p.add_argument("--out", default=".")
    p.add_argument("--model", choices=["ws", "hk"])
    for name in ("n", "k", "m", "replicates", "seed", "sample"):
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--sample-seed", type=int)
    p.add_argument("--grid", help="comma-separated parameter values")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("verify", help="check the index/STOC relations on test corpora")
    p.add_argument("--suite", choices=["lattices", "random", "all"], default="all")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except StocnetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

import csv
import io

import pytest

from stocnet import generators as gen
from stocnet.cli import main
from stocnet.graph import load_edge_list


def rows(path):
    with open(path, encoding="utf-8") as fh:
        return list(csv.DictReader(line for line in fh if not line.startswith("#")))


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["--model", "ring", "--n", "7"], gen.ring(7)),
        (["--model", "xring", "--n", "8", "--r", "2"], gen.extended_ring(8, 2)),
        (["--model", "sqlattice", "--rows", "3", "--cols", "4"], gen.square_lattice(3, 4)),
        (["--model", "torus", "--rows", "3", "--cols", "4"], gen.square_lattice(3, 4, torus=True)),
        (["--model", "trilattice", "--rows", "3", "--cols", "3"], gen.triangular_lattice(3, 3)),
        (["--model", "ws", "--n", "50", "--k", "4", "--p", "0.2", "--seed", "3"], gen.watts_strogatz(50, 4, 0.2, 3)),
        (["--model", "hk", "--n", "50", "--m", "2", "--q", "0.7", "--seed", "3"], gen.holme_kim(50, 2, 0.7, 3)),
        (["--model", "ba", "--n", "50", "--m", "2", "--seed", "3"], gen.barabasi_albert(50, 2, 3)),
    ],
)
def test_generate_writes_edge_list(tmp_path, argv, expected):
    out = tmp_path / "g.txt"
    assert main(["generate", *argv, "--out", str(out)]) == 0
    g = load_edge_list(io.StringIO(out.read_text()))
    assert {frozenset((g.label(u), g.label(v))) for u, v in g.edges} == {frozenset(e) for e in expected.edges}


def test_generate_errors(tmp_path, capsys):
    out = str(tmp_path / "g.txt")
    assert main(["generate", "--model", "ring", "--n", "2", "--out", out]) == 2
    assert main(["generate", "--model", "ws", "--n", "20", "--out", out]) == 2
    assert "needs --k" in capsys.readouterr().err
    with pytest.raises(SystemExit) as info:
        main(["generate", "--model", "nope", "--out", out])
    assert info.value.code == 2


def test_analyze_single_start(tmp_path):
    graph = tmp_path / "g.txt"
    graph.write_text("# worked example with labels 1..6\n1 2\n1 3\n1 4\n3 4\n2 6\n3 6\n4 5\n5 6\n")
    out = tmp_path / "a.csv"
    assert main(["analyze", "--graph", str(graph), "--start", "1", "--dump-decomposition", "--out", str(out)]) == 0
    idx = rows(out)
    assert [r["n_abs_mean"] for r in idx] == ["1", "3", "2"]
    census_rows = rows(tmp_path / "a.census.csv")
    assert {(r["generation"], r["j"], r["count"]) for r in census_rows} == {("2", "3", "1"), ("2", "4", "1"), ("3", "5", "1")}
    stoc = rows(tmp_path / "a.stoc.csv")
    assert stoc[-1]["cumulative"] == "3"
    nodes = rows(tmp_path / "a.nodes.csv")
    assert {r["node"]: r["gen"] for r in nodes} == {"1": "0", "2": "1", "3": "1", "4": "1", "5": "2", "6": "2"}
    edges = rows(tmp_path / "a.edges.csv")
    assert sum(r["class"] == "secondary" for r in edges) == 3


def test_analyze_all_starts_and_sample(tmp_path):
    graph = tmp_path / "c6.txt"
    graph.write_text("".join(f"{i} {(i + 1) % 6}\n" for i in range(6)))
    out = tmp_path / "c6.csv"
    assert main(["analyze", "--graph", str(graph), "--all-starts", "--out", str(out)]) == 0
    idx = rows(out)
    assert [r["n_abs_mean"] for r in idx] == ["1", "2", "2", "1"]
    assert [r["r_rel_mean"] for r in idx] == ["2", "1", "0.5", "nan"]
    assert [r["support_count"] for r in idx] == ["6", "6", "6", "0"]
    assert main(["analyze", "--graph", str(graph), "--sample", "3", "--sample-seed", "1", "--out", str(out)]) == 0
    assert len({r["start"] for r in rows(tmp_path / "c6.census.csv")}) == 3


def test_analyze_errors(tmp_path):
    graph = tmp_path / "bad.txt"
    graph.write_text("0 1\n1 2 3\n")
    assert main(["analyze", "--graph", str(graph), "--out", str(tmp_path / "x.csv")]) == 2
    assert main(["analyze", "--graph", str(tmp_path / "missing.txt"), "--out", str(tmp_path / "x.csv")]) == 2
    graph.write_text("0 1\n")
    assert main(["analyze", "--graph", str(graph), "--start", "9", "--out", str(tmp_path / "x.csv")]) == 2
    assert main(["analyze", "--graph", str(graph), "--dump-decomposition", "--out", str(tmp_path / "x.csv")]) == 2


def test_sweep_config_and_override(tmp_path):
    cfg = tmp_path / "s.cfg"
    cfg.write_text("model = hk\nn = 60\ngrid = 0.0,1.0\nreplicates = 2\n")
    assert main(["sweep", "--config", str(cfg), "--replicates", "1", "--out", str(tmp_path / "o")]) == 0
    data = rows(tmp_path / "o" / "sweep_hk.csv")
    assert {r["parameter"] for r in data} == {"0", "1"}
    text = (tmp_path / "o" / "sweep_hk.csv").read_text()
    assert "# config replicates=1" in text
    summary = rows(tmp_path / "o" / "summary_hk.csv")
    # 1 + (C(4,2) + 56 * 3) - 60
    assert len(summary) == 2 and summary[0]["euler_total_mean"] == "115"


def test_sweep_config_error(tmp_path):
    cfg = tmp_path / "s.cfg"
    cfg.write_text("model = ws\nreplicates = 0\n")
    assert main(["sweep", "--config", str(cfg), "--out", str(tmp_path)]) == 2
    assert main(["sweep", "--out", str(tmp_path)]) == 2


def test_verify_suites(capsys):
    assert main(["verify", "--suite", "lattices"]) == 0
    out = capsys.readouterr().out
    assert "FAIL" not in out and "torus(6x6)" in out
    assert main(["verify", "--suite", "random"]) == 0


def test_verify_reports_failure(monkeypatch, capsys):
    import stocnet.cli as cli

    monkeypatch.setattr(cli, "run_suite", lambda name, seed=0: [("g", "recursion", False, "max |residual| = 1")])
    assert main(["verify", "--suite", "all"]) == 1
    assert "FAIL" in capsys.readouterr().out

import networkx as nx
import pytest

from stocnet.graph import Graph, build_graph

ACCEPTANCE_LINES = []


def to_nx(g: Graph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.node_count))
    G.add_edges_from(g.edges)
    return G


def cycle(n):
    return build_graph([(i, (i + 1) % n) for i in range(n)])


def complete(n):
    return build_graph([(i, j) for i in range(n) for j in range(i + 1, n)])


def star(leaves):
    return build_graph([(0, i) for i in range(1, leaves + 1)])


def path(n):
    return build_graph([(i, i + 1) for i in range(n - 1)])


def worked_example():
    """Six nodes v1..v6 (ids 0..5) whose BFS from v1 has levels {v1}, {v2,v3,v4}, {v5,v6}."""
    return build_graph([(0, 1), (0, 2), (0, 3), (2, 3), (1, 5), (2, 5), (3, 4), (4, 5)])


@pytest.fixture
def record_criterion():
    def record(number, name, passed, detail=""):
        ACCEPTANCE_LINES.append(f"[{'PASS' if passed else 'FAIL'}] criterion {number}: {name} {detail}".rstrip())

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

from math import comb

import networkx as nx
import numpy as np
import pytest

from stocnet import generators as gen
from stocnet.census import census, euler_total
from stocnet.decomposition import decompose
from stocnet.errors import BadDegree, BadParameter, BadProbability, TooSmall

from conftest import complete, to_nx


def test_ring():
    g = gen.ring(6)
    assert (g.node_count, g.edge_count) == (6, 6)
    assert set(g.degrees) == {2}
    assert gen.ring(3) == complete(3)
    with pytest.raises(TooSmall):
        gen.ring(2)


def test_extended_ring():
    g = gen.extended_ring(8, 2)
    assert g.edge_count == 16
    assert set(g.degrees) == {4}
    assert gen.extended_ring(10, 1) == gen.ring(10)
    with pytest.raises(TooSmall):
        gen.extended_ring(4, 2)


def test_square_lattices():
    g = gen.square_lattice(3, 3)
    assert (g.node_count, g.edge_count) == (9, 12)
    t = gen.square_lattice(4, 4, torus=True)
    assert (t.node_count, t.edge_count) == (16, 32)
    assert set(t.degrees) == {4}
    assert nx.is_isomorphic(to_nx(gen.square_lattice(5, 4)), nx.grid_2d_graph(5, 4))
    with pytest.raises(TooSmall):
        gen.square_lattice(2, 5, torus=True)
    with pytest.raises(TooSmall):
        gen.square_lattice(1, 5)


def test_triangular_lattice_offset_convention():
    g = gen.triangular_lattice(3, 3)
    # node (1, 1) sits on an odd row: up/down neighbors at columns 1 and 2
    expected = {(1, 0), (1, 2), (0, 1), (0, 2), (2, 1), (2, 2)}
    assert set(g.adjacency[4]) == {r * 3 + c for r, c in expected}
    assert g.degree(4) == 6
    # every triangle count matches a planar triangulated strip: 2 per unit cell
    big = gen.triangular_lattice(6, 6)
    assert sum(nx.triangles(to_nx(big)).values()) // 3 == 2 * 5 * 5
    with pytest.raises(TooSmall):
        gen.triangular_lattice(1, 4)


def test_watts_strogatz_p0_is_extended_ring():
    assert gen.watts_strogatz(10, 4, 0.0, seed=5) == gen.extended_ring(10, 2)


@pytest.mark.parametrize("p", [2.0 ** -10, 0.1, 0.5, 1.0])
def test_watts_strogatz_edge_count_invariant(p):
    g = gen.watts_strogatz(3000, 6, p, seed=11)
    assert g.edge_count == 9000


def test_watts_strogatz_errors():
    with pytest.raises(BadProbability):
        gen.watts_strogatz(10, 4, 1.5, 0)
    with pytest.raises(BadDegree):
        gen.watts_strogatz(10, 3, 0.1, 0)
    with pytest.raises(BadDegree):
        gen.watts_strogatz(6, 6, 0.1, 0)


def test_watts_strogatz_rewires_roughly_p_fraction():
    g = gen.watts_strogatz(2000, 6, 0.25, seed=3)
    ring = set(gen.extended_ring(2000, 3).edges)
    moved = sum(e not in ring for e in g.edges) / g.edge_count
    assert 0.2 < moved < 0.3


def test_holme_kim_edge_count():
    g = gen.holme_kim(100, 3, 0.0, seed=1)
    assert g.edge_count == comb(4, 2) + 96 * 3 == 294


@pytest.mark.parametrize("q", [0.0, 0.3, 1.0])
@pytest.mark.parametrize("seed", [0, 7])
def test_holme_kim_edge_count_any_q(q, seed):
    n, m = 400, 3
    g = gen.holme_kim(n, m, q, seed)
    assert g.edge_count == comb(m + 1, 2) + (n - m - 1) * m
    assert nx.is_connected(to_nx(g))


def test_holme_kim_triads_raise_clustering():
    low = nx.transitivity(to_nx(gen.holme_kim(1000, 3, 0.0, seed=2)))
    high = nx.transitivity(to_nx(gen.holme_kim(1000, 3, 1.0, seed=2)))
    assert high > low


def test_holme_kim_errors():
    with pytest.raises(BadParameter):
        gen.holme_kim(10, 0, 0.5, 0)
    with pytest.raises(BadParameter):
        gen.holme_kim(10, 10, 0.5, 0)
    with pytest.raises(BadProbability):
        gen.holme_kim(10, 2, -0.1, 0)


def test_barabasi_albert_alias():
    assert gen.barabasi_albert(100, 3, seed=4) == gen.holme_kim(100, 3, 0.0, seed=4)
    with pytest.raises(BadParameter):
        gen.barabasi_albert(5, 5, 0)


def test_barabasi_albert_m1_is_tree():
    g = gen.barabasi_albert(50, 1, seed=9)
    assert g.edge_count == 49
    assert euler_total(g, 0) == 0
    assert census(g, decompose(g, 0)).total == 0


def test_barabasi_albert_degree_exponent():
    # discrete power-law MLE over the tail k >= 6
    k = gen.barabasi_albert(3000, 3, seed=0).degrees
    tail = k[k >= 6]
    exponent = 1 + tail.size / np.sum(np.log(tail / 5.5))
    assert abs(exponent - 3) <= 0.5


def test_erdos_renyi():
    assert gen.erdos_renyi(5, 10, seed=0) == complete(5)
    assert gen.erdos_renyi(100, 0, seed=0).edge_count == 0
    g = gen.erdos_renyi(200, 600, seed=3)
    assert g.edge_count == 600
    with pytest.raises(BadParameter):
        gen.erdos_renyi(4, 7, 0)


def test_erdos_renyi_pairs_uniform_over_triangle():
    # every pair index decodes to a valid (u < v); all C(6,2) pairs reachable
    seen = set()
    for s in range(40):
        seen.update(gen.erdos_renyi(6, 3, s).edges)
    assert seen == {(u, v) for u in range(6) for v in range(u + 1, 6)}


@pytest.mark.parametrize(
    "make",
    [
        lambda s: gen.watts_strogatz(300, 6, 0.3, s),
        lambda s: gen.holme_kim(300, 3, 0.6, s),
        lambda s: gen.erdos_renyi(300, 900, s),
    ],
)
def test_determinism(make):
    assert make(42).edges == make(42).edges
    assert make(42).edges != make(43).edges


def test_generate_dispatch():
    assert gen.generate("xring", n=8, r=2) == gen.extended_ring(8, 2)
    assert gen.generate("torus", rows=3, cols=3) == gen.square_lattice(3, 3, torus=True)
    with pytest.raises(BadParameter):
        gen.generate("nope")

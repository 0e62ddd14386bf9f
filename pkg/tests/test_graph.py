import itertools
from math import comb

import networkx as nx
import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from unicyclic_wiener.errors import DisconnectedGraphError, GraphError
from unicyclic_wiener.graph import (
    all_pairs_distances,
    cycle_graph,
    from_edges,
    from_json,
    path_graph,
    star_graph,
    unicyclic_info,
    wiener_index,
)


def floyd_warshall(g):
    inf = float("inf")
    d = [[0 if i == j else inf for j in range(g.n)] for i in range(g.n)]
    for u, v in g.edges():
        d[u][v] = d[v][u] = 1
    for k, i, j in itertools.product(range(g.n), repeat=3):
        if d[i][k] + d[k][j] < d[i][j]:
            d[i][j] = d[i][k] + d[k][j]
    return d


def test_from_edges_examples():
    tri = from_edges(3, [(0, 1), (1, 2), (0, 2)])
    assert tri.edges() == [(0, 1), (0, 2), (1, 2)]
    assert from_edges(1, []).n == 1
    c4 = from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert c4 == cycle_graph(4)


def test_from_edges_dedups_and_rejects():
    assert from_edges(2, [(0, 1), (1, 0), (0, 1)]).num_edges == 1
    with pytest.raises(GraphError, match="self-loop"):
        from_edges(3, [(1, 1)])
    with pytest.raises(GraphError, match="outside"):
        from_edges(3, [(0, 3)])


def test_distance_examples():
    assert all_pairs_distances(cycle_graph(4))[0, 2] == 2
    assert all_pairs_distances(path_graph(5))[0, 4] == 4
    assert all_pairs_distances(star_graph(3))[1, 2] == 2


def test_distances_match_floyd_warshall(rng):
    for _ in range(30):
        n = rng.randint(2, 9)
        g = nx.gnp_random_graph(n, 0.5, seed=rng.randrange(10**6))
        if not nx.is_connected(g):
            continue
        ours = from_edges(n, g.edges())
        d = all_pairs_distances(ours)
        assert np.array_equal(d, d.T)
        assert d.tolist() == floyd_warshall(ours)


def test_disconnected_raises():
    g = from_edges(4, [(0, 1), (2, 3)])
    with pytest.raises(DisconnectedGraphError):
        wiener_index(g)
    with pytest.raises(DisconnectedGraphError):
        all_pairs_distances(g)


def test_wiener_examples():
    assert wiener_index(path_graph(5)) == 20
    assert wiener_index(from_edges(1, [])) == 0
    assert wiener_index(cycle_graph(4)) == 8


@pytest.mark.parametrize("q", range(1, 51))
def test_path_wiener_is_binomial(q):
    assert wiener_index(path_graph(q)) == comb(q + 1, 3)


@pytest.mark.parametrize("n", range(3, 31))
def test_cycle_wiener(n):
    direct = int(all_pairs_distances(cycle_graph(n)).sum()) // 2
    assert wiener_index(cycle_graph(n)) == direct == n * (n * n // 4) // 2


def test_wiener_matches_networkx(rng):
    for _ in range(40):
        n = rng.randint(1, 12)
        t = nx.random_labeled_tree(n, seed=rng.randrange(10**6)) if n > 1 else nx.empty_graph(1)
        g = from_edges(n, t.edges())
        assert wiener_index(g) == int(nx.wiener_index(t))


@given(st.integers(4, 10), st.integers(0, 10**6))
def test_edge_deletion_increases_wiener(n, seed):
    g = nx.gnp_random_graph(n, 0.6, seed=seed)
    if not nx.is_connected(g):
        return
    ours = from_edges(n, g.edges())
    w = wiener_index(ours)
    for e in ours.edges():
        h = ours.edit(remove=[e])
        if h.is_connected():
            assert wiener_index(h) > w


def test_unicyclic_info_examples():
    info = unicyclic_info(cycle_graph(3))
    assert info.cycle == (0, 1, 2) and all(not a for a in info.attachment)
    assert unicyclic_info(path_graph(4)) is None
    info = unicyclic_info(from_edges(4, [(0, 1), (1, 2), (0, 2), (0, 3)]))
    assert info.length == 3
    assert info.attachment[info.cycle.index(0)] == {3}


def test_unicyclic_info_partitions_tree_vertices():
    g = from_edges(9, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5), (4, 6), (2, 7), (7, 8)])
    info = unicyclic_info(g)
    assert set(info.cycle) == {0, 1, 2, 3}
    for a, b in zip(info.cycle, info.cycle[1:] + info.cycle[:1]):
        assert g.has_edge(a, b)
    parts = [set(a) for a in info.attachment]
    assert set().union(*parts) == {4, 5, 6, 7, 8}
    assert sum(map(len, parts)) == 5
    assert info.tree_size(info.cycle.index(0)) == 4


def test_json_round_trip():
    g = cycle_graph(5).edit(add=[(0, 2)])
    assert from_json(g.to_json()) == g
    with pytest.raises(GraphError):
        from_json('{"n": 2}')

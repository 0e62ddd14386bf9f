import random

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from unicyclic_wiener.canonical import canonical_form, is_isomorphic
from unicyclic_wiener.enumeration import unicyclic_graphs
from unicyclic_wiener.errors import GraphError
from unicyclic_wiener.families import G3Params, build_g3
from unicyclic_wiener.graph import cycle_graph, from_edges, path_graph, star_graph


def random_perm(n, rng):
    p = list(range(n))
    rng.shuffle(p)
    return p


def test_examples():
    c4 = cycle_graph(4)
    assert canonical_form(c4) == canonical_form(c4.permute([2, 1, 0, 3]))
    assert canonical_form(path_graph(4)) != canonical_form(star_graph(3))


def test_g3_leaf_order_irrelevant():
    g = build_g3(G3Params.reduced(2, 1))
    # same shape, leaves listed before the path vertex
    h = from_edges(6, [(0, 1), (1, 2), (0, 2), (0, 5), (5, 3), (5, 4)])
    assert canonical_form(g) == canonical_form(h)


def test_cap():
    with pytest.raises(GraphError, match="14"):
        canonical_form(path_graph(15))
    assert canonical_form(path_graph(15), cap=20)


@pytest.mark.parametrize("n", range(3, 8))
def test_invariance_all_unicyclic(n):
    rng = random.Random(n)
    for g in unicyclic_graphs(n):
        key = canonical_form(g)
        for _ in range(100):
            assert canonical_form(g.permute(random_perm(n, rng))) == key


@given(st.integers(2, 8), st.floats(0.2, 0.8), st.integers(0, 10**6), st.integers(0, 10**6))
def test_agrees_with_networkx_isomorphism(n, p, s1, s2):
    a = nx.gnp_random_graph(n, p, seed=s1)
    b = nx.gnp_random_graph(n, p, seed=s2)
    ga, gb = from_edges(n, a.edges()), from_edges(n, b.edges())
    assert is_isomorphic(ga, gb) == nx.is_isomorphic(a, b)


@given(st.integers(2, 12), st.integers(0, 10**6), st.integers(0, 10**6))
def test_relabelled_random_graph(n, seed, pseed):
    g = from_edges(n, nx.gnp_random_graph(n, 0.4, seed=seed).edges())
    h = g.permute(random_perm(n, random.Random(pseed)))
    assert canonical_form(g) == canonical_form(h)


def test_highly_symmetric_inputs_are_fast():
    assert canonical_form(star_graph(13)) == canonical_form(star_graph(13).permute(list(range(13, -1, -1))))
    k = from_edges(14, [(u, v) for u in range(14) for v in range(u + 1, 14)])
    assert canonical_form(k)
    assert canonical_form(cycle_graph(14))

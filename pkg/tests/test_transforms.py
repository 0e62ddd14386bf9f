import json

import pytest

from unicyclic_wiener.errors import TransformError
from unicyclic_wiener.graph import cycle_graph, from_edges, path_graph, unicyclic_info, wiener_index
from unicyclic_wiener.matching import matching_number
from unicyclic_wiener.transforms import (
    cycle_swap,
    cycle_swap_corpus,
    path_regraft,
    path_regraft_corpus,
    path_regraft_orientation,
    random_path_legged,
    random_unicyclic,
    spr,
)


def test_spr_on_path_to_star_side():
    # move leaf 4 of P5 from 3 onto 1
    rep = spr(path_graph(5), 3, 4, 1)
    assert rep.after.degree(1) == 3
    assert rep.delta_wiener == wiener_index(rep.after) - wiener_index(path_graph(5)) < 0


def test_spr_moves_whole_branch():
    g = from_edges(6, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 5)])
    rep = spr(g, 0, 3, 2)
    assert rep.after.has_edge(2, 3) and not rep.after.has_edge(0, 3)
    assert rep.after.has_edge(3, 4) and rep.after.has_edge(4, 5)
    assert rep.after.is_unicyclic()


def test_spr_rejects_bad_moves():
    g = from_edges(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4)])
    with pytest.raises(TransformError):
        spr(g, 0, 1, 3)  # branch contains the cycle
    with pytest.raises(TransformError):
        spr(g, 0, 3, 4)  # target inside the subtree
    with pytest.raises(TransformError):
        spr(g, 0, 4, 1)  # not adjacent


def test_spr_identity_move():
    g = path_graph(4)
    assert spr(g, 2, 3, 2).delta_wiener == 0


def test_cycle_swap_bare_c5():
    g1 = cycle_swap(cycle_graph(5), "G1")
    g2 = cycle_swap(cycle_graph(5), "G2")
    assert g1.delta_wiener == 2 and g2.delta_wiener == 1
    assert unicyclic_info(g1.after).length == 3
    assert unicyclic_info(g2.after).length == 4


def test_cycle_swap_domain():
    with pytest.raises(TransformError):
        cycle_swap(cycle_graph(4), "G1")
    with pytest.raises(TransformError):
        cycle_swap(cycle_graph(6), "G3")
    with pytest.raises(TransformError):
        cycle_swap(path_graph(5), "G1")


def test_cycle_swap_corpus_properties():
    corpus = cycle_swap_corpus(200, seed=3)
    for g in corpus:
        r1, r2 = cycle_swap(g, "G1"), cycle_swap(g, "G2")
        w = wiener_index(g)
        assert w < wiener_index(r2.after) < wiener_index(r1.after)
        assert min(r1.matching_after, r2.matching_after) <= matching_number(g)
        assert r1.after.is_unicyclic() and r2.after.is_unicyclic()


def test_path_regraft_example():
    # C4 with legs of length 2 at 0 and length 1 at 2
    g = from_edges(7, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5), (2, 6)])
    rep = path_regraft(g, 0, 2)
    assert rep.delta_wiener > 0
    assert rep.delta_wiener >= rep.params["lower_bound"]
    assert rep.after.is_unicyclic()
    assert abs(rep.matching_after - rep.matching_before) <= 1


def test_path_regraft_orientation_tie_goes_low():
    g = from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (2, 5)])
    assert path_regraft_orientation(g, 2, 0) == (0, 2)


def test_path_regraft_domain():
    g = from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)])
    with pytest.raises(TransformError):
        path_regraft(g, 0, 1)  # empty leg
    with pytest.raises(TransformError):
        path_regraft(g, 0, 0)
    star_leg = from_edges(7, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (3, 5), (1, 6)])
    with pytest.raises(TransformError):
        path_regraft(star_leg, 0, 1)


def test_path_regraft_corpus_properties():
    for g, i1, i2 in path_regraft_corpus(200, seed=5):
        rep = path_regraft(g, i1, i2)
        assert rep.delta_wiener > 0
        assert rep.delta_wiener >= rep.params["lower_bound"]
        assert rep.matching_before - rep.matching_after <= 1


def test_random_generators_are_seeded():
    assert random_unicyclic(10, 5, 42) == random_unicyclic(10, 5, 42)
    for s in range(50):
        g = random_unicyclic(11, 4, s)
        assert g.n == 11 and g.is_unicyclic() and unicyclic_info(g).length == 4
        h = random_path_legged(10, 4, s)
        assert h.is_unicyclic() and sum(1 for a in unicyclic_info(h).attachment if a) >= 2
    with pytest.raises(TransformError):
        random_unicyclic(4, 5)


def test_report_json_round_trip():
    rep = cycle_swap(cycle_graph(6), "G2")
    data = json.loads(rep.to_json())
    assert data["delta_wiener"] == data["wiener_after"] - data["wiener_before"] == rep.delta_wiener
    assert data["params"]["variant"] == "G2"

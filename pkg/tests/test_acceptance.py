"""End-to-end acceptance checks, one test per criterion.

Each test records a one-line PASS/FAIL verdict; the lines are printed in
the terminal summary (see conftest.py) and when this file is run as a
script.
"""

import itertools
import random
import time

from unicyclic_wiener.canonical import canonical_form
from unicyclic_wiener.enumeration import (
    extremal_table,
    trees,
    unicyclic_graphs,
    verify_dankelmann,
    verify_main_theorem,
    verify_minima,
    verify_monotonicity,
)
from unicyclic_wiener.families import AnmParams, G3Params, G4Params, build_anm, build_g3, build_g4
from unicyclic_wiener.formulas import (
    bound_dankelmann_max,
    bound_max_unicyclic,
    collapse_g3,
    collapse_g4,
    delta_g3_collapse,
    delta_g4_collapse,
    extremal_set_predicted,
    wiener_g3_closed,
    wiener_g4_closed,
)
from unicyclic_wiener.graph import wiener_index
from unicyclic_wiener.graph6 import from_graph6, to_graph6
from unicyclic_wiener.matching import (
    matching_number_bruteforce,
    matching_number_tree,
    matching_number_unicyclic,
)
from unicyclic_wiener.transforms import (
    cycle_swap,
    cycle_swap_corpus,
    path_regraft,
    path_regraft_corpus,
    random_unicyclic,
)

VERDICTS: dict[int, str] = {}


def record(number, ok, detail, started):
    VERDICTS[number] = f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {detail}  ({time.time() - started:.1f}s)"
    assert ok, VERDICTS[number]


def test_criterion_01_main_theorem():
    t = time.time()
    rep = verify_main_theorem(11)
    record(1, rep.passed, f"{len(rep.cells)} (n,m) cells, {len(rep.failures)} mismatches, n <= 11", t)


def test_criterion_02_spot_values():
    t = time.time()
    expected = {(4, 2): 8, (6, 2): 28, (6, 3): 31, (9, 3): 98, (10, 3): 129}
    bad = []
    for (n, m), w in expected.items():
        closed = bound_max_unicyclic(n, m)
        built = {wiener_index(g) for g in extremal_set_predicted(n, m)}
        searched = {r.m: r.w_max for r in extremal_table(n)}[m]
        if not closed == searched == w or built != {w}:
            bad.append((n, m, closed, built, searched))
    record(2, not bad, f"5 spot values via closed form, built graph, search; bad={bad}", t)


def test_criterion_03_monotonicity():
    t = time.time()
    rep = verify_monotonicity(11)
    record(3, rep.passed, f"{len(rep.cells)} orders, strict increase in m", t)


def test_criterion_04_minima():
    t = time.time()
    rep = verify_minima(11, tree_n_max=9)
    record(4, rep.passed, f"{len(rep.cells)} cells (trees n <= 9, unicyclic n <= 11)", t)


def test_criterion_05_dankelmann():
    t = time.time()
    rep = verify_dankelmann(7)
    anm_bad = [
        (n, m) for n in range(2, 21) for m in range(1, n // 2 + 1)
        if wiener_index(build_anm(AnmParams(n, m))) != bound_dankelmann_max(n, m)
    ]
    record(5, rep.passed and not anm_bad,
           f"{len(rep.cells)} connected cells n <= 7; A_(n,m) identity n <= 20, bad={anm_bad}", t)


GRID3 = [G3Params(*v) for v in itertools.product(range(4), repeat=6)]
GRID4 = [G4Params(*v) for v in itertools.product(range(4), repeat=8)]


def test_criterion_06_closed_forms():
    t = time.time()
    bad3 = sum(wiener_g3_closed(p) != wiener_index(build_g3(p)) for p in GRID3)
    bad4 = sum(wiener_g4_closed(p) != wiener_index(build_g4(p)) for p in GRID4)
    record(6, bad3 == bad4 == 0,
           f"G3 {len(GRID3)} cases, G4 {len(GRID4)} cases, mismatches {bad3}+{bad4}", t)


def test_criterion_07_collapse_identities():
    t = time.time()
    bad = 0
    checked3 = 0
    for p in GRID3:
        if p.a != max(p.a, p.b, p.c):
            continue
        checked3 += 1
        d = delta_g3_collapse(p)
        bad += d != wiener_g3_closed(collapse_g3(p)) - wiener_g3_closed(p)
        if sum(x == 0 for x in (p.j, p.k, p.l)) <= 1:
            bad += d <= 0
    for p in GRID4:
        d = delta_g4_collapse(p)
        bad += d != wiener_g4_closed(collapse_g4(p)) - wiener_g4_closed(p)
        bad += d < 0
    record(7, bad == 0, f"G3 {checked3} cases (a max), G4 {len(GRID4)} cases, violations {bad}", t)


def test_criterion_08_transforms():
    t = time.time()
    swap_bad = 0
    for g in cycle_swap_corpus(500, seed=0):
        r1, r2 = cycle_swap(g, "G1"), cycle_swap(g, "G2")
        w, w1, w2 = wiener_index(g), wiener_index(r1.after), wiener_index(r2.after)
        m = r1.matching_before
        swap_bad += not (w < w2 < w1) or min(r1.matching_after, r2.matching_after) > m
    regraft_bad = 0
    for g, i1, i2 in path_regraft_corpus(500, seed=0):
        rep = path_regraft(g, i1, i2)
        regraft_bad += rep.delta_wiener <= 0 or abs(rep.matching_after - rep.matching_before) > 1
    record(8, swap_bad == regraft_bad == 0,
           f"500 cycle swaps, 500 path regrafts, violations {swap_bad}+{regraft_bad}", t)


def test_criterion_09_matching_oracles():
    t = time.time()
    count = bad = 0
    for n in range(1, 10):
        for g in trees(n):
            count += 1
            bad += matching_number_tree(g).size != matching_number_bruteforce(g).size
    for n in range(3, 10):
        for g in unicyclic_graphs(n):
            count += 1
            bad += matching_number_unicyclic(g).size != matching_number_bruteforce(g).size
    record(9, bad == 0, f"{count} graphs, mismatches {bad}", t)


def test_criterion_10_graph6_round_trip():
    t = time.time()
    graphs = [g for n in range(1, 10) for g in trees(n)]
    graphs += [g for n in range(3, 10) for g in unicyclic_graphs(n)]
    rng = random.Random(0)
    for _ in range(1000):
        n = rng.randint(3, 30)
        graphs.append(random_unicyclic(n, rng.randint(3, n), rng))
    bad = sum(from_graph6(to_graph6(g)) != g for g in graphs)
    # decoding must not disturb the isomorphism class either
    bad += sum(canonical_form(from_graph6(to_graph6(g))) != canonical_form(g) for g in graphs if g.n <= 9)
    record(10, bad == 0, f"{len(graphs)} graphs, failures {bad}", t)


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                pass
    for k in sorted(VERDICTS):
        print(VERDICTS[k])
    raise SystemExit(0 if all("PASS" in v for v in VERDICTS.values()) else 1)


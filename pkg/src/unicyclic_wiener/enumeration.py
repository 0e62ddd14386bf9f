"""Isomorphism-free enumeration of trees, unicyclic and connected graphs,
and the exhaustive verification drivers built on them.

Unicyclic graphs are assembled from a cycle C_k and a cyclic sequence of
rooted trees. Rooted trees are canonical nested tuples, and a sequence is
kept only if it is the smallest among its rotations and reflections, so
each isomorphism class is produced once. Canonical forms are still
computed for every graph; they key the output ordering and double-check
uniqueness.
"""

from __future__ import annotations

import itertools
import json
from collections import defaultdict
from collections.abc import Callable, Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import lru_cache

from .canonical import CanonicalForm, canonical_form
from .errors import DomainError
from .families import (
    AnmParams,
    DuZhouParams,
    build_anm,
    build_duzhou_min_tree,
    build_duzhou_min_unicyclic,
)
from .formulas import (
    bound_dankelmann_max,
    bound_dankelmann_min,
    bound_duzhou_tree_min,
    bound_duzhou_unicyclic_min,
    bound_max_unicyclic,
    extremal_set_predicted,
)
from .graph import Graph, complete_graph, cycle_graph, from_edges, wiener_index
from .matching import matching_number

UNICYCLIC_MAX_N = 12
TREE_MAX_N = 10
TREE_DEFAULT_CAP = 9
CONNECTED_MAX_N = 7

RootedTree = tuple  # nested tuple of children, sorted


# -- rooted trees ------------------------------------------------------------


@lru_cache(maxsize=None)
def rooted_trees(size: int) -> tuple[RootedTree, ...]:
    """All rooted trees with ``size`` vertices, as sorted canonical tuples."""
    if size < 1:
        raise DomainError("rooted trees need at least one vertex")
    if size == 1:
        return ((),)
    found = {tuple(sorted(forest)) for forest in _forests(size - 1, (size - 1, None))}
    return tuple(sorted(found))


def _forests(total: int, bound: tuple[int, int | None]) -> Iterator[tuple[RootedTree, ...]]:
    """Multisets of rooted trees of total order ``total``, listed with
    non-increasing (size, index) keys not exceeding ``bound``."""
    if total == 0:
        yield ()
        return
    max_size, max_idx = bound
    for size in range(min(total, max_size), 0, -1):
        trees = rooted_trees(size)
        top = len(trees) - 1 if (size < max_size or max_idx is None) else max_idx
        for idx in range(top, -1, -1):
            for rest in _forests(total - size, (size, idx)):
                yield (trees[idx], *rest)


def _attach(tree: RootedTree, root: int, edges: list[tuple[int, int]], nxt: int) -> int:
    for child in tree:
        edges.append((root, nxt))
        nxt = _attach(child, nxt, edges, nxt + 1)
    return nxt


# -- unicyclic graphs ----------------------------------------------------------


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    for cuts in itertools.combinations(range(1, total), parts - 1):
        bounds = (0, *cuts, total)
        yield tuple(bounds[i + 1] - bounds[i] for i in range(parts))


def _dihedral_min(seq: tuple) -> bool:
    k = len(seq)
    rev = seq[::-1]
    for r in range(k):
        if seq[r:] + seq[:r] < seq or rev[r:] + rev[:r] < seq:
            return False
    return True


def _unicyclic_shard(n: int, k: int) -> list[tuple[CanonicalForm, Graph]]:
    """Every unicyclic graph of order ``n`` whose cycle has length ``k``."""
    out = []
    for sizes in _compositions(n, k):
        choices = [[(s, i) for i in range(len(rooted_trees(s)))] for s in sizes]
        for keys in itertools.product(*choices):
            if not _dihedral_min(keys):
                continue
            edges = list(cycle_graph(k).edges())
            nxt = k
            for root, (s, i) in enumerate(keys):
                nxt = _attach(rooted_trees(s)[i], root, edges, nxt)
            g = from_edges(n, edges)
            out.append((canonical_form(g), g))
    return out


def _map(fn: Callable, args: list, jobs: int) -> list:
    if jobs < 1:
        raise DomainError("jobs must be >= 1")
    if jobs == 1 or len(args) < 2:
        return [fn(*a) for a in args]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(fn, *a) for a in args]
        return [f.result() for f in futures]


def _merge(shards: list[list[tuple[CanonicalForm, Graph]]]) -> list[tuple[CanonicalForm, Graph]]:
    merged: dict[CanonicalForm, Graph] = {}
    for shard in shards:
        for key, g in shard:
            if key in merged:
                raise AssertionError(f"duplicate isomorphism class {key!r}")
            merged[key] = g
    return sorted(merged.items())


@lru_cache(maxsize=None)
def _unicyclic_catalog(n: int) -> tuple[tuple[CanonicalForm, Graph], ...]:
    return tuple(_merge([_unicyclic_shard(n, k) for k in range(3, n + 1)]))


def unicyclic_graphs_keyed(n: int, jobs: int = 1) -> list[tuple[CanonicalForm, Graph]]:
    """(canonical form, graph) pairs for all unicyclic graphs of order ``n``,
    sorted by canonical form; sharded by cycle length when ``jobs > 1``."""
    if not 3 <= n <= UNICYCLIC_MAX_N:
        raise DomainError(f"unicyclic enumeration supports 3 <= n <= {UNICYCLIC_MAX_N}, got {n}")
    if jobs == 1:
        return list(_unicyclic_catalog(n))
    return _merge(_map(_unicyclic_shard, [(n, k) for k in range(3, n + 1)], jobs))


def unicyclic_graphs(n: int, jobs: int = 1) -> Iterator[Graph]:
    """Every connected graph with n vertices and n edges, once per isomorphism class."""
    for _, g in unicyclic_graphs_keyed(n, jobs):
        yield g


def unicyclic_graphs_labeled(n: int) -> list[tuple[CanonicalForm, Graph]]:
    """Independent pipeline: filter all labelled n-edge graphs, dedupe.

    Cost grows as C(n(n-1)/2, n); practical up to n = 8.
    """
    if not 3 <= n <= 8:
        raise DomainError("labelled unicyclic filter supports 3 <= n <= 8")
    pairs = list(itertools.combinations(range(n), 2))
    full = (1 << n) - 1
    found: dict[CanonicalForm, Graph] = {}
    for chosen in itertools.combinations(pairs, n):
        nbr = [0] * n
        for u, v in chosen:
            nbr[u] |= 1 << v
            nbr[v] |= 1 << u
        seen, frontier = 1, 1
        while frontier:
            reach = 0
            f = frontier
            while f:
                low = f & -f
                reach |= nbr[low.bit_length() - 1]
                f ^= low
            frontier = reach & ~seen
            seen |= reach
        if seen != full:
            continue
        g = from_edges(n, chosen)
        key = canonical_form(g)
        found.setdefault(key, g)
    return sorted(found.items())


def unicyclic_graphs_from_trees(n: int) -> list[tuple[CanonicalForm, Graph]]:
    """Independent pipeline: every free tree of order n plus one non-edge."""
    if not 3 <= n <= TREE_MAX_N:
        raise DomainError(f"tree-plus-edge pipeline supports 3 <= n <= {TREE_MAX_N}")
    found: dict[CanonicalForm, Graph] = {}
    for _, t in trees_keyed(n, cap=TREE_MAX_N):
        base = t.edges()
        for u, v in itertools.combinations(range(n), 2):
            if not t.has_edge(u, v):
                g = from_edges(n, [*base, (u, v)])
                found.setdefault(canonical_form(g), g)
    return sorted(found.items())


# -- trees ---------------------------------------------------------------------


def _prufer_decode(seq: tuple[int, ...], n: int) -> Graph:
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = next(v for v in range(n) if degree[v] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = (w for w in range(n) if degree[w] == 1)
    edges.append((u, v))
    return from_edges(n, edges)


def trees_prufer(n: int) -> list[tuple[CanonicalForm, Graph]]:
    """Free trees via all n^(n-2) Prüfer sequences with canonical dedup."""
    if not 1 <= n <= TREE_MAX_N:
        raise DomainError(f"tree enumeration supports 1 <= n <= {TREE_MAX_N}")
    if n <= 2:
        g = from_edges(n, [(0, 1)] if n == 2 else [])
        return [(canonical_form(g), g)]
    found: dict[CanonicalForm, Graph] = {}
    for seq in itertools.product(range(n), repeat=n - 2):
        g = _prufer_decode(seq, n)
        found.setdefault(canonical_form(g), g)
    return sorted(found.items())


@lru_cache(maxsize=None)
def _trees_grown(n: int) -> tuple[tuple[CanonicalForm, Graph], ...]:
    if n == 1:
        g = from_edges(1, [])
        return ((canonical_form(g), g),)
    found: dict[CanonicalForm, Graph] = {}
    for _, t in _trees_grown(n - 1):
        for v in range(n - 1):
            g = from_edges(n, [*t.edges(), (v, n - 1)])
            found.setdefault(canonical_form(g), g)
    return tuple(sorted(found.items()))


def trees_keyed(n: int, method: str = "grow", cap: int = TREE_DEFAULT_CAP) -> list[tuple[CanonicalForm, Graph]]:
    """Free trees of order ``n`` keyed by canonical form.

    ``method="grow"`` adds a leaf to every vertex of every tree of order
    n-1; ``method="prufer"`` decodes every Prüfer sequence. Both dedupe by
    canonical form and must agree.
    """
    if not 1 <= n <= min(cap, TREE_MAX_N):
        raise DomainError(f"tree enumeration capped at n <= {min(cap, TREE_MAX_N)}, got {n}")
    if method == "grow":
        return list(_trees_grown(n))
    if method == "prufer":
        return trees_prufer(n)
    raise DomainError(f"unknown tree method {method!r}")


def trees(n: int, method: str = "grow", cap: int = TREE_DEFAULT_CAP) -> Iterator[Graph]:
    for _, g in trees_keyed(n, method, cap):
        yield g


# -- connected graphs (for the general bounds) ----------------------------------


@lru_cache(maxsize=None)
def _connected_grown(n: int) -> tuple[tuple[CanonicalForm, Graph], ...]:
    # every connected graph has a non-cut vertex, so adding a vertex with a
    # non-empty neighbourhood to connected graphs of order n-1 reaches all
    if n == 1:
        g = from_edges(1, [])
        return ((canonical_form(g), g),)
    found: dict[CanonicalForm, Graph] = {}
    for _, h in _connected_grown(n - 1):
        base = h.edges()
        for mask in range(1, 1 << (n - 1)):
            g = from_edges(n, base + [(v, n - 1) for v in range(n - 1) if mask >> v & 1])
            found.setdefault(canonical_form(g), g)
    return tuple(sorted(found.items()))


def connected_graphs_keyed(n: int) -> list[tuple[CanonicalForm, Graph]]:
    if not 1 <= n <= CONNECTED_MAX_N:
        raise DomainError(f"connected-graph enumeration supports 1 <= n <= {CONNECTED_MAX_N}")
    return list(_connected_grown(n))


def connected_graphs(n: int) -> Iterator[Graph]:
    for _, g in connected_graphs_keyed(n):
        yield g


def connected_graphs_labeled(n: int) -> list[tuple[CanonicalForm, Graph]]:
    """Oracle: all 2^(n(n-1)/2) labelled graphs filtered for connectivity."""
    if not 1 <= n <= 6:
        raise DomainError("labelled connected-graph filter supports 1 <= n <= 6")
    pairs = list(itertools.combinations(range(n), 2))
    found: dict[CanonicalForm, Graph] = {}
    for mask in range(1 << len(pairs)):
        g = from_edges(n, [p for i, p in enumerate(pairs) if mask >> i & 1])
        if g.is_connected():
            found.setdefault(canonical_form(g), g)
    return sorted(found.items())


# -- extremal tables -------------------------------------------------------------


@dataclass(frozen=True)
class ExtremalRecord:
    n: int
    m: int
    w_max: int
    extremal: tuple[CanonicalForm, ...]
    count_searched: int


def _measure(n: int, k: int) -> list[tuple[CanonicalForm, int, int]]:
    return [(key, matching_number(g), wiener_index(g)) for key, g in _unicyclic_shard(n, k)]


@lru_cache(maxsize=None)
def _measured_catalog(n: int) -> tuple[tuple[CanonicalForm, int, int], ...]:
    return tuple((key, matching_number(g), wiener_index(g)) for key, g in _unicyclic_catalog(n))


def _measured(n: int, jobs: int) -> list[tuple[CanonicalForm, int, int]]:
    if not 3 <= n <= UNICYCLIC_MAX_N:
        raise DomainError(f"unicyclic enumeration supports 3 <= n <= {UNICYCLIC_MAX_N}, got {n}")
    if jobs == 1:
        return list(_measured_catalog(n))
    rows = [r for shard in _map(_measure, [(n, k) for k in range(3, n + 1)], jobs) for r in shard]
    return sorted(rows)


def _best_by_class(rows, sign: int) -> dict[int, tuple[int, list[CanonicalForm], int]]:
    """Per matching class: (extreme W, keys attaining it, class size)."""
    best: dict[int, tuple[int, list[CanonicalForm], int]] = {}
    for key, m, w in rows:
        if m not in best:
            best[m] = (w, [key], 1)
            continue
        bw, keys, cnt = best[m]
        if sign * w > sign * bw:
            best[m] = (w, [key], cnt + 1)
        elif w == bw:
            keys.append(key)
            best[m] = (bw, keys, cnt + 1)
        else:
            best[m] = (bw, keys, cnt + 1)
    return best


def extremal_table(n: int, jobs: int = 1) -> list[ExtremalRecord]:
    """Maximum Wiener index and all maximisers, per matching number."""
    best = _best_by_class(_measured(n, jobs), +1)
    return [
        ExtremalRecord(n, m, w, tuple(sorted(keys)), cnt)
        for m, (w, keys, cnt) in sorted(best.items())
    ]


def minimum_table(n: int, jobs: int = 1) -> list[ExtremalRecord]:
    """Minimum Wiener index and all minimisers, per matching number."""
    best = _best_by_class(_measured(n, jobs), -1)
    return [
        ExtremalRecord(n, m, w, tuple(sorted(keys)), cnt)
        for m, (w, keys, cnt) in sorted(best.items())
    ]


def _table_over(keyed: list[tuple[CanonicalForm, Graph]], sign: int) -> dict[int, tuple[int, list[CanonicalForm], int]]:
    rows = [(key, matching_number(g), wiener_index(g)) for key, g in keyed]
    return _best_by_class(rows, sign)


# -- verification reports -----------------------------------------------------


@dataclass
class VerificationReport:
    suite: str
    n_max: int
    cells: list[dict] = field(default_factory=list)
    failures: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures and bool(self.cells)

    def add(self, cell: dict) -> None:
        self.cells.append(cell)
        if not cell["ok"]:
            self.failures.append(cell)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["passed"] = self.passed
        return d

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), default=_jsonable, **kw)


def _jsonable(obj):
    if isinstance(obj, bytes):
        return obj.decode("ascii")
    raise TypeError(f"not JSON serialisable: {type(obj)}")


def _keys(graphs: list[Graph]) -> list[str]:
    return sorted(canonical_form(g).decode() for g in graphs)


def verify_main_theorem(n_max: int, jobs: int = 1) -> VerificationReport:
    """Brute-force maxima and maximisers against the closed bound and the
    predicted extremal graphs, for 4 <= n <= n_max and 2 <= m <= n/2."""
    if n_max > UNICYCLIC_MAX_N:
        raise DomainError(f"n_max must be <= {UNICYCLIC_MAX_N}")
    report = VerificationReport("main", n_max)
    for n in range(4, n_max + 1):
        table = {r.m: r for r in extremal_table(n, jobs)}
        for m in range(2, n // 2 + 1):
            rec = table.get(m)
            bound = bound_max_unicyclic(n, m)
            predicted = _keys(extremal_set_predicted(n, m))
            found = sorted(k.decode() for k in rec.extremal) if rec else []
            report.add({
                "n": n, "m": m, "expected": bound,
                "found": rec.w_max if rec else None,
                "predicted_extremal": predicted, "found_extremal": found,
                "searched": rec.count_searched if rec else 0,
                "ok": rec is not None and rec.w_max == bound and found == predicted,
            })
    return report


def verify_monotonicity(n_max: int, jobs: int = 1) -> VerificationReport:
    if n_max > UNICYCLIC_MAX_N:
        raise DomainError(f"n_max must be <= {UNICYCLIC_MAX_N}")
    report = VerificationReport("mono", n_max)
    for n in range(3, n_max + 1):
        table = extremal_table(n, jobs)
        seq = [(r.m, r.w_max) for r in table]
        for (m1, w1), (m2, w2) in zip(seq, seq[1:]):
            report.add({"n": n, "m1": m1, "m2": m2, "w1": w1, "w2": w2, "ok": w1 < w2})
        if len(seq) == 1:
            report.add({"n": n, "m1": seq[0][0], "m2": None, "w1": seq[0][1], "w2": None, "ok": True})
    return report


def _unicyclic_special_families() -> dict[str, tuple[int, list[Graph]]]:
    """Further minimisers named alongside the star-triangle family, with
    every placement of their pendants enumerated."""
    c5 = cycle_graph(5).edges()
    two = [from_edges(7, [*c5, (0, 5), (v, 6)]) for v in range(3)]
    three = [from_edges(8, [*c5, (0, 5), (1, 6), (2, 7)])]
    return {
        "C4": (4, [cycle_graph(4)]),
        "C5": (5, [cycle_graph(5)]),
        "C5+2 pendants": (7, two),
        "C5+3 consecutive pendants": (8, three),
    }


def verify_minima(n_max: int, tree_n_max: int | None = None, jobs: int = 1) -> VerificationReport:
    """Brute-force minima for trees (n <= tree_n_max) and unicyclic graphs
    (n <= n_max) against the tree and unicyclic lower bounds."""
    tree_n_max = min(n_max, TREE_DEFAULT_CAP) if tree_n_max is None else tree_n_max
    if n_max > UNICYCLIC_MAX_N or tree_n_max > TREE_MAX_N:
        raise DomainError("n_max out of range")
    report = VerificationReport("minima", n_max)
    for n in range(4, tree_n_max + 1):
        best = _table_over(trees_keyed(n, cap=TREE_MAX_N), -1)
        for m in range(2, n // 2 + 1):
            w, keys, cnt = best[m]
            expected = bound_duzhou_tree_min(n, m)
            built = build_duzhou_min_tree(DuZhouParams(n, m, "tree-min"))
            found = sorted(k.decode() for k in keys)
            report.add({
                "class": "tree", "n": n, "m": m, "expected": expected, "found": w,
                "searched": cnt, "minimisers": found,
                "ok": w == expected and found == _keys([built])
                and matching_number(built) == m and wiener_index(built) == expected,
            })
    families = _unicyclic_special_families()
    for n in range(4, n_max + 1):
        table = {r.m: r for r in minimum_table(n, jobs)}
        for m in range(2, n // 2 + 1):
            rec = table[m]
            expected = bound_duzhou_unicyclic_min(n, m)
            built = build_duzhou_min_unicyclic(DuZhouParams(n, m, "unicyclic-min"))
            found = sorted(k.decode() for k in rec.extremal)
            built_key = canonical_form(built).decode()
            present = []
            for name, (fn, members) in families.items():
                if fn != n:
                    continue
                if any(matching_number(g) == m and canonical_form(g).decode() in found for g in members):
                    present.append(name)
            special_ok = all(
                name in present for name, (fn, members) in families.items()
                if fn == n and any(matching_number(g) == m for g in members)
                and min(wiener_index(g) for g in members if matching_number(g) == m) == expected
            )
            report.add({
                "class": "unicyclic", "n": n, "m": m, "expected": expected, "found": rec.w_max,
                "searched": rec.count_searched, "minimisers": found, "families_present": present,
                "ok": rec.w_max == expected and built_key in found
                and matching_number(built) == m and special_ok,
            })
    return report


def dankelmann_min_graph(n: int, m: int) -> Graph:
    """K_n when m = floor(n/2), otherwise the join K_m + (n-m)K_1."""
    if m == n // 2:
        return complete_graph(n)
    edges = [(u, v) for u in range(m) for v in range(u + 1, n)]
    return from_edges(n, edges)


def verify_dankelmann(n_max: int = CONNECTED_MAX_N) -> VerificationReport:
    """General bounds over every connected graph of order 2..n_max."""
    if n_max > CONNECTED_MAX_N:
        raise DomainError(f"n_max must be <= {CONNECTED_MAX_N}")
    report = VerificationReport("dankelmann", n_max)
    for n in range(2, n_max + 1):
        keyed = connected_graphs_keyed(n)
        rows = [(key, matching_number(g), wiener_index(g)) for key, g in keyed]
        lo = _best_by_class(rows, -1)
        hi = _best_by_class(rows, +1)
        for m in range(1, n // 2 + 1):
            wmin, kmin, cnt = lo[m]
            wmax, kmax, _ = hi[m]
            exp_min, exp_max = bound_dankelmann_min(n, m), bound_dankelmann_max(n, m)
            min_key = canonical_form(dankelmann_min_graph(n, m))
            max_key = canonical_form(build_anm(AnmParams(n, m)))
            report.add({
                "n": n, "m": m, "searched": cnt,
                "expected_min": exp_min, "found_min": wmin,
                "expected_max": exp_max, "found_max": wmax,
                "minimisers": sorted(k.decode() for k in kmin),
                "maximisers": sorted(k.decode() for k in kmax),
                "ok": wmin == exp_min and wmax == exp_max
                and sorted(kmin) == [min_key] and sorted(kmax) == [max_key],
            })
    return report

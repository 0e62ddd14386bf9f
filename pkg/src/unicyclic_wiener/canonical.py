"""Canonical labelling by colour refinement plus individualisation search.

The initial colouring uses each vertex's degree and its BFS layer profile.
Refinement splits colour classes by the multiset of neighbour colours until
stable. When a non-discrete partition remains, every vertex of the first
non-singleton cell is individualised in turn (one per twin class, since
swapping twins is an automorphism) and the search recurses. Each discrete
leaf fixes an ordering; the canonical form is the graph6 encoding of the
ordering whose adjacency bitstring is smallest.
"""

from __future__ import annotations

from collections import Counter

from .errors import GraphError
from .graph import Graph, distances_from, from_edges
from .graph6 import to_graph6

CanonicalForm = bytes

DEFAULT_CAP = 14


def _rank(keys: list) -> list[int]:
    order = {k: i for i, k in enumerate(sorted(set(keys)))}
    return [order[k] for k in keys]


def _refine(colors: list[int], adj: tuple[tuple[int, ...], ...]) -> list[int]:
    ncolors = len(set(colors))
    while True:
        sigs = [(colors[v], tuple(sorted(colors[w] for w in adj[v]))) for v in range(len(colors))]
        new = _rank(sigs)
        k = len(set(new))
        if k == ncolors:
            return new
        colors, ncolors = new, k


def _code(order: list[int], masks: list[int]) -> int:
    """Adjacency bits of the relabelled graph, column-major upper triangle."""
    code = 0
    for j in range(1, len(order)):
        mj = masks[order[j]]
        for i in range(j):
            code = (code << 1) | ((mj >> order[i]) & 1)
    return code


def canonical_labeling(g: Graph, cap: int = DEFAULT_CAP) -> list[int]:
    """Return ``order`` such that relabelling ``order[i] -> i`` is canonical."""
    n = g.n
    if n > cap:
        raise GraphError(f"canonical form supports n <= {cap} (configured cap), got n={n}")
    if n <= 1:
        return list(range(n))
    adj = g.adjacency
    masks = [sum(1 << w for w in adj[v]) for v in range(n)]
    profiles = []
    for v in range(n):
        layer = Counter(distances_from(g, v))
        profiles.append((len(adj[v]), tuple(sorted(layer.items()))))
    start = _refine(_rank(profiles), adj)

    best_code: int | None = None
    best_order: list[int] = []

    def search(colors: list[int]) -> None:
        nonlocal best_code, best_order
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        if len(cells) == n:
            order = sorted(range(n), key=colors.__getitem__)
            code = _code(order, masks)
            if best_code is None or code < best_code:
                best_code, best_order = code, order
            return
        target = next(cells[c] for c in sorted(cells) if len(cells[c]) > 1)
        cell_color = colors[target[0]]
        reps: list[int] = []
        for v in target:
            # twins (equal neighbourhoods once the pair is ignored) give identical subtrees
            if any((masks[v] & ~(1 << u)) == (masks[u] & ~(1 << v)) for u in reps):
                continue
            reps.append(v)
            split = [2 * c + (w != v) if c == cell_color else 2 * c for w, c in enumerate(colors)]
            search(_refine(_rank(split), adj))

    search(start)
    return best_order


def canonical_form(g: Graph, cap: int = DEFAULT_CAP) -> CanonicalForm:
    """Label-invariant bytes: equal for two graphs iff they are isomorphic."""
    return to_graph6(canonical_graph(g, cap))


def canonical_graph(g: Graph, cap: int = DEFAULT_CAP) -> Graph:
    order = canonical_labeling(g, cap)
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    return from_edges(g.n, [(pos[u], pos[v]) for u, v in g.edges()])


def is_isomorphic(g: Graph, h: Graph, cap: int = DEFAULT_CAP) -> bool:
    return g.n == h.n and g.num_edges == h.num_edges and canonical_form(g, cap) == canonical_form(h, cap)

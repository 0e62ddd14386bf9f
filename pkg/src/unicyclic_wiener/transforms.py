"""Graph rewrites that raise the Wiener index without raising the matching
number much: subtree prune-and-regraft, the cycle-shortening swaps, and
the path regraft between two legs of a cycle.

Each transform returns a :class:`TransformReport`; the Wiener change is
always recomputed from scratch so the report can serve as an oracle for
incremental claims.
"""

from __future__ import annotations

import json
import random
from collections import deque
from dataclasses import dataclass, field

from .errors import TransformError
from .graph import CycleInfo, Graph, from_edges, unicyclic_info, wiener_index
from .matching import matching_number


@dataclass(frozen=True)
class TransformReport:
    before: Graph
    after: Graph
    delta_wiener: int
    matching_before: int
    matching_after: int
    params: dict = field(default_factory=dict, compare=False)

    @classmethod
    def of(cls, before: Graph, after: Graph, **params) -> TransformReport:
        return cls(
            before,
            after,
            wiener_index(after) - wiener_index(before),
            matching_number(before),
            matching_number(after),
            params,
        )

    def to_dict(self) -> dict:
        from .graph6 import to_graph6

        return {
            "before": to_graph6(self.before).decode(),
            "after": to_graph6(self.after).decode(),
            "wiener_before": wiener_index(self.before),
            "wiener_after": wiener_index(self.after),
            "delta_wiener": self.delta_wiener,
            "matching_before": self.matching_before,
            "matching_after": self.matching_after,
            "params": self.params,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _component_without(g: Graph, start: int, blocked: int) -> set[int]:
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if w != blocked and w not in seen:
                seen.add(w)
                queue.append(w)
    return seen


def spr(g: Graph, d: int, branch: int, v: int) -> TransformReport:
    """Move the subtree hanging from ``d`` through ``branch`` so that it
    hangs from ``v`` instead. The subtree keeps its internal edges."""
    if not all(0 <= x < g.n for x in (d, branch, v)):
        raise TransformError("vertex out of range")
    if not g.has_edge(d, branch):
        raise TransformError(f"{branch} is not a neighbour of {d}")
    side = _component_without(g, branch, d)
    inner_edges = sum(1 for x in side for w in g.adjacency[x] if w in side) // 2
    if d in side or inner_edges != len(side) - 1 or any(
        w in side for w in g.adjacency[d] if w != branch
    ):
        raise TransformError("pruned branch is not a tree hanging from d (it contains the cycle)")
    if v in side:
        raise TransformError(f"regraft vertex {v} lies inside the pruned subtree")
    if v == d:
        return TransformReport.of(g, g, d=d, branch=branch, v=v)
    after = g.edit(remove=[(d, branch)], add=[(v, branch)])
    return TransformReport.of(g, after, d=d, branch=branch, v=v)


def _rotate_for_max_tree(info: CycleInfo) -> list[int]:
    """Cycle order r_1..r_k with a largest attached tree at r_3."""
    k = info.length
    sizes = [info.tree_size(i) for i in range(k)]
    top = sizes.index(max(sizes))
    return [info.cycle[(top - 2 + t) % k] for t in range(k)]


def cycle_swap(g: Graph, variant: str) -> TransformReport:
    """Shorten a cycle of length k >= 5.

    With the cycle rotated so r_3 carries a largest tree, ``"G1"`` replaces
    r_2 r_3 by r_2 r_k (leaving a triangle) and ``"G2"`` replaces it by
    r_2 r_{k-1} (leaving a four-cycle).
    """
    info = unicyclic_info(g)
    if info is None:
        raise TransformError("cycle_swap needs a unicyclic graph")
    if info.length < 5:
        raise TransformError(f"cycle_swap needs cycle length >= 5, got {info.length}")
    r = _rotate_for_max_tree(info)
    if variant == "G1":
        new = (r[1], r[-1])
    elif variant == "G2":
        new = (r[1], r[-2])
    else:
        raise TransformError(f"variant must be 'G1' or 'G2', got {variant!r}")
    after = g.edit(remove=[(r[1], r[2])], add=[new])
    return TransformReport.of(g, after, variant=variant, cycle=r)


def _legs(g: Graph, info: CycleInfo) -> list[list[int]]:
    """For each cycle vertex, its attached path ordered from the root out."""
    legs = []
    on_cycle = set(info.cycle)
    for r, att in zip(info.cycle, info.attachment):
        leg: list[int] = []
        prev, cur = None, r
        while True:
            nxt = [w for w in g.adjacency[cur] if w in att and w != prev]
            if len(nxt) > 1:
                raise TransformError(f"tree at cycle vertex {r} is not a path")
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            leg.append(cur)
        if len(leg) != len(att):
            raise TransformError(f"tree at cycle vertex {r} is not a path")
        assert not on_cycle.intersection(leg)
        legs.append(leg)
    return legs


def path_regraft_orientation(g: Graph, i1: int, i2: int) -> tuple[int, int]:
    """Order the two legs so that the kept leg is at least as far, weighted
    by leg size, from the remaining legs; ties go to the lower index."""
    info = unicyclic_info(g)
    if info is None:
        raise TransformError("path_regraft needs a unicyclic graph")
    legs = _legs(g, info)
    k = info.length

    def cyc(x: int, y: int) -> int:
        return min((x - y) % k, (y - x) % k)

    others = [t for t in range(k) if legs[t] and t not in (i1, i2)]
    w1 = sum(cyc(i1, t) * len(legs[t]) for t in others)
    w2 = sum(cyc(i2, t) * len(legs[t]) for t in others)
    if w1 > w2:
        return i1, i2
    if w2 > w1:
        return i2, i1
    return min(i1, i2), max(i1, i2)


def path_regraft(g: Graph, i1: int, i2: int) -> TransformReport:
    """Detach leg ``i2`` from the cycle and hang it off the end of leg ``i1``.

    Indices refer to positions in ``unicyclic_info(g).cycle``. The two legs
    are swapped first if needed so the kept leg is the better anchor.
    """
    info = unicyclic_info(g)
    if info is None:
        raise TransformError("path_regraft needs a unicyclic graph")
    k = info.length
    if not (0 <= i1 < k and 0 <= i2 < k) or i1 == i2:
        raise TransformError("i1, i2 must be distinct cycle positions")
    legs = _legs(g, info)
    if not legs[i1] or not legs[i2]:
        raise TransformError("both legs must be non-empty")
    i1, i2 = path_regraft_orientation(g, i1, i2)
    tip = legs[i1][-1]
    head = legs[i2][0]
    after = g.edit(remove=[(info.cycle[i2], head)], add=[(tip, head)])
    dist = min((i1 - i2) % k, (i2 - i1) % k)
    bound = (k - dist - 1) * len(legs[i1]) * len(legs[i2])
    return TransformReport.of(g, after, i1=i1, i2=i2, lower_bound=bound)


# -- seeded random instances ---------------------------------------------------


def _rng(seed: int | random.Random) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def random_unicyclic(n: int, k: int, seed: int | random.Random = 0) -> Graph:
    """Cycle C_k plus n-k vertices hung by a random Prüfer tree.

    The cycle is contracted to one super-vertex, a uniform labelled tree on
    the super-vertex and the n-k others is decoded from a random Prüfer
    sequence, and each edge at the super-vertex goes to a uniformly chosen
    cycle vertex.
    """
    if not 3 <= k <= n:
        raise TransformError(f"need 3 <= k <= n, got k={k}, n={n}")
    rng = _rng(seed)
    edges = [(i, (i + 1) % k) for i in range(k)]
    m = n - k + 1  # super-vertex 0, others 1..n-k
    if m >= 2:
        if m == 2:
            tree = [(0, 1)]
        else:
            seq = [rng.randrange(m) for _ in range(m - 2)]
            degree = [1] * m
            for x in seq:
                degree[x] += 1
            tree = []
            for x in seq:
                leaf = next(v for v in range(m) if degree[v] == 1)
                tree.append((leaf, x))
                degree[leaf] -= 1
                degree[x] -= 1
            tree.append(tuple(v for v in range(m) if degree[v] == 1))
        for u, v in tree:
            a = rng.randrange(k) if u == 0 else k + u - 1
            b = rng.randrange(k) if v == 0 else k + v - 1
            edges.append((a, b))
    return from_edges(n, edges)


def random_path_legged(n: int, k: int, seed: int | random.Random = 0) -> Graph:
    """C_k with the other n-k vertices split into paths at random cycle
    vertices; at least two legs are non-empty."""
    if n - k < 2 or k < 3:
        raise TransformError("need k >= 3 and at least two non-cycle vertices")
    rng = _rng(seed)
    while True:
        lengths = [0] * k
        for _ in range(n - k):
            lengths[rng.randrange(k)] += 1
        if sum(1 for x in lengths if x) >= 2:
            break
    edges = [(i, (i + 1) % k) for i in range(k)]
    nxt = k
    for root, length in enumerate(lengths):
        tip = root
        for _ in range(length):
            edges.append((tip, nxt))
            tip = nxt
            nxt += 1
    return from_edges(n, edges)


def cycle_swap_corpus(count: int = 500, seed: int = 0, k_min: int = 5, k_max: int = 8,
                      n_max: int = 12) -> list[Graph]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        k = rng.randint(k_min, k_max)
        n = rng.randint(k, n_max)
        out.append(random_unicyclic(n, k, rng))
    return out


def path_regraft_corpus(count: int = 500, seed: int = 0, n_max: int = 12) -> list[tuple[Graph, int, int]]:
    """Random path-legged graphs paired with two non-empty leg positions."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(5, n_max)
        k = rng.randint(3, n - 2)
        g = random_path_legged(n, k, rng)
        info = unicyclic_info(g)
        legs = [i for i, att in enumerate(info.attachment) if att]
        i1, i2 = rng.sample(legs, 2)
        out.append((g, i1, i2))
    return out

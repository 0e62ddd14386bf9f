"""Matching numbers for trees and unicyclic graphs, with a brute-force oracle.

Trees use greedy leaf matching, which is exact: some maximum matching
always contains the edge from any leaf to its neighbour. A unicyclic
graph has a maximum matching that misses at least one cycle edge, so its
matching number is the best tree matching over single cycle-edge deletions.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import GraphError
from .graph import Edge, Graph, unicyclic_info

BRUTEFORCE_EDGE_LIMIT = 24


@dataclass(frozen=True)
class MatchingCertificate:
    edges: tuple[Edge, ...]

    @property
    def size(self) -> int:
        return len(self.edges)

    def verify(self, g: Graph) -> bool:
        used: set[int] = set()
        for u, v in self.edges:
            if not g.has_edge(u, v) or u in used or v in used:
                return False
            used.update((u, v))
        return True


def _leaf_matching(n: int, adj: list[set[int]]) -> list[Edge]:
    """Greedy leaf matching on a forest given as mutable adjacency sets."""
    alive = [True] * n
    deg = [len(a) for a in adj]
    stack = [v for v in range(n) if deg[v] == 1]
    matched: list[Edge] = []
    while stack:
        v = stack.pop()
        if not alive[v] or deg[v] != 1:
            continue
        (u,) = (w for w in adj[v] if alive[w])
        matched.append((min(u, v), max(u, v)))
        for x in (u, v):
            alive[x] = False
            for w in adj[x]:
                if alive[w]:
                    deg[w] -= 1
                    if deg[w] == 1:
                        stack.append(w)
    return matched


def matching_number_tree(g: Graph) -> MatchingCertificate:
    if not g.is_tree():
        raise GraphError("matching_number_tree requires a tree")
    adj = [set(a) for a in g.adjacency]
    return MatchingCertificate(tuple(sorted(_leaf_matching(g.n, adj))))


def matching_number_unicyclic(g: Graph) -> MatchingCertificate:
    info = unicyclic_info(g)
    if info is None:
        raise GraphError("matching_number_unicyclic requires a connected unicyclic graph")
    best: list[Edge] = []
    cyc = info.cycle
    for i in range(len(cyc)):
        u, v = cyc[i], cyc[(i + 1) % len(cyc)]
        adj = [set(a) for a in g.adjacency]
        adj[u].discard(v)
        adj[v].discard(u)
        m = _leaf_matching(g.n, adj)
        if len(m) > len(best):
            best = m
    return MatchingCertificate(tuple(sorted(best)))


def matching_number_bruteforce(g: Graph) -> MatchingCertificate:
    """Exhaustive in/out branching over edges."""
    edges = g.edges()
    if len(edges) > BRUTEFORCE_EDGE_LIMIT:
        raise GraphError(
            f"brute-force matching limited to {BRUTEFORCE_EDGE_LIMIT} edges, got {len(edges)}"
        )
    best: list[Edge] = []

    def branch(i: int, used: int, chosen: list[Edge]) -> None:
        nonlocal best
        if len(chosen) + (len(edges) - i) <= len(best):
            return
        if i == len(edges):
            best = list(chosen)
            return
        u, v = edges[i]
        if not (used >> u) & 1 and not (used >> v) & 1:
            chosen.append((u, v))
            branch(i + 1, used | (1 << u) | (1 << v), chosen)
            chosen.pop()
        branch(i + 1, used, chosen)

    branch(0, 0, [])
    return MatchingCertificate(tuple(best))


def maximum_matching(g: Graph) -> MatchingCertificate:
    """Dispatch to the fastest exact method for ``g``."""
    if g.is_tree():
        return matching_number_tree(g)
    if g.is_unicyclic():
        return matching_number_unicyclic(g)
    return matching_number_bruteforce(g)


def matching_number(g: Graph) -> int:
    return maximum_matching(g).size

"""Immutable simple graphs on vertices ``0..n-1``.

Distances come from per-source breadth-first search; at the sizes this
package works with (n well under 100) that is both the simplest and the
fastest option.
"""

from __future__ import annotations

import json
from collections import deque
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

import numpy as np

from .errors import DisconnectedGraphError, GraphError

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with sorted adjacency tuples.

    Build instances with :func:`from_edges`; the constructor trusts its
    input. Two graphs compare equal iff they have the same labelled edges.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    @property
    def num_edges(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def edges(self) -> list[Edge]:
        """Edges as ``(u, v)`` with ``u < v``, in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def edit(self, remove: Iterable[Edge] = (), add: Iterable[Edge] = ()) -> Graph:
        """Return a new graph with ``remove`` deleted and ``add`` inserted."""
        es = {(min(u, v), max(u, v)) for u, v in self.edges()}
        for u, v in remove:
            key = (min(u, v), max(u, v))
            if key not in es:
                raise GraphError(f"edge {key} not present")
            es.discard(key)
        es.update((min(u, v), max(u, v)) for u, v in add)
        return from_edges(self.n, es)

    def permute(self, perm: Sequence[int]) -> Graph:
        """Relabel vertex ``v`` as ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("perm must be a permutation of 0..n-1")
        return from_edges(self.n, [(perm[u], perm[v]) for u, v in self.edges()])

    def is_connected(self) -> bool:
        return self.n == 0 or len(_bfs_layers(self, 0)) == self.n

    def is_tree(self) -> bool:
        return self.n >= 1 and self.num_edges == self.n - 1 and self.is_connected()

    def is_unicyclic(self) -> bool:
        return self.n >= 3 and self.num_edges == self.n and self.is_connected()

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "edges": [list(e) for e in self.edges()]})


def from_edges(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a graph on ``0..n-1``; duplicate edges are merged."""
    if n < 0:
        raise GraphError("vertex count must be non-negative")
    adj: list[set[int]] = [set() for _ in range(n)]
    for e in edges:
        u, v = int(e[0]), int(e[1])
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        adj[u].add(v)
        adj[v].add(u)
    return Graph(n, tuple(tuple(sorted(a)) for a in adj))


def from_json(text: str) -> Graph:
    """Parse the ``{"n": int, "edges": [[u, v], ...]}`` form."""
    try:
        obj = json.loads(text)
        return from_edges(int(obj["n"]), obj["edges"])
    except (KeyError, TypeError, json.JSONDecodeError) as exc:
        raise GraphError(f"bad JSON graph: {exc}") from exc


def path_graph(n: int) -> Graph:
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with centre 0."""
    return from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_graph(n: int) -> Graph:
    return from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def _bfs_layers(g: Graph, source: int) -> list[int]:
    """Distances from ``source`` to every reachable vertex, in visit order."""
    dist = [-1] * g.n
    dist[source] = 0
    order = [source]
    queue = deque(order)
    adj = g.adjacency
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in adj[u]:
            if dist[w] < 0:
                dist[w] = du
                order.append(w)
                queue.append(w)
    return order


def distances_from(g: Graph, source: int) -> list[int]:
    """BFS distances from ``source``; ``-1`` marks unreachable vertices."""
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    adj = g.adjacency
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in adj[u]:
            if dist[w] < 0:
                dist[w] = du
                queue.append(w)
    return dist


def _distance_rows(g: Graph) -> list[list[int]]:
    rows = [distances_from(g, s) for s in range(g.n)]
    if g.n and min(rows[0]) < 0:
        raise DisconnectedGraphError("graph is disconnected; distances are infinite")
    return rows


def all_pairs_distances(g: Graph) -> np.ndarray:
    """Hop-count distance matrix of a connected graph."""
    return np.array(_distance_rows(g), dtype=np.int64).reshape(g.n, g.n)


def wiener_index(g: Graph) -> int:
    """Sum of distances over unordered vertex pairs."""
    return sum(sum(row) for row in _distance_rows(g)) // 2


@dataclass(frozen=True)
class CycleInfo:
    """The cycle of a unicyclic graph and the trees hanging off it.

    ``cycle`` lists the cycle vertices in cyclic order starting from the
    smallest label. ``attachment[i]`` holds the non-cycle vertices whose
    path to the cycle enters at ``cycle[i]``.
    """

    cycle: tuple[int, ...]
    attachment: tuple[frozenset[int], ...]

    @property
    def length(self) -> int:
        return len(self.cycle)

    def tree_size(self, i: int) -> int:
        """Order of the rooted tree at ``cycle[i]``, root included."""
        return len(self.attachment[i]) + 1


def unicyclic_info(g: Graph) -> CycleInfo | None:
    """Locate the unique cycle by peeling leaves; ``None`` if not unicyclic."""
    if not g.is_unicyclic():
        return None
    deg = g.degrees()
    removed = [False] * g.n
    stack = [v for v in range(g.n) if deg[v] == 1]
    while stack:
        v = stack.pop()
        removed[v] = True
        for w in g.adjacency[v]:
            if not removed[w]:
                deg[w] -= 1
                if deg[w] == 1:
                    stack.append(w)
    on_cycle = [v for v in range(g.n) if not removed[v]]
    # walk the cycle in order
    start = on_cycle[0]
    cycle = [start]
    prev, cur = -1, start
    while True:
        nxt = min(w for w in g.adjacency[cur] if not removed[w] and w != prev)
        if nxt == start:
            break
        cycle.append(nxt)
        prev, cur = cur, nxt
        if len(cycle) > len(on_cycle):
            raise AssertionError("cycle walk did not close")
    in_cycle = set(cycle)
    attachment = []
    for r in cycle:
        seen = {r}
        queue = deque([r])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if w not in seen and w not in in_cycle:
                    seen.add(w)
                    queue.append(w)
        seen.discard(r)
        attachment.append(frozenset(seen))
    return CycleInfo(tuple(cycle), tuple(attachment))

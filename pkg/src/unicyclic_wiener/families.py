"""Named graph families: the brooms-on-a-cycle configurations, A(n, m), and
the minimum-Wiener graphs for trees and unicyclic graphs.

Labelling convention for the cycle families: cycle vertices first in
cyclic order, then for each attached broom its path vertices from the
root outwards, then its leaves.
"""

from __future__ import annotations

from dataclasses import astuple, dataclass
from typing import Literal

from .errors import DomainError
from .graph import Graph, cycle_graph, from_edges
from .matching import matching_number


def _check_nonneg(p) -> None:
    if any(x < 0 for x in astuple(p)):
        raise DomainError(f"all parameters must be non-negative: {p}")


@dataclass(frozen=True)
class G3Params:
    """Triangle with brooms (path j, a leaves), (k, b), (l, c) at its vertices."""

    a: int = 0
    b: int = 0
    c: int = 0
    j: int = 0
    k: int = 0
    l: int = 0  # noqa: E741

    def __post_init__(self) -> None:
        _check_nonneg(self)

    @classmethod
    def reduced(cls, a: int, j: int) -> G3Params:
        """G3_{a,j}: only the first vertex carries a broom."""
        return cls(a=a, j=j)

    @property
    def order(self) -> int:
        return 3 + self.a + self.b + self.c + self.j + self.k + self.l

    def is_reduced(self) -> bool:
        return self.b == self.c == self.k == self.l == 0


@dataclass(frozen=True)
class G4Params:
    """Four-cycle with brooms A(j, a), B(k, b), C(l, c), D(h, d) in cyclic order.

    A and C are opposite, as are B and D.
    """

    a: int = 0
    b: int = 0
    c: int = 0
    d: int = 0
    h: int = 0
    j: int = 0
    k: int = 0
    l: int = 0  # noqa: E741

    def __post_init__(self) -> None:
        _check_nonneg(self)

    @classmethod
    def reduced(cls, a: int, c: int, j: int) -> G4Params:
        """G4_{a,c,j}: broom (j, a) at one vertex, c pendants at the opposite one."""
        return cls(a=a, c=c, j=j)

    @property
    def order(self) -> int:
        return 4 + self.a + self.b + self.c + self.d + self.h + self.j + self.k + self.l

    def is_reduced(self) -> bool:
        return self.b == self.d == self.h == self.k == self.l == 0


@dataclass(frozen=True)
class AnmParams:
    n: int
    m: int

    def __post_init__(self) -> None:
        if self.m < 1 or self.n < 2 * self.m:
            raise DomainError(f"A(n, m) needs 1 <= m and n >= 2m, got (n, m) = ({self.n}, {self.m})")


@dataclass(frozen=True)
class DuZhouParams:
    n: int
    m: int
    kind: Literal["tree-min", "unicyclic-min"] = "tree-min"

    def __post_init__(self) -> None:
        if self.kind not in ("tree-min", "unicyclic-min"):
            raise DomainError(f"unknown kind {self.kind!r}")
        if self.m < 2 or self.n < 2 * self.m:
            raise DomainError(f"need 2 <= m <= n/2, got (n, m) = ({self.n}, {self.m})")


def _brooms(n_cycle: int, brooms: list[tuple[int, int]]) -> Graph:
    """Cycle ``0..n_cycle-1`` with broom (path_len, leaves) at each cycle vertex."""
    edges = list(cycle_graph(n_cycle).edges())
    nxt = n_cycle
    for root, (path_len, leaves) in enumerate(brooms):
        tip = root
        for _ in range(path_len):
            edges.append((tip, nxt))
            tip = nxt
            nxt += 1
        for _ in range(leaves):
            edges.append((tip, nxt))
            nxt += 1
    return from_edges(nxt, edges)


def build_g3(p: G3Params) -> Graph:
    return _brooms(3, [(p.j, p.a), (p.k, p.b), (p.l, p.c)])


def build_g4(p: G4Params) -> Graph:
    return _brooms(4, [(p.j, p.a), (p.k, p.b), (p.l, p.c), (p.h, p.d)])


def build_anm(p: AnmParams) -> Graph:
    """Path on 2m-1 vertices with the remaining vertices as pendants at its ends.

    For even n the ends get (n-2m+2)/2 and (n-2m)/2 pendants; for odd n
    both get (n-2m+1)/2. With m = 1 the path is a single vertex and the
    result is a star.
    """
    n, m = p.n, p.m
    spine = 2 * m - 1
    edges = [(i, i + 1) for i in range(spine - 1)]
    if n % 2 == 0:
        left, right = (n - 2 * m + 2) // 2, (n - 2 * m) // 2
    else:
        left = right = (n - 2 * m + 1) // 2
    nxt = spine
    for end, count in ((0, left), (spine - 1, right)):
        for _ in range(count):
            edges.append((end, nxt))
            nxt += 1
    assert nxt == n
    return from_edges(n, edges)


def build_duzhou_min_tree(p: DuZhouParams) -> Graph:
    """Star of order n-m+1 with m-1 of its leaves extended by one vertex."""
    n, m = p.n, p.m
    star_leaves = n - m
    edges = [(0, i) for i in range(1, star_leaves + 1)]
    nxt = star_leaves + 1
    for leaf in range(1, m):
        edges.append((leaf, nxt))
        nxt += 1
    return from_edges(n, edges)


def c5_with_pendant() -> Graph:
    return from_edges(6, [*cycle_graph(5).edges(), (0, 5)])


def build_duzhou_min_unicyclic(p: DuZhouParams) -> Graph:
    """Star of order n-m, triangle on its centre, m-2 leaves extended.

    (n, m) = (6, 3) is the exception: C5 with a pendant vertex.
    """
    n, m = p.n, p.m
    if (n, m) == (6, 3):
        return c5_with_pendant()
    star_leaves = n - m - 1
    edges = [(0, 1), (1, 2), (0, 2)]
    edges += [(0, 2 + i) for i in range(1, star_leaves + 1)]
    nxt = 3 + star_leaves
    for i in range(1, m - 1):
        edges.append((2 + i, nxt))
        nxt += 1
    assert nxt == n
    return from_edges(n, edges)


def params_to_nm(p: G3Params | G4Params) -> tuple[int, int]:
    """Order and matching number of a family member.

    The closed matching formulas (2 + floor(j/2) for G3_{a,j},
    2 + floor((j+1)/2) for G4_{a,c,j}) hold whenever a >= 1; everything
    else is measured on the built graph.
    """
    if isinstance(p, G3Params):
        if p.is_reduced() and p.a >= 1:
            return p.order, 2 + p.j // 2
        return p.order, matching_number(build_g3(p))
    if p.is_reduced() and p.a >= 1:
        return p.order, 2 + (p.j + 1) // 2
    return p.order, matching_number(build_g4(p))

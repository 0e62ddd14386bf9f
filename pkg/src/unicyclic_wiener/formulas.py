"""Closed forms, bounds and difference identities in exact rationals.

Every public function evaluates with :class:`fractions.Fraction` and only
returns after checking the value is an integer.
"""

from __future__ import annotations

from fractions import Fraction as F
from math import comb

from .errors import DomainError
from .families import G3Params, G4Params, build_g3, build_g4
from .graph import Graph


def _integral(x: F | int, what: str) -> int:
    x = F(x)
    if x.denominator != 1:
        raise ArithmeticError(f"{what} evaluated to non-integer {x}")
    return x.numerator


def _check_nm(n: int, m: int, m_min: int = 2) -> None:
    if not (m_min <= m <= n // 2):
        raise DomainError(f"need {m_min} <= m <= floor(n/2), got (n, m) = ({n}, {m})")


# -- Wiener index of the broom configurations -------------------------------


def wiener_g3_closed(p: G3Params) -> int:
    a, b, c, j, k, l = p.a, p.b, p.c, p.j, p.k, p.l  # noqa: E741
    w = (
        # the three cycle-vertex-to-tip paths, pairwise glued through the triangle
        comb(k + l + 3, 3) + comb(j + k + 3, 3) + comb(l + j + 3, 3)
        - comb(k + 2, 3) - comb(l + 2, 3) - comb(j + 2, 3)
        # leaves within one star
        + 2 * (comb(a, 2) + comb(b, 2) + comb(c, 2))
        # leaves of two different stars
        + a * c * (l + j + 3) + a * b * (k + j + 3) + b * c * (k + l + 3)
        # leaves against the path vertices
        + (a + b + c) * (comb(j + 2, 2) + comb(k + 2, 2) + comb(l + 2, 2))
        + a * (k + l + 2) * (j + 1) + b * (k + 1) * (l + j + 2) + c * (l + 1) * (k + j + 2)
    )
    return _integral(w, "W(G3)")


def wiener_g4_closed(p: G4Params) -> int:
    a, b, c, d, h, j, k, l = p.a, p.b, p.c, p.d, p.h, p.j, p.k, p.l  # noqa: E741
    w = (
        # within each path (root included)
        comb(h + 2, 3) + comb(j + 2, 3) + comb(k + 2, 3) + comb(l + 2, 3)
        # between the paths: adjacent pairs, then the two opposite pairs
        + F((k + 1) * (j + 1) * (k + j + 2), 2)
        + F((k + 1) * (l + 1) * (k + l + 2), 2)
        + F((k + 1) * (h + 1) * (k + h + 4), 2)
        + F((l + 1) * (j + 1) * (l + j + 4), 2)
        + F((h + 1) * (j + 1) * (h + j + 2), 2)
        + F((h + 1) * (l + 1) * (l + h + 2), 2)
        # leaves of two different stars
        + a * b * (k + j + 3) + b * c * (k + l + 3) + c * d * (l + h + 3) + a * d * (h + j + 3)
        + a * c * (j + l + 4) + b * d * (k + h + 4)
        # leaves within one star
        + 2 * (comb(a, 2) + comb(b, 2) + comb(c, 2) + comb(d, 2))
        # leaves against path vertices
        + (a + b + c + d) * (comb(h + 2, 2) + comb(j + 2, 2) + comb(k + 2, 2) + comb(l + 2, 2))
        + a * (j + 1) * (k + h + 2) + b * (k + 1) * (l + j + 2)
        + c * (l + 1) * (k + h + 2) + d * (h + 1) * (l + j + 2)
        + a * (j + 2) * (l + 1) + b * (k + 2) * (h + 1)
        + c * (l + 2) * (j + 1) + d * (h + 2) * (k + 1)
    )
    return _integral(w, "W(G4)")


# -- collapse identities -----------------------------------------------------


def collapse_g3(p: G3Params) -> G3Params:
    """Merge all three paths into the broom at the first vertex."""
    return G3Params(a=p.a, b=p.b, c=p.c, j=p.j + p.k + p.l, k=0, l=0)


def delta_g3_collapse(p: G3Params) -> int:
    """W(collapse_g3(p)) - W(p) as a polynomial; requires a = max(a, b, c)."""
    a, b, c, j, k, l = p.a, p.b, p.c, p.j, p.k, p.l  # noqa: E741
    if a < max(b, c):
        raise DomainError(f"delta_g3_collapse needs a = max(a, b, c), got {p}")
    return (
        j * k * l + j * k + j * l + k * l + k * (a - b) * c + l * (a - c) * b
        + a * k * l + b * j * l + c * j * k + k * (a - b) + l * (a - c)
    )


def _parity(p: G4Params) -> int:
    return (p.a + p.b + p.c + p.d) % 2


def collapse_g4(p: G4Params) -> G4Params:
    """Gather all leaves onto two opposite vertices, all path length onto one."""
    s, eps = p.a + p.b + p.c + p.d, _parity(p)
    return G4Params(a=(s + eps) // 2, c=(s - eps) // 2, j=p.h + p.j + p.k + p.l)


def delta_g4_collapse(p: G4Params) -> int:
    """W(collapse_g4(p)) - W(p) as the term-wise non-negative polynomial."""
    a, b, c, d, h, j, k, l = p.a, p.b, p.c, p.d, p.h, p.j, p.k, p.l  # noqa: E741
    e = _parity(p)
    w = (
        h * j * k + h * j * l + h * k * l + j * k * l
        + 2 * h * j + h * k + 2 * h * l + 2 * j * k + j * l + 2 * k * l
        + a * h * k + a * h * l + a * k * l + b * h * j + b * h * l + b * j * l
        + c * h * j + c * h * k + c * j * k + d * j * k + d * j * l + d * k * l
        + a * h + a * k + b * j + b * l + c * h + c * k + d * j + d * l
        + F((d - a - b - c - 1) ** 2 - (e - 1) ** 2, 4) * h
        + F((a - b - c - d - 1) ** 2 - (e - 1) ** 2, 4) * j
        + F((b - a - c - d - 1) ** 2 - (e - 1) ** 2, 4) * k
        + F((c - a - b - d - 1) ** 2 - (e - 1) ** 2, 4) * l
        + F((a - c) ** 2 + (b - d) ** 2 - e**2, 2)
    )
    return _integral(w, "delta_g4_collapse")


# -- bounds ------------------------------------------------------------------


def bound_max_unicyclic(n: int, m: int) -> int:
    """Maximum Wiener index over unicyclic graphs of order n, matching number m."""
    _check_nm(n, m)
    if n <= 2 * m + 2:
        w = 2 - F(8, 3) * m**3 + 2 * m**2 + F(5, 3) * m + 2 * m**2 * n - 3 * m * n - 2 * n + n**2
    elif n % 2 == 1:
        w = (F(9, 2) - n - F(2, 3) * m**3 + F(1, 2) * n**2 - 2 * n * m + 2 * m**2
             + F(1, 2) * m * n**2 - F(11, 6) * m)
    else:
        w = (6 - n - F(2, 3) * m**3 + F(1, 2) * n**2 - 2 * n * m + 2 * m**2
             + F(1, 2) * m * n**2 - F(7, 3) * m)
    return _integral(w, f"bound_max_unicyclic({n}, {m})")


def extremal_params_predicted(n: int, m: int) -> list[G3Params | G4Params]:
    """Parameters of the graphs attaining :func:`bound_max_unicyclic`."""
    _check_nm(n, m)
    if (n, m) == (4, 2):
        return [G4Params.reduced(0, 0, 0), G3Params.reduced(0, 1)]
    if (n, m) == (6, 2):
        return [G4Params.reduced(1, 1, 0), G3Params.reduced(2, 1)]
    if n <= 2 * m + 2:
        return [G3Params.reduced(n - 2 * m, 2 * m - 3)]
    if n % 2 == 1:
        return [G4Params.reduced((n + 1) // 2 - m, (n - 1) // 2 - m, 2 * m - 4)]
    return [G4Params.reduced(n // 2 - m, n // 2 - m, 2 * m - 4)]


def extremal_set_predicted(n: int, m: int) -> list[Graph]:
    return [build_g3(p) if isinstance(p, G3Params) else build_g4(p)
            for p in extremal_params_predicted(n, m)]


def bound_dankelmann_min(n: int, m: int) -> int:
    """Minimum Wiener index of a connected graph of order n, matching number m.

    For m < floor(n/2) the minimiser K_m + (n-m)K_1 has every pair at
    distance 1 except the C(n-m, 2) pairs of independent vertices, giving
    C(n,2) + C(n-m,2) = 2C(n,2) - mn + C(m+1,2).
    """
    _check_nm(n, m, m_min=1)
    if m == n // 2:
        return comb(n, 2)
    return 2 * comb(n, 2) - m * n + comb(m + 1, 2)


def bound_dankelmann_min_printed(n: int, m: int) -> int:
    """2C(n,2) - mn + C(m,2): the commonly quoted form, which undershoots the
    value attained by K_m + (n-m)K_1 by exactly m when m < floor(n/2)."""
    _check_nm(n, m, m_min=1)
    if m == n // 2:
        return comb(n, 2)
    return 2 * comb(n, 2) - m * n + comb(m, 2)


def bound_dankelmann_max(n: int, m: int) -> int:
    """Maximum Wiener index of a connected graph of order n, matching number m."""
    _check_nm(n, m, m_min=1)
    base = comb(2 * m, 3) + comb(2 * m, 2) * (n - 2 * m + 1)
    if n % 2 == 0:
        w = base + 2 * m * F(n - 2 * m + 2, 2) * F(n - 2 * m, 2) + F(1, 2) * (n - 2 * m) ** 2
    else:
        s = F(n - 2 * m + 1, 2)
        w = base + 2 * m * s**2 + 4 * comb(_integral(s, "star size"), 2)
    return _integral(w, f"bound_dankelmann_max({n}, {m})")


def bound_duzhou_tree_min(n: int, m: int) -> int:
    _check_nm(n, m)
    return n**2 + (m - 3) * n - 3 * m + 4


def bound_duzhou_unicyclic_min(n: int, m: int) -> int:
    _check_nm(n, m)
    if (n, m) == (6, 3):
        return 26
    return n**2 + (m - 4) * n - 3 * m + 6


# -- final comparisons between candidate extremal graphs ----------------------


def compare_g4_parity(n: int, m: int) -> int:
    """W(G4 with j = 2m-4) minus W(G4 with j = 2m-5), both of order n.

    Even n compares G4_{n/2-m, n/2-m, 2m-4} with G4_{n/2-m+1, n/2-m, 2m-5};
    odd n compares G4_{(n+1)/2-m, (n-1)/2-m, 2m-4} with
    G4_{(n+1)/2-m, (n+1)/2-m, 2m-5}.
    """
    _check_nm(n, m)
    if 2 * m - 5 < 0:
        raise DomainError(f"comparand with path length 2m-5 = {2 * m - 5} does not exist")
    if n % 2 == 1 and n < 2 * m + 1:
        raise DomainError(f"G4 with c = (n-1)/2 - m < 0 does not exist for (n, m) = ({n}, {m})")
    w = F((n - 2 * m) * (n + 2 * m - 4), 4)
    if n % 2 == 1:
        w += m - F(13, 4)
    return _integral(w, "compare_g4_parity")


def compare_g4_parity_params(n: int, m: int) -> tuple[G4Params, G4Params]:
    """The two graphs whose difference :func:`compare_g4_parity` gives."""
    if n % 2 == 0:
        return (G4Params.reduced(n // 2 - m, n // 2 - m, 2 * m - 4),
                G4Params.reduced(n // 2 - m + 1, n // 2 - m, 2 * m - 5))
    return (G4Params.reduced((n + 1) // 2 - m, (n - 1) // 2 - m, 2 * m - 4),
            G4Params.reduced((n + 1) // 2 - m, (n + 1) // 2 - m, 2 * m - 5))


def compare_g4_vs_g3(n: int, m: int) -> int:
    """W(best G4 candidate) - W(G3_{n-2m, 2m-3}); with k = n - 2m this is
    1 + (k-3)(k+1)(m-1)/2 for odd n and 2 + (k^2-2k-4)(m-1)/2 for even n."""
    _check_nm(n, m)
    k = n - 2 * m
    if n % 2 == 1:
        if k < 1:
            raise DomainError("odd n needs n >= 2m + 1 for the G4 comparand")
        w = 1 + F((k - 3) * (k + 1) * (m - 1), 2)
    else:
        w = 2 + F((k * k - 2 * k - 4) * (m - 1), 2)
    return _integral(w, "compare_g4_vs_g3")


def compare_g4_vs_g3_nm_form(n: int, m: int) -> int:
    """The same difference written directly in n and m."""
    _check_nm(n, m)
    if n % 2 == 1:
        w = n + 2 * m**3 + n * m + F(1, 2) * m * n**2 - F(1, 2) * n**2 - F(7, 2) * m - 2 * n * m**2 + F(5, 2)
    else:
        w = 4 + n + 2 * m**3 + n * m + F(1, 2) * m * n**2 - F(1, 2) * n**2 - 4 * m - 2 * n * m**2
    return _integral(w, "compare_g4_vs_g3")


def compare_g4_vs_g3_params(n: int, m: int) -> tuple[G4Params, G3Params]:
    if n % 2 == 1:
        g4 = G4Params.reduced((n + 1) // 2 - m, (n - 1) // 2 - m, 2 * m - 4)
    else:
        g4 = G4Params.reduced(n // 2 - m, n // 2 - m, 2 * m - 4)
    return g4, G3Params.reduced(n - 2 * m, 2 * m - 3)

"""Graph invariants read off chromatic pairs polynomials, and hypercube tests."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .closed_forms import cycle_vertices, pairs_general
from .errors import DivisibilityError, DomainError, NotATreeError
from .graph import Graph, induced_subgraph, is_connected, remove_vertices, stats
from .poly import Poly, binomial_poly, divide_exact, linear
from .restrained import Restraint, rho

__all__ = [
    "CoefficientReport",
    "predicted_top_coefficients",
    "coefficient_report",
    "component_count_from_pairs",
    "disjoint_union_pairs",
    "recover_tree_degrees",
    "tree_formula",
    "satisfies_tree_formula",
    "pseudotree_slope_at_two",
    "pseudotree_slope_formula",
    "has_hypercube",
    "hypercube_sufficient",
    "hypercube_first_appearance",
    "chromatic_number",
]


@dataclass(frozen=True)
class CoefficientReport:
    """Magnitudes ``(a_{n+1}, a_n, a_{n-1})`` of the top coefficients of a pairs polynomial.

    The polynomial reads ``a_{n+1} k^{n+1} - a_n k^n + a_{n-1} k^{n-1} - ...``.
    """

    a_top3: tuple[Fraction, Fraction, Fraction]
    lowest_nonzero_power: int
    alternating: bool

    def to_json(self) -> dict:
        return {"a_top3": [str(a) for a in self.a_top3],
                "lowest_nonzero_power": self.lowest_nonzero_power,
                "alternating": self.alternating}


def predicted_top_coefficients(g: Graph) -> CoefficientReport:
    """Top coefficients from ``n``, ``m``, the triangle count and the degree squares alone."""
    st = stats(g)
    n, m, tri = st.vertex_count, st.edge_count, st.triangles
    sq = st.degree_square_sum
    a_top = Fraction(n, 2)
    a_next = Fraction(n + n * m + 2 * m, 2)
    a_third = Fraction(1, 2) * (Fraction(n * m * (m + 1), 2) + 2 * m * m - m
                                - (n + 3) * tri + Fraction(sq, 2))
    return CoefficientReport((a_top, a_next, a_third), st.components, True)


def coefficient_report(p: Poly, n: int) -> CoefficientReport:
    """The same report measured on an actual polynomial for an ``n``-vertex graph."""
    top = (p.coeff(n + 1), -p.coeff(n), p.coeff(n - 1) if n >= 1 else Fraction(0))
    low = p.lowest_power()
    alternating = low >= 0 and all(
        p.coeff(i) != 0 and (p.coeff(i) > 0) == ((n + 1 - i) % 2 == 0)
        for i in range(low, n + 2))
    return CoefficientReport(top, low, alternating)


def component_count_from_pairs(p: Poly) -> int:
    """Number of components of the graph whose pairs polynomial is ``p``."""
    if p.is_zero():
        raise DomainError("the zero polynomial is not a pairs polynomial")
    return p.lowest_power()


def disjoint_union_pairs(p1_pairs: Poly, p1_chrom: Poly, p2_pairs: Poly, p2_chrom: Poly) -> Poly:
    """Pairs polynomial of a disjoint union: an edge of ``C_k`` moves in exactly one part."""
    return p1_pairs * p2_chrom + p2_pairs * p1_chrom


def tree_formula(n: int, degrees) -> Poly:
    total = Poly()
    for d in degrees:
        total = total + linear(-2) ** d * linear(-1) ** (n - d - 1)
    return binomial_poly(2) * total


def satisfies_tree_formula(g: Graph) -> bool:
    """Whether ``g``'s pairs polynomial has the tree shape for its own degrees."""
    if g.n == 0:
        return False
    degs = g.degrees()
    if any(d > g.n - 1 for d in degs):
        return False
    return pairs_general(g) == tree_formula(g.n, degs)


def recover_tree_degrees(p: Poly, n: int) -> list[int]:
    """Degree multiset (ascending) of an ``n``-vertex tree with pairs polynomial ``p``.

    Peels off the number ``n_d`` of degree-``d`` vertices for ``d = 1, 2, ...``
    by dividing out ``(k-2)^(d-1)`` and differentiating at ``k = 2``.
    """
    if n < 1:
        raise NotATreeError("a tree needs at least one vertex")
    try:
        q = divide_exact(p, binomial_poly(2))
    except DivisibilityError as exc:
        raise NotATreeError("not a multiple of C(k,2)") from exc
    if n == 1:
        if q != Poly([1]):
            raise NotATreeError("not the pairs polynomial of the one-vertex tree")
        return [0]
    counts: dict[int, int] = {}
    found = 0
    for d in range(1, n):
        rest = q
        for i, c in counts.items():
            rest = rest - c * linear(-2) ** i * linear(-1) ** (n - i - 1)
        try:
            reduced = divide_exact(rest, linear(-2) ** (d - 1))
        except DivisibilityError as exc:
            raise NotATreeError(f"residual not divisible by (k-2)^{d - 1}") from exc
        nd = reduced.derivative()(2)
        if nd.denominator != 1 or nd < 0 or found + nd > n:
            raise NotATreeError(f"recovered count {nd} for degree {d} is invalid")
        if nd:
            counts[d] = int(nd)
            found += int(nd)
        if found == n:
            break
    degrees = sorted(d for d, c in counts.items() for _ in range(c))
    if found != n or sum(degrees) != 2 * (n - 1) or tree_formula(n, degrees) != p:
        raise NotATreeError("polynomial does not match any tree degree sequence")
    return degrees


def _check_pseudotree(g: Graph) -> None:
    if g.n < 3 or g.n != g.m or not is_connected(g):
        raise DomainError("graph is not a pseudotree (connected with n = m)")


def pseudotree_slope_at_two(g: Graph) -> Fraction:
    """Derivative of the pairs polynomial at ``k = 2`` for a pseudotree."""
    _check_pseudotree(g)
    return pairs_general(g).derivative()(2)


def pseudotree_slope_formula(g: Graph) -> Fraction:
    """The same slope from cycle length, degree-2 cycle vertices and leaf count."""
    _check_pseudotree(g)
    cyc = cycle_vertices(g)
    ell = len(cyc)
    ell2 = sum(1 for v in cyc if g.degree(v) == 2)
    n1 = sum(1 for v in range(g.n) if g.degree(v) == 1)
    if ell % 2 == 0:
        return Fraction(ell2 + n1)
    return Fraction(-ell2)


def chromatic_number(g: Graph) -> int:
    """Smallest ``j`` with a proper ``j``-coloring, found by evaluating ``pi_G`` at ``j = 0, 1, ...``."""
    p = rho(g)
    j = 0
    while p(j) <= 0:
        j += 1
    return j


def _restricted_growth_colorings(g: Graph, limit: int):
    """Proper colorings of ``g`` with colors ``1..limit``, one per color permutation class."""
    color = [0] * g.n

    def go(i, top):
        if i == g.n:
            yield tuple(color)
            return
        for c in range(1, min(top + 1, limit) + 1):
            if any(color[u] == c for u in g.adj[i] if u < i):
                continue
            color[i] = c
            yield from go(i + 1, max(top, c))
        color[i] = 0

    yield from go(0, 0)


def has_hypercube(g: Graph, s: int, k: int) -> bool:
    """Whether ``C_k(G)`` contains an induced ``s``-cube.

    Searches for a support ``U`` of size ``s`` and a coloring ``c`` of ``G[U]``
    into ``floor(k/2)`` colors such that the rest of ``G`` can be colored
    avoiding ``{2c(u)-1, 2c(u)}`` next to every ``u``.
    """
    if s < 0 or k < 0:
        raise DomainError("s and k must be non-negative")
    if s > g.n:
        return False
    if s == 0:
        return rho(g)(k) > 0
    half = k // 2
    if half == 0:
        return False
    for U in combinations(range(g.n), s):
        sub = induced_subgraph(g, U)
        rest = [v for v in range(g.n) if v not in U]
        pos = {v: i for i, v in enumerate(rest)}
        remainder = remove_vertices(g, U)
        for c in _restricted_growth_colorings(sub, half):
            forbidden: dict[int, set[int]] = {}
            for i, u in enumerate(U):
                for v in g.adj[u]:
                    if v in pos:
                        forbidden.setdefault(pos[v], set()).update((2 * c[i] - 1, 2 * c[i]))
            if rho(remainder, Restraint(forbidden))(k) > 0:
                return True
    return False


def hypercube_sufficient(g: Graph, s: int, k: int) -> bool:
    """Independent ``U`` of size ``s`` with ``chi(G - U) <= k - 2`` (a sufficient condition)."""
    if s < 0 or s > g.n:
        return False
    for U in combinations(range(g.n), s):
        if any(g.has_edge(u, v) for u, v in combinations(U, 2)):
            continue
        if chromatic_number(remove_vertices(g, U)) <= k - 2:
            return True
    return False


def hypercube_first_appearance(g: Graph, s_max: int, k_max: int) -> list[int | None]:
    """For each ``s <= s_max`` the least ``k <= k_max`` with an induced ``Q_s`` (None if absent)."""
    table: list[int | None] = []
    k = 1
    for s in range(s_max + 1):
        # cubes of dimension s contain cubes of dimension s - 1, so start from the previous k
        while k <= k_max and not has_hypercube(g, s, k):
            k += 1
        table.append(k if k <= k_max else None)
    return table

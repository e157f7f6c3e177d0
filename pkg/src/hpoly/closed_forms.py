"""Closed and semi-closed formulas that bypass generic generator enumeration.

Every function here has a generic counterpart in :mod:`hpoly.generators`;
the test suite checks they agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Callable, Iterator, Sequence

from .errors import DomainError
from .graph import Graph, is_connected, path_graph, remove_vertices
from .poly import K, ZERO, Poly, binomial_poly, divide_exact, falling_factorial, linear
from .restrained import Restraint, rho

__all__ = [
    "FamilySpec",
    "family_spec",
    "chromatic_closed",
    "pairs_closed",
    "clique_closed",
    "pairs_general",
    "clique_general",
    "c4_count_poly",
    "c6_count_poly",
    "C6_ROWS",
    "C6_PRINTED_ROWS",
    "sigma_tau",
    "cycle_vertices",
]

FAMILIES = ("null", "complete", "tree", "cycle", "pseudotree")


@dataclass(frozen=True)
class FamilySpec:
    """Parameters of one of the graph families with closed-form polynomials.

    For pseudotrees ``degree_sequence`` lists the ``cycle_length`` cycle
    vertices first, then the remaining vertices.
    """

    family: str
    n: int
    degree_sequence: tuple[int, ...] = ()
    cycle_length: int = 0

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise DomainError(f"unknown family {self.family!r}")
        if self.n < 0:
            raise DomainError("n must be non-negative")
        ds = self.degree_sequence
        if self.family == "tree":
            if self.n < 1 or len(ds) != self.n or sum(ds) != 2 * (self.n - 1):
                raise DomainError(f"{ds} is not a tree degree sequence on {self.n} vertices")
            if self.n > 1 and min(ds) < 1:
                raise DomainError("tree vertices need degree >= 1")
        if self.family == "cycle" and self.n < 3:
            raise DomainError("cycles need at least 3 vertices")
        if self.family == "pseudotree":
            ell = self.cycle_length
            if len(ds) != self.n or sum(ds) != 2 * self.n or not 3 <= ell <= self.n:
                raise DomainError(f"{ds} with cycle length {ell} is not a pseudotree spec")
            if any(d < 2 for d in ds[:ell]) or any(d < 1 for d in ds[ell:]):
                raise DomainError("cycle vertices need degree >= 2, others >= 1")


def cycle_vertices(g: Graph) -> list[int]:
    """Vertices left after repeatedly deleting degree-1 vertices (the cycle of a pseudotree)."""
    alive = set(range(g.n))
    deg = g.degrees()
    stack = [v for v in alive if deg[v] <= 1]
    while stack:
        v = stack.pop()
        if v not in alive:
            continue
        alive.discard(v)
        for u in g.adj[v]:
            if u in alive:
                deg[u] -= 1
                if deg[u] == 1:
                    stack.append(u)
    return sorted(alive)


def family_spec(g: Graph) -> FamilySpec:
    """Recognise ``g`` as a member of one of the closed-form families."""
    n, m = g.n, g.m
    degs = g.degrees()
    if m == 0:
        return FamilySpec("null", n)
    if m == n * (n - 1) // 2:
        return FamilySpec("complete", n)
    if is_connected(g):
        if m == n - 1:
            return FamilySpec("tree", n, tuple(sorted(degs, reverse=True)))
        if m == n:
            if all(d == 2 for d in degs):
                return FamilySpec("cycle", n)
            cyc = cycle_vertices(g)
            rest = [v for v in range(n) if v not in set(cyc)]
            ds = tuple(sorted((degs[v] for v in cyc), reverse=True)) + \
                tuple(sorted((degs[v] for v in rest), reverse=True))
            return FamilySpec("pseudotree", n, ds, len(cyc))
    raise DomainError("graph is not null, complete, a tree, a cycle or a pseudotree")


def _cycle_chromatic(n: int) -> Poly:
    return linear(-1) ** n + linear(-1) * (-1) ** n


def _tree_sum(a: int, n: int, degrees: Sequence[int]) -> Poly:
    """``sum_v (k - a)^deg(v) (k - 1)^(n - deg(v) - 1)``."""
    total = ZERO
    for d in degrees:
        total = total + linear(-a) ** d * linear(-1) ** (n - d - 1)
    return total


def chromatic_closed(spec: FamilySpec) -> Poly:
    f, n = spec.family, spec.n
    if f == "null":
        return K ** n
    if f == "complete":
        return falling_factorial(0, n)
    if f == "tree":
        return K * linear(-1) ** (n - 1)
    if f == "cycle":
        return _cycle_chromatic(n)
    ell = spec.cycle_length
    return _cycle_chromatic(ell) * linear(-1) ** (n - ell)


def _cycle_pairs(n: int) -> Poly:
    return (Fraction(n, 2) * K * linear(-4) * linear(-1) ** (n - 1)
            + 2 * n * linear(-1) ** (n - 1)
            + (-1) ** n * n * linear(-1) * linear(-2))


def pairs_closed(spec: FamilySpec) -> Poly:
    """Edge count of ``C_k(G)`` for a family member, from its parameters alone."""
    f, n = spec.family, spec.n
    if f == "null":
        return n * binomial_poly(2) * K ** (n - 1) if n else ZERO
    if f == "complete":
        return falling_factorial(0, n + 1) * n / 2
    if f == "tree":
        return binomial_poly(2) * _tree_sum(2, n, spec.degree_sequence)
    if f == "cycle":
        return _cycle_pairs(n)
    ell = spec.cycle_length
    ds = spec.degree_sequence
    on_cycle = ZERO
    for d in ds[:ell]:
        on_cycle = on_cycle + linear(-2) ** (d - 2) * linear(-1) ** (n - ell - (d - 2))
    off_cycle = ZERO
    for d in ds[ell:]:
        off_cycle = off_cycle + linear(-2) ** d * linear(-1) ** (n - ell - d)
    return (_cycle_pairs(ell) / ell * on_cycle
            + binomial_poly(2) * divide_exact(_cycle_chromatic(ell), K) * off_cycle)


def clique_closed(spec: FamilySpec, t: int) -> Poly:
    """Induced ``K_t`` count for null graphs, complete graphs and trees."""
    if t < 2:
        raise DomainError("t must be at least 2")
    f, n = spec.family, spec.n
    if f == "null":
        return n * binomial_poly(t) * K ** (n - 1) if n else ZERO
    if f == "complete":
        return n * binomial_poly(t) * falling_factorial(t, n - 1) if n else ZERO
    if f == "tree":
        return binomial_poly(t) * _tree_sum(t, n, spec.degree_sequence)
    raise DomainError(f"no clique closed form for family {f!r}")


# ---------------------------------------------------------------------------
# restraint-sum formulas on arbitrary graphs

def _rho_roles(g: Graph, roles: Sequence[tuple[int, Sequence[int]]]) -> Poly:
    """``rho`` on ``G - U`` where each ``(u, colors)`` forbids ``colors`` on ``u``'s neighbours."""
    U = {u for u, _ in roles}
    forbidden: dict[int, set[int]] = {}
    for u, colors in roles:
        for v in g.adj[u]:
            if v not in U:
                forbidden.setdefault(v, set()).update(colors)
    keep = [v for v in range(g.n) if v not in U]
    pos = {v: i for i, v in enumerate(keep)}
    r = Restraint({pos[v]: cs for v, cs in forbidden.items()})
    return rho(remove_vertices(g, U), r)


def clique_general(g: Graph, t: int) -> Poly:
    """``C(k, t)`` times the sum over ``v`` of rho with ``N(v)`` forbidden ``1..t``."""
    if t < 2:
        raise DomainError("t must be at least 2")
    palette = range(1, t + 1)
    total = ZERO
    for v in range(g.n):
        total = total + _rho_roles(g, [(v, palette)])
    return binomial_poly(t) * total


def pairs_general(g: Graph) -> Poly:
    """Edge count of ``C_k(G)``: one generator per vertex, recolored between 1 and 2."""
    return clique_general(g, 2)


def c4_count_poly(g: Graph) -> Poly:
    """Induced 4-cycles of ``C_k(G)`` from the pair-supported generators."""
    total = ZERO
    c2, c3, c4 = binomial_poly(2), binomial_poly(3), binomial_poly(4)
    for u, v in combinations(range(g.n), 2):
        total = total + 6 * c4 * _rho_roles(g, [(u, (1, 2)), (v, (3, 4))])
        if not g.has_edge(u, v):
            total = total + 6 * c3 * _rho_roles(g, [(u, (1, 2)), (v, (1, 3))])
            total = total + c2 * _rho_roles(g, [(u, (1, 2)), (v, (1, 2))])
    return total


# --- 6-cycles: one row per sum term ------------------------------------------

def _pairs(adjacent: bool | None) -> Callable[[Graph], Iterator[tuple[int, ...]]]:
    def select(g):
        for u, v in combinations(range(g.n), 2):
            if adjacent is None or g.has_edge(u, v) == adjacent:
                yield (u, v)
    return select


def _all_triples(g):
    yield from combinations(range(g.n), 3)


def _triples_open_pair(g):
    """``(u, v, w)`` with ``uv`` a non-edge; ``w`` is the remaining vertex."""
    for t in combinations(range(g.n), 3):
        for u, v in combinations(t, 2):
            if not g.has_edge(u, v):
                (w,) = set(t) - {u, v}
                yield (u, v, w)


def _triples_open_centre(g):
    """``(u, v, w)`` with ``u`` adjacent to neither ``v`` nor ``w``."""
    for t in combinations(range(g.n), 3):
        for u in t:
            v, w = sorted(set(t) - {u})
            if not g.has_edge(u, v) and not g.has_edge(u, w):
                yield (u, v, w)


def _independent_triples(g):
    for t in combinations(range(g.n), 3):
        u, v, w = t
        if not (g.has_edge(u, v) or g.has_edge(u, w) or g.has_edge(v, w)):
            yield t


def _independent_triples_marked(g):
    """Independent triples, once per choice of the distinguished third vertex ``w``."""
    for t in _independent_triples(g):
        for w in t:
            u, v = sorted(set(t) - {w})
            yield (u, v, w)


@dataclass(frozen=True)
class C6Row:
    name: str
    multiplicity: int
    kappa: int
    selector: Callable[[Graph], Iterator[tuple[int, ...]]]
    colors: tuple[tuple[int, ...], ...]   # forbidden set for each role's neighbours


_S3 = ((1, 2, 3), (1, 2, 3))
_S4 = ((1, 2, 3), (1, 2, 4))
_S5 = ((1, 2, 3), (1, 4, 5))
_S6 = ((1, 2, 3), (4, 5, 6))
_T6 = ((1, 2), (3, 4), (5, 6))
_T5 = ((1, 2), (1, 3), (4, 5))
_T4A = ((1, 2), (1, 2), (3, 4))
_T4B = ((1, 2), (1, 3), (2, 4))
_T4C = ((1, 2), (1, 3), (1, 4))
_T3A = ((1, 2), (1, 3), (2, 3))
_T3B = ((1, 2), (1, 2), (1, 3))
_T2 = ((1, 2), (1, 2), (1, 2))

_COMMON_ROWS = (
    C6Row("uv3 adjacent", 1, 3, _pairs(True), _S3),
    C6Row("uv3 non-adjacent", 6, 3, _pairs(False), _S3),
    C6Row("uv4 adjacent", 12, 4, _pairs(True), _S4),
    C6Row("uv4 non-adjacent", 72, 4, _pairs(False), _S4),
    C6Row("uv5 adjacent", 60, 5, _pairs(True), _S5),
    C6Row("uv5 non-adjacent", 180, 5, _pairs(False), _S5),
    C6Row("uv6", 120, 6, _pairs(None), _S6),
    C6Row("uvw6", 360, 6, _all_triples, _T6),
    C6Row("uvw5", 240, 5, _triples_open_pair, _T5),
    C6Row("uvw4a", 24, 4, _triples_open_pair, _T4A),
    C6Row("uvw4b", 96, 4, _triples_open_centre, _T4B),
    C6Row("uvw4c", 96, 4, _independent_triples, _T4C),
)

#: Rows as they are printed in the literature's closed form; the two
#: 3-color independent-triple rows do not match exhaustive enumeration.
C6_PRINTED_ROWS = _COMMON_ROWS + (
    C6Row("uvw3a", 26, 3, _independent_triples, _T3A),
    C6Row("uvw3b", 48, 3, _independent_triples, _T3B),
    C6Row("uvw2", 4, 2, _independent_triples, _T2),
)

#: Rows whose multiplicities come from exhaustive generator enumeration.
C6_ROWS = _COMMON_ROWS + (
    C6Row("uvw3a", 24, 3, _independent_triples, _T3A),
    C6Row("uvw3b", 24, 3, _independent_triples_marked, _T3B),
    C6Row("uvw2", 4, 2, _independent_triples, _T2),
)


def c6_count_poly(g: Graph, rows: Sequence[C6Row] = C6_ROWS) -> Poly:
    """Induced 6-cycles of ``C_k(G)`` as a sum of restrained polynomials, row by row."""
    total = ZERO
    for row in rows:
        acc = ZERO
        for roles in row.selector(g):
            acc = acc + _rho_roles(g, list(zip(roles, row.colors)))
        if not acc.is_zero():
            total = total + row.multiplicity * binomial_poly(row.kappa) * acc
    return total


def sigma_tau(n: int, which: str) -> Poly:
    """The path polynomials ``sigma_n`` (both leaves avoid {1,2}) and ``tau_n`` (leaves avoid {1} and {2})."""
    if n < 1:
        raise DomainError("n must be at least 1")
    if which == "tau":
        return divide_exact(_cycle_chromatic(n + 2), K * linear(-1))
    if which != "sigma":
        raise DomainError(f"which must be 'sigma' or 'tau', got {which!r}")
    if n <= 3:
        r = {0: (1, 2)}
        r[n - 1] = (1, 2)
        return rho(path_graph(n), r)
    return (linear(-4) * linear(-1) ** (n - 1)
            + 2 * linear(-1) * sigma_tau(n - 3, "tau")
            + 2 * sigma_tau(n - 2, "tau"))

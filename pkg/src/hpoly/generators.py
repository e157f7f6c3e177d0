"""Minimal H-generators and the chromatic H-polynomial.

The search works one support ``U`` at a time.  Inside the coloring graph of
``G[U]`` (unbounded palette) it looks for induced copies of ``H`` whose
colorings are written in restricted-growth form: reading the colorings in
the search order of ``H`` and each coloring coordinate by coordinate, every
color first appears as one more than the largest color seen so far.  Each
orbit of labeled copies under color permutations has exactly one
representative of that form, so a representative using ``kappa`` colors
stands for ``kappa!`` labeled copies, i.e. ``kappa!/|Aut(H)|`` generators.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations
from math import factorial
from typing import Iterable

from .errors import BudgetExceeded, DomainError
from .graph import Graph, automorphism_count, bridges, components, induced_subgraph
from .poly import ZERO, Poly, binomial_poly
from .restrained import _normalize, _rho_key

__all__ = [
    "DEFAULT_NODE_BUDGET",
    "Generator",
    "enumerate_minimal_generators",
    "hpoly",
    "support_size_bound",
]

DEFAULT_NODE_BUDGET = 10 ** 7


@dataclass(frozen=True, order=True)
class Generator:
    """A minimal generator: support ``u_set`` and colorings listed in ``u_set`` order."""

    kappa: int
    u_set: tuple[int, ...]
    colorings: tuple[tuple[int, ...], ...]

    def to_json(self) -> dict:
        return {"u": list(self.u_set), "colorings": [list(c) for c in self.colorings],
                "kappa": self.kappa}

    def generator_graph(self) -> Graph:
        cs = self.colorings
        edges = [(i, j) for i, j in combinations(range(len(cs)), 2)
                 if sum(a != b for a, b in zip(cs[i], cs[j])) == 1]
        return Graph(len(cs), edges)

    def coloring_dicts(self) -> list[dict[int, int]]:
        return [dict(zip(self.u_set, c)) for c in self.colorings]


class _Counter:
    __slots__ = ("used", "limit")

    def __init__(self, limit):
        self.used = 0
        self.limit = limit

    def charge(self, amount=1):
        self.used += amount
        if self.used > self.limit:
            raise BudgetExceeded("generator search node", self.limit)


def support_size_bound(g: Graph, h: Graph) -> int:
    """Largest support size a minimal ``H``-generator in ``g`` can have.

    Each support vertex changes color along some edge of ``H``.  In a
    connected ``H`` a vertex changed along a single edge forces that edge to
    be a bridge, so ``|U| <= (|E(H)| + bridges) / 2`` and ``|U| <= |V(H)| - 1``.
    Components of a disconnected ``H`` may differ everywhere, so only
    ``|U| <= |V(G)|`` holds there.
    """
    if h.n == 1:
        return 0
    if len(components(h)) > 1:
        return g.n
    b = len(bridges(h))
    return min(g.n, h.n - 1, (h.m + b) // 2)


def _plan(h: Graph):
    """Order ``H``'s vertices so each has as many already-placed neighbours as possible."""
    order: list[int] = []
    placed: set[int] = set()
    while len(order) < h.n:
        best = max((v for v in range(h.n) if v not in placed),
                   key=lambda v: (len(h.adj[v] & placed), h.degree(v), -v))
        order.append(best)
        placed.add(best)
    pos = {v: i for i, v in enumerate(order)}
    parents = []
    for v in order:
        earlier = [pos[u] for u in h.adj[v] if pos[u] < pos[v]]
        parents.append(min(earlier) if earlier else None)
    adjreq = [[order[i] in h.adj[order[j]] for i in range(j)] for j in range(h.n)]
    # last position holding a component root; pruning applies after it
    last_root = max(j for j, p in enumerate(parents) if p is None)
    return order, parents, adjreq, last_root


def _embeddings(s: int, umasks: tuple[int, ...], plan, counter: _Counter) -> list[tuple]:
    """Restricted-growth induced copies of ``H`` in the coloring graph of ``G[U]``."""
    order, parents, adjreq, last_root = plan
    N = len(order)
    full = (1 << s) - 1
    nbrs = [[j for j in range(s) if umasks[i] >> j & 1] for i in range(s)]
    cols: list = [None] * N
    found: list[tuple] = []

    def compatible(x, j):
        req = adjreq[j]
        for i in range(j):
            q = cols[i]
            d = 0
            for a, b in zip(x, q):
                if a != b:
                    d += 1
                    if d > 1:
                        break
            if req[i]:
                if d != 1:
                    return False
            elif d < 2:
                return False
        return True

    def diff_mask(x):
        first = cols[0]
        m = 0
        for i in range(s):
            if x[i] != first[i]:
                m |= 1 << i
        return m

    def roots(maxc):
        """Proper colorings of G[U] continuing the restricted-growth sequence."""
        x = [0] * s

        def go(i, mc):
            if i == s:
                yield tuple(x), mc
                return
            for c in range(1, mc + 2):
                if any(x[j] == c for j in nbrs[i] if j < i):
                    continue
                x[i] = c
                yield from go(i + 1, max(mc, c))
            x[i] = 0

        yield from go(0, maxc)

    def place(j, maxc, varied):
        counter.charge()
        if j == N:
            if varied == full:
                found.append(tuple(cols))
            return
        if j > last_root and bin(full & ~varied).count("1") > N - j:
            return
        p_idx = parents[j]
        if p_idx is None:
            for x, mc in roots(maxc):
                if j and not compatible(x, j):
                    continue
                cols[j] = x
                place(j + 1, mc, varied | (diff_mask(x) if j else 0))
            cols[j] = None
            return
        p = cols[p_idx]
        for i in range(s):
            taken = {p[u] for u in nbrs[i]}
            for c in range(1, maxc + 2):
                if c == p[i] or c in taken:
                    continue
                x = p[:i] + (c,) + p[i + 1:]
                if not compatible(x, j):
                    continue
                cols[j] = x
                place(j + 1, max(maxc, c), varied | diff_mask(x))
        cols[j] = None

    place(0, 0, 0)
    # hand back colorings indexed by H's own vertex labels
    result = []
    for emb in found:
        by_vertex = [None] * N
        for j, v in enumerate(order):
            by_vertex[v] = emb[j]
        result.append(tuple(by_vertex))
    return result


_embedding_cache: dict = {}


def _cached_embeddings(h_key, s, umasks, plan, counter):
    key = (h_key, s, umasks)
    hit = _embedding_cache.get(key)
    if hit is not None:
        embs, cost = hit
        counter.charge(cost)
        return embs
    start = counter.used
    embs = _embeddings(s, umasks, plan, counter)
    _embedding_cache[key] = (embs, counter.used - start)
    return embs


def _supports(g: Graph, h: Graph):
    for size in range(support_size_bound(g, h) + 1):
        yield from combinations(range(g.n), size)


def _h_key(h: Graph):
    return (h.n, tuple(h.sorted_edges()))


def _support_terms(g: Graph, h: Graph, supports, budget: int):
    """Aggregate ``{(kappa, rho instance): weight}`` over the given supports."""
    plan = _plan(h)
    hk = _h_key(h)
    aut = automorphism_count(h)
    counter = _Counter(budget)
    masks = g.masks()
    terms: dict = {}
    for U in supports:
        sub = induced_subgraph(g, U)
        embs = _cached_embeddings(hk, len(U), sub.masks(), plan, counter)
        if not embs:
            continue
        rest = [v for v in range(g.n) if v not in U]
        pos = {v: i for i, v in enumerate(rest)}
        rest_masks = []
        for v in rest:
            m = 0
            for u in g.adj[v]:
                if u in pos:
                    m |= 1 << pos[u]
            rest_masks.append(m)
        u_nbrs = [[i for i, u in enumerate(U) if masks[v] >> u & 1] for v in rest]
        for emb in embs:
            kappa = max((max(x) for x in emb if x), default=0)
            colorsets = [{x[i] for x in emb} for i in range(len(U))]
            restr = [tuple(sorted(set().union(*(colorsets[i] for i in nb)))) if nb else ()
                     for nb in u_nbrs]
            key = (kappa, _normalize(rest_masks, restr))
            terms[key] = terms.get(key, 0) + Fraction(factorial(kappa), aut)
    return terms, counter.used


def _worker(args):
    g, h, supports, budget = args
    return _support_terms(g, h, supports, budget)


def _workers_from_env() -> int:
    try:
        return max(1, int(os.environ.get("HPOLY_THREADS", "1")))
    except ValueError:
        return 1


def hpoly(g: Graph, h: Graph, *, budget: int = DEFAULT_NODE_BUDGET,
          workers: int | None = None) -> Poly:
    """Number of induced copies of ``h`` in ``C_k(g)``, as a polynomial in ``k``.

    Valid for every integer ``k >= 1``.  ``workers`` (default: the
    ``HPOLY_THREADS`` environment variable, else 1) splits the supports over
    processes; the exact sum does not depend on the split.
    """
    if h.n == 0:
        raise DomainError("the pattern graph must have at least one vertex")
    supports = list(_supports(g, h))
    if workers is None:
        workers = _workers_from_env()
    if workers > 1 and len(supports) > 1:
        chunks = [supports[i::workers] for i in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_worker, [(g, h, c, budget) for c in chunks if c]))
        if sum(used for _, used in parts) > budget:
            raise BudgetExceeded("generator search node", budget)
        terms: dict = {}
        for part, _ in parts:
            for key, w in part.items():
                terms[key] = terms.get(key, 0) + w
    else:
        terms, _ = _support_terms(g, h, supports, budget)
    total = ZERO
    for (kappa, key) in sorted(terms, key=repr):
        w = terms[(kappa, key)]
        total = total + binomial_poly(kappa) * _rho_key(key) * w
    return total


def enumerate_minimal_generators(g: Graph, h: Graph, *,
                                 budget: int = DEFAULT_NODE_BUDGET) -> list[Generator]:
    """Every minimal ``h``-generator of ``g`` once, sorted by ``(kappa, U, colorings)``."""
    if h.n == 0:
        raise DomainError("the pattern graph must have at least one vertex")
    plan = _plan(h)
    hk = _h_key(h)
    counter = _Counter(budget)
    seen: set[Generator] = set()
    for U in _supports(g, h):
        sub = induced_subgraph(g, U)
        for emb in _cached_embeddings(hk, len(U), sub.masks(), plan, counter):
            kappa = max((max(x) for x in emb if x), default=0)
            for perm in permutations(range(1, kappa + 1)):
                counter.charge()
                relabel = (0,) + perm
                cs = tuple(sorted(tuple(relabel[c] for c in x) for x in emb))
                seen.add(Generator(kappa, tuple(U), cs))
    return sorted(seen)


def generators_by_kappa(gens: Iterable[Generator]) -> dict[int, list[Generator]]:
    out: dict[int, list[Generator]] = {}
    for gen in gens:
        out.setdefault(gen.kappa, []).append(gen)
    return out

"""Explicit coloring graphs ``C_k(G)`` and brute-force induced-subgraph counts.

This is the ground truth the symbolic machinery is checked against, so it
deliberately shares nothing with it beyond the ``Graph`` type.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from .errors import BudgetExceeded, DomainError
from .graph import Graph, automorphism_count, components, is_isomorphic, to_graph6

__all__ = [
    "DEFAULT_COLORING_BUDGET",
    "DEFAULT_SUBSET_BUDGET",
    "ColoringGraph",
    "build",
    "proper_colorings",
    "count_induced_c4",
    "count_induced",
]

DEFAULT_COLORING_BUDGET = 10 ** 6
DEFAULT_SUBSET_BUDGET = 10 ** 7


@dataclass(frozen=True)
class ColoringGraph:
    """``C_k(G)``: vertex ``i`` is the coloring ``colorings[i]`` (colors 1..k)."""

    base: Graph
    k: int
    colorings: tuple[tuple[int, ...], ...]
    neighbors: tuple[tuple[int, ...], ...]
    _nbr_sets: tuple[frozenset, ...] = field(repr=False, compare=False, default=())

    @property
    def vertex_count(self) -> int:
        return len(self.colorings)

    @property
    def edge_count(self) -> int:
        return sum(len(nb) for nb in self.neighbors) // 2

    def nbr_set(self, i: int) -> frozenset:
        return self._nbr_sets[i]

    def as_graph(self) -> Graph:
        return Graph(self.vertex_count,
                     [(i, j) for i, nb in enumerate(self.neighbors) for j in nb if i < j])

    def triangle_count(self) -> int:
        count = 0
        for i, nb in enumerate(self.neighbors):
            for j in nb:
                if j > i:
                    count += sum(1 for w in self._nbr_sets[i] & self._nbr_sets[j] if w > j)
        return count

    def label(self, i: int) -> str:
        return "".join(str(c) for c in self.colorings[i])

    def to_dot(self) -> str:
        lines = ["graph coloring {"]
        for i in range(self.vertex_count):
            lines.append(f'  {i} [label="{self.label(i)}"];')
        for i, nb in enumerate(self.neighbors):
            for j in nb:
                if i < j:
                    lines.append(f"  {i} -- {j};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_graph6(self) -> str:
        return to_graph6(self.as_graph())


def proper_colorings(g: Graph, k: int):
    """Proper colorings with colors ``1..k`` in lexicographic order."""
    color = [0] * g.n
    earlier = [[u for u in g.adj[v] if u < v] for v in range(g.n)]

    def go(v):
        if v == g.n:
            yield tuple(color)
            return
        for c in range(1, k + 1):
            if all(color[u] != c for u in earlier[v]):
                color[v] = c
                yield from go(v + 1)
        color[v] = 0

    yield from go(0)


def build(g: Graph, k: int, *, budget: int = DEFAULT_COLORING_BUDGET) -> ColoringGraph:
    if k < 0:
        raise DomainError("k must be non-negative")
    if k ** g.n > budget:
        raise BudgetExceeded("coloring", budget)
    cols = list(proper_colorings(g, k))
    index = {c: i for i, c in enumerate(cols)}
    nbrs = []
    for c in cols:
        out = []
        for v in range(g.n):
            for d in range(1, k + 1):
                if d != c[v]:
                    j = index.get(c[:v] + (d,) + c[v + 1:])
                    if j is not None:
                        out.append(j)
        nbrs.append(tuple(sorted(out)))
    return ColoringGraph(g, k, tuple(cols), tuple(nbrs), tuple(frozenset(nb) for nb in nbrs))


def count_induced_c4(cg: ColoringGraph) -> int:
    """Induced 4-cycles: for each non-adjacent pair, non-adjacent pairs of common neighbours."""
    total = 0
    ns = cg._nbr_sets
    for a in range(cg.vertex_count):
        # common neighbours only arise for vertices at distance two
        second = set()
        for x in cg.neighbors[a]:
            second.update(ns[x])
        for b in second:
            if b <= a or b in ns[a]:
                continue
            common = sorted(ns[a] & ns[b])
            for i, x in enumerate(common):
                nx = ns[x]
                for y in common[i + 1:]:
                    if y not in nx:
                        total += 1
    return total // 2


def _count_connected(cg: ColoringGraph, h: Graph, budget: int) -> int:
    """Count induced copies of a connected ``h`` by extending embeddings vertex by vertex."""
    # order h so every vertex after the first touches an earlier one
    order = [0]
    while len(order) < h.n:
        placed = set(order)
        order.append(max((v for v in range(h.n) if v not in placed),
                         key=lambda v: (len(h.adj[v] & placed), -v)))
    pos = {v: i for i, v in enumerate(order)}
    need_adj = [[i for i in range(j) if order[i] in h.adj[order[j]]] for j in range(h.n)]
    need_non = [[i for i in range(j) if order[i] not in h.adj[order[j]]] for j in range(h.n)]
    N = cg.vertex_count
    masks = [0] * N
    for i, nb in enumerate(cg.neighbors):
        m = 0
        for j in nb:
            m |= 1 << j
        masks[i] = m
    image = [0] * h.n
    steps = 0
    del pos

    def go(j, used):
        nonlocal steps
        steps += 1
        if steps > budget:
            raise BudgetExceeded("induced-copy search", budget)
        if j == h.n:
            return 1
        cand = masks[image[need_adj[j][0]]]
        for i in need_adj[j][1:]:
            cand &= masks[image[i]]
        for i in need_non[j]:
            cand &= ~masks[image[i]]
        cand &= ~used
        total = 0
        while cand:
            low = cand & -cand
            w = low.bit_length() - 1
            image[j] = w
            total += go(j + 1, used | low)
            cand ^= low
        return total

    total = 0
    for w in range(N):
        image[0] = w
        total += go(1, 1 << w)
    return total // automorphism_count(h)


def count_induced(cg: ColoringGraph, h: Graph, *, budget: int = DEFAULT_SUBSET_BUDGET) -> int:
    """Number of vertex subsets of ``C_k(G)`` inducing a graph isomorphic to ``h``.

    Connected patterns are counted by embedding extension (labelled copies
    divided by ``|Aut(h)|``); disconnected ones by plain subset enumeration.
    """
    N = cg.vertex_count
    if h.n == 0:
        return 1
    if h.n == 1:
        return N
    if len(components(h)) == 1:
        return _count_connected(cg, h, budget)
    if comb(N, h.n) > budget:
        raise BudgetExceeded("subset", budget)
    ns = cg._nbr_sets
    count = 0
    hdeg = sorted(h.degrees())
    for sub in combinations(range(N), h.n):
        edges = [(a, b) for a, b in combinations(range(h.n), 2) if sub[b] in ns[sub[a]]]
        if len(edges) != h.m:
            continue
        sg = Graph(h.n, edges)
        if sorted(sg.degrees()) == hdeg and is_isomorphic(sg, h):
            count += 1
    return count

"""Restraints and restrained chromatic polynomials.

A restraint forbids each vertex a finite set of colors.  ``rho`` counts the
proper colorings that avoid those lists, as a polynomial in the number of
available colors ``k``.  The polynomial agrees with the count for every
``k >= max_color``; below that it is only a formal object.
"""

from __future__ import annotations

import json
import threading
from typing import Iterable, Mapping, Sequence

from .errors import DomainError
from .graph import Graph, remove_vertices
from .poly import ONE, Poly, linear

__all__ = [
    "Restraint",
    "rho",
    "rho_outside",
    "restraint_from_generator",
    "count_restrained_colorings",
    "clear_cache",
]


class Restraint:
    """Mapping ``vertex -> frozenset of forbidden colors`` (all colors >= 1)."""

    __slots__ = ("_data",)

    def __init__(self, forbidden: Mapping[int, Iterable[int]] | None = None):
        data = {}
        for v, colors in (forbidden or {}).items():
            cs = frozenset(int(c) for c in colors)
            if any(c < 1 for c in cs):
                raise DomainError(f"restraint colors must be positive, got {sorted(cs)} at {v}")
            if int(v) < 0:
                raise DomainError(f"negative vertex {v} in restraint")
            if cs:
                data[int(v)] = cs
        self._data: dict[int, frozenset[int]] = data

    def __getitem__(self, v: int) -> frozenset[int]:
        return self._data.get(v, frozenset())

    def items(self):
        return sorted(self._data.items())

    @property
    def max_color(self) -> int:
        return max((max(cs) for cs in self._data.values()), default=0)

    @property
    def total_entries(self) -> int:
        return sum(len(cs) for cs in self._data.values())

    def check_graph(self, g: Graph) -> None:
        for v in self._data:
            if v >= g.n:
                raise DomainError(f"restraint mentions vertex {v} outside a graph of order {g.n}")

    def relabel(self, mapping: Mapping[int, int]) -> "Restraint":
        return Restraint({mapping[v]: cs for v, cs in self._data.items() if v in mapping})

    def to_json(self) -> str:
        return json.dumps({str(v): sorted(cs) for v, cs in self.items()})

    @classmethod
    def from_json(cls, text) -> "Restraint":
        data = json.loads(text) if isinstance(text, str) else text
        return cls({int(v): cs for v, cs in data.items()})

    def __eq__(self, other):
        return isinstance(other, Restraint) and self._data == other._data

    def __hash__(self):
        return hash(frozenset(self._data.items()))

    def __repr__(self):
        return f"Restraint({ {v: sorted(cs) for v, cs in self.items()} })"


# ---------------------------------------------------------------------------
# internal representation: n, adjacency bitmasks, restraint tuple

_memo: dict = {}
_memo_lock = threading.Lock()


def clear_cache() -> None:
    with _memo_lock:
        _memo.clear()


def _normalize(masks: Sequence[int], restr: Sequence[frozenset]):
    """Relabel vertices (by degree, then restraint) and colors (order-preserving).

    The result describes an instance isomorphic to the input, so it is a
    safe memo key; it is not a canonical form, which only costs cache hits.
    """
    n = len(masks)
    palette = sorted(set().union(*restr)) if restr else []
    cmap = {c: i + 1 for i, c in enumerate(palette)}
    rs = [tuple(sorted(cmap[c] for c in r)) for r in restr]
    order = sorted(range(n), key=lambda v: (bin(masks[v]).count("1"), len(rs[v]), rs[v]))
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    new_masks = []
    for v in order:
        m, out = masks[v], 0
        while m:
            low = m & -m
            out |= 1 << pos[low.bit_length() - 1]
            m ^= low
        new_masks.append(out)
    return tuple(new_masks), tuple(rs[v] for v in order)


def _components(masks):
    n = len(masks)
    seen = 0
    comps = []
    for s in range(n):
        if seen >> s & 1:
            continue
        comp = frontier = 1 << s
        while frontier:
            nxt = 0
            m = frontier
            while m:
                low = m & -m
                nxt |= masks[low.bit_length() - 1]
                m ^= low
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append([v for v in range(n) if comp >> v & 1])
    return comps


def _sub(masks, restr, keep):
    pos = {v: i for i, v in enumerate(keep)}
    new = []
    for v in keep:
        m = 0
        for u in keep:
            if masks[v] >> u & 1:
                m |= 1 << pos[u]
        new.append(m)
    return new, [restr[v] for v in keep]


def _delete_vertex(masks, restr, v):
    keep = [u for u in range(len(masks)) if u != v]
    return _sub(masks, restr, keep)


def _contract(masks, restr, u, v):
    """Merge ``v`` into ``u`` (``u < v``), union their restraints."""
    n = len(masks)
    merged = (masks[u] | masks[v]) & ~((1 << u) | (1 << v))
    masks2 = list(masks)
    masks2[u] = merged
    for w in range(n):
        if merged >> w & 1:
            masks2[w] = (masks2[w] & ~(1 << v)) | (1 << u)
    restr2 = list(restr)
    restr2[u] = tuple(sorted(set(restr[u]) | set(restr[v])))
    keep = [w for w in range(n) if w != v]
    return _sub(masks2, restr2, keep)


def _first_edge(masks, pick_max=False):
    n = len(masks)
    rng = range(n - 1, -1, -1) if pick_max else range(n)
    for a in rng:
        m = masks[a]
        if pick_max:
            higher = m & ~((1 << (a + 1)) - 1)
            if higher:
                return a, higher.bit_length() - 1
        else:
            higher = m >> (a + 1)
            if higher:
                return a, a + 1 + ((higher & -higher).bit_length() - 1)
    return None


def _edgeless(restr) -> Poly:
    out = ONE
    for r in restr:
        out = out * linear(-len(r))
    return out


def _rho_plain(masks, restr, pick_max) -> Poly:
    """Unmemoized deletion-contraction on the raw labeling."""
    e = _first_edge(masks, pick_max)
    if e is None:
        return _edgeless(restr)
    u, v = e
    deleted = list(masks)
    deleted[u] &= ~(1 << v)
    deleted[v] &= ~(1 << u)
    cm, cr = _contract(masks, restr, u, v)
    return _rho_plain(deleted, restr, pick_max) - _rho_plain(cm, cr, pick_max)


def _rho_key(key, pick_max=False) -> Poly:
    cached = _memo.get((key, pick_max))
    if cached is not None:
        return cached
    masks, restr = key
    if not any(masks):
        result = _edgeless(restr)
    else:
        comps = _components(masks)
        if len(comps) > 1:
            result = ONE
            for comp in comps:
                sm, sr = _sub(masks, restr, comp)
                result = result * _rho_key(_normalize(sm, sr), pick_max)
        else:
            leaf = next((v for v in range(len(masks))
                         if not restr[v] and masks[v] & (masks[v] - 1) == 0), None)
            if leaf is not None:
                # an unrestrained leaf avoids only its neighbour's colour
                sm, sr = _delete_vertex(masks, restr, leaf)
                result = linear(-1) * _rho_key(_normalize(sm, sr), pick_max)
            else:
                u, v = _first_edge(masks, pick_max)
                deleted = list(masks)
                deleted[u] &= ~(1 << v)
                deleted[v] &= ~(1 << u)
                cm, cr = _contract(masks, restr, u, v)
                result = (_rho_key(_normalize(deleted, restr), pick_max)
                          - _rho_key(_normalize(cm, cr), pick_max))
    with _memo_lock:
        _memo[(key, pick_max)] = result
    return result


def rho(g: Graph, r: Restraint | Mapping[int, Iterable[int]] | None = None, *,
        edge_choice: str = "min", memo: bool = True) -> Poly:
    """Restrained chromatic polynomial of ``g`` under ``r``.

    ``edge_choice`` selects the lexicographically smallest (``"min"``) or
    largest (``"max"``) edge at each step; both give the same polynomial.
    With ``memo=False`` the plain recursion runs on the given labeling with no
    shortcuts, which is slow but useful as a cross-check.
    """
    if r is None:
        r = Restraint()
    elif not isinstance(r, Restraint):
        r = Restraint(r)
    r.check_graph(g)
    if edge_choice not in ("min", "max"):
        raise DomainError(f"unknown edge_choice {edge_choice!r}")
    pick_max = edge_choice == "max"
    masks = list(g.masks())
    restr = [tuple(sorted(r[v])) for v in range(g.n)]
    if not memo:
        return _rho_plain(masks, restr, pick_max)
    return _rho_key(_normalize(masks, restr), pick_max)


def rho_masks(masks: Sequence[int], restr: Sequence[Iterable[int]]) -> Poly:
    """Same as :func:`rho` on a bitmask adjacency; used by the generator engine."""
    rs = [tuple(sorted(set(x))) for x in restr]
    return _rho_key(_normalize(list(masks), rs))


def restraint_from_generator(g: Graph, u_set: Iterable[int],
                             colorings: Iterable[Mapping[int, int] | Sequence[int]]) -> Restraint:
    """Forbid at each ``v`` outside ``U`` every color some coloring gives a neighbour in ``U``.

    Colorings are dicts ``u -> color`` covering exactly ``U``, or sequences
    listing colors for ``U`` in increasing vertex order.  Vertices keep their
    labels in ``g``.
    """
    us = sorted(set(u_set))
    uset = set(us)
    for u in us:
        if not 0 <= u < g.n:
            raise DomainError(f"vertex {u} out of range")
    cols = []
    for c in colorings:
        if isinstance(c, Mapping):
            if set(c) != uset:
                raise DomainError(f"coloring domain {sorted(c)} differs from U={us}")
            cols.append(dict(c))
        else:
            seq = list(c)
            if len(seq) != len(us):
                raise DomainError(f"coloring {seq} does not cover U={us}")
            cols.append(dict(zip(us, seq)))
    forbidden: dict[int, set[int]] = {}
    for v in range(g.n):
        if v in uset:
            continue
        nb = g.adj[v] & uset
        if nb:
            forbidden[v] = {c[u] for u in nb for c in cols}
    return Restraint(forbidden)


def rho_outside(g: Graph, u_set: Iterable[int], r: Restraint) -> Poly:
    """``rho`` of ``G - U`` with ``r`` carried over from ``g``'s labels."""
    drop = set(u_set)
    keep = [v for v in range(g.n) if v not in drop]
    mapping = {v: i for i, v in enumerate(keep)}
    return rho(remove_vertices(g, drop), r.relabel(mapping))


def count_restrained_colorings(g: Graph, r: Restraint, k: int) -> int:
    """Brute-force count of proper ``k``-colorings avoiding ``r`` (test oracle)."""
    order = list(range(g.n))
    color = [0] * g.n

    def go(i):
        if i == g.n:
            return 1
        v = order[i]
        total = 0
        for c in range(1, k + 1):
            if c in r[v]:
                continue
            if any(color[u] == c for u in g.adj[v] if u < v):
                continue
            color[v] = c
            total += go(i + 1)
        color[v] = 0
        return total

    return go(0)

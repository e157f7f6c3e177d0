"""Simple undirected graphs on dense 0-based vertex labels.

Graphs are immutable.  Every structural operation returns a new graph whose
vertices are again ``0..n-1``; when vertices disappear the survivors keep
their relative order.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations
from pathlib import Path
from typing import Iterable, Iterator

from .errors import DomainError, GraphFormatError

__all__ = [
    "Graph",
    "GraphStats",
    "parse_graph6",
    "to_graph6",
    "parse_edge_list",
    "to_edge_list",
    "parse_graph",
    "read_graph",
    "contract_edge",
    "delete_edge",
    "induced_subgraph",
    "remove_vertices",
    "disjoint_union",
    "is_isomorphic",
    "isomorphisms",
    "automorphism_count",
    "components",
    "is_connected",
    "triangle_count",
    "bridges",
    "stats",
    "null_graph",
    "complete_graph",
    "path_graph",
    "cycle_graph",
    "star_graph",
    "hypercube_graph",
    "diamond_graph",
    "named_pattern",
]


def _norm_edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


class Graph:
    """A simple graph with vertices ``0..n-1``."""

    __slots__ = ("n", "edges", "adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise DomainError(f"vertex count must be non-negative, got {n}")
        es = set()
        for u, v in edges:
            if u == v:
                raise DomainError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise DomainError(f"edge ({u}, {v}) out of range for n={n}")
            es.add(_norm_edge(u, v))
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in es:
            nbrs[u].add(v)
            nbrs[v].add(u)
        self.n = n
        self.edges = frozenset(es)
        self.adj = tuple(frozenset(s) for s in nbrs)

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def masks(self) -> tuple[int, ...]:
        """Adjacency as bitmasks, bit ``u`` of entry ``v`` set iff ``uv`` is an edge."""
        return tuple(sum(1 << u for u in a) for a in self.adj)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph({self.n}, {self.sorted_edges()})"


@dataclass(frozen=True)
class GraphStats:
    vertex_count: int
    edge_count: int
    components: int
    degree_sequence: tuple[int, ...]
    triangles: int

    @property
    def degree_square_sum(self) -> int:
        return sum(d * d for d in self.degree_sequence)


# ---------------------------------------------------------------------------
# I/O

def parse_graph6(text: str) -> Graph:
    """Decode a short-form graph6 record (``n <= 62``)."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise GraphFormatError("empty graph6 record", 0)
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise GraphFormatError(f"character {ch!r} outside graph6 range", i)
    n = ord(s[0]) - 63
    if n > 62:
        raise GraphFormatError("only the short graph6 form (n <= 62) is supported", 0)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = s[1:]
    if len(body) < nbytes:
        raise GraphFormatError(
            f"truncated bit field: need {nbytes} bytes, got {len(body)}", 1 + len(body))
    if len(body) > nbytes:
        raise GraphFormatError("trailing bytes after bit field", 1 + nbytes)
    bits = []
    for ch in body:
        x = ord(ch) - 63
        bits.extend((x >> (5 - i)) & 1 for i in range(6))
    if nbits and any(bits[nbits:]):
        raise GraphFormatError("nonzero padding bits", len(s) - 1)
    edges = []
    pos = 0
    for v in range(1, n):
        for u in range(v):
            if bits[pos]:
                edges.append((u, v))
            pos += 1
    return Graph(n, edges)


def to_graph6(g: Graph) -> str:
    if g.n > 62:
        raise DomainError("graph6 short form supports at most 62 vertices")
    bits = [1 if g.has_edge(u, v) else 0 for v in range(1, g.n) for u in range(v)]
    bits.extend([0] * (-len(bits) % 6))
    out = [chr(g.n + 63)]
    for i in range(0, len(bits), 6):
        x = 0
        for b in bits[i:i + 6]:
            x = (x << 1) | b
        out.append(chr(x + 63))
    return "".join(out)


def parse_edge_list(text: str) -> Graph:
    """Parse ``n m`` followed by ``m`` lines ``u v``.  ``#`` starts a comment."""
    rows = []
    offset = 0
    for line in text.splitlines(keepends=True):
        content = line.split("#", 1)[0].strip()
        if content:
            rows.append((content, offset))
        offset += len(line.encode())
    if not rows:
        raise GraphFormatError("empty edge list", 0)

    def ints(row, count):
        content, off = row
        parts = content.split()
        if len(parts) != count or not all(re.fullmatch(r"\d+", p) for p in parts):
            raise GraphFormatError(f"expected {count} non-negative integers, got {content!r}", off)
        return [int(p) for p in parts]

    n, m = ints(rows[0], 2)
    if len(rows) - 1 != m:
        raise GraphFormatError(f"header announces {m} edges, found {len(rows) - 1}", rows[0][1])
    edges = []
    seen = set()
    for row in rows[1:]:
        u, v = ints(row, 2)
        if u == v or u >= n or v >= n:
            raise GraphFormatError(f"invalid edge {u} {v} for n={n}", row[1])
        e = _norm_edge(u, v)
        if e in seen:
            raise GraphFormatError(f"duplicate edge {u} {v}", row[1])
        seen.add(e)
        edges.append(e)
    return Graph(n, edges)


def to_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    """Accept either an edge list or a graph6 record, deciding by content."""
    for line in text.splitlines():
        content = line.split("#", 1)[0].strip()
        if content:
            if re.fullmatch(r"\d+\s+\d+", content):
                return parse_edge_list(text)
            return parse_graph6(content)
    raise GraphFormatError("no graph found", 0)


def read_graph(path: str | Path) -> Graph:
    return parse_graph(Path(path).read_text())


# ---------------------------------------------------------------------------
# structural operations

def delete_edge(g: Graph, e: tuple[int, int]) -> Graph:
    e = _norm_edge(*e)
    if e not in g.edges:
        raise DomainError(f"edge {e} not in graph")
    return Graph(g.n, g.edges - {e})


def contract_edge(g: Graph, e: tuple[int, int]) -> Graph:
    """Merge the ends of ``e`` into the smaller endpoint; parallels collapse."""
    u, v = _norm_edge(*e)
    if (u, v) not in g.edges:
        raise DomainError(f"edge {(u, v)} not in graph")

    def relabel(x):
        if x == v:
            return u
        return x - 1 if x > v else x

    edges = set()
    for a, b in g.edges:
        a2, b2 = relabel(a), relabel(b)
        if a2 != b2:
            edges.add(_norm_edge(a2, b2))
    return Graph(g.n - 1, edges)


def induced_subgraph(g: Graph, u_set: Iterable[int]) -> Graph:
    keep = sorted(set(u_set))
    for x in keep:
        if not 0 <= x < g.n:
            raise DomainError(f"vertex {x} out of range for n={g.n}")
    index = {x: i for i, x in enumerate(keep)}
    edges = [(index[a], index[b]) for a, b in g.edges if a in index and b in index]
    return Graph(len(keep), edges)


def remove_vertices(g: Graph, u_set: Iterable[int]) -> Graph:
    drop = set(u_set)
    return induced_subgraph(g, [x for x in range(g.n) if x not in drop])


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    shift = g1.n
    return Graph(g1.n + g2.n, list(g1.edges) + [(a + shift, b + shift) for a, b in g2.edges])


# ---------------------------------------------------------------------------
# isomorphism

def _refined_colors(g: Graph, initial: list) -> list[int]:
    """Colour refinement starting from ``initial``; returns stable integer classes."""
    colors = initial
    for _ in range(g.n + 1):
        sigs = [(colors[v], tuple(sorted(colors[u] for u in g.adj[v]))) for v in range(g.n)]
        palette = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [palette[s] for s in sigs]
        if len(set(new)) == len(set(colors)):
            return new
        colors = new
    return colors


def isomorphisms(g1: Graph, g2: Graph) -> Iterator[dict[int, int]]:
    """Yield every adjacency-preserving bijection ``V(g1) -> V(g2)``."""
    if g1.n != g2.n or g1.m != g2.m:
        return
    n = g1.n
    if sorted(g1.degrees()) != sorted(g2.degrees()):
        return
    # refine jointly so class labels are comparable across the two graphs
    union = disjoint_union(g1, g2)
    colors = _refined_colors(union, union.degrees())
    c1, c2 = colors[:n], colors[n:]
    if sorted(c1) != sorted(c2):
        return
    by_class: dict[int, list[int]] = {}
    for v, c in enumerate(c2):
        by_class.setdefault(c, []).append(v)
    # place vertices with rare classes and many already-placed neighbours first
    order: list[int] = []
    placed = set()
    remaining = set(range(n))
    while remaining:
        best = min(remaining, key=lambda v: (-len(g1.adj[v] & placed), len(by_class[c1[v]]), v))
        order.append(best)
        placed.add(best)
        remaining.remove(best)

    mapping: dict[int, int] = {}
    used: set[int] = set()

    def extend(i):
        if i == n:
            yield dict(mapping)
            return
        v = order[i]
        for w in by_class[c1[v]]:
            if w in used:
                continue
            ok = True
            for x, y in mapping.items():
                if (x in g1.adj[v]) != (y in g2.adj[w]):
                    ok = False
                    break
            if ok:
                mapping[v] = w
                used.add(w)
                yield from extend(i + 1)
                del mapping[v]
                used.discard(w)

    yield from extend(0)


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    return next(isomorphisms(g1, g2), None) is not None


def automorphism_count(g: Graph) -> int:
    return sum(1 for _ in isomorphisms(g, g))


# ---------------------------------------------------------------------------
# statistics

def components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        stack, comp = [s], []
        while stack:
            v = stack.pop()
            comp.append(v)
            for u in g.adj[v]:
                if not seen[u]:
                    seen[u] = True
                    stack.append(u)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1


def triangle_count(g: Graph) -> int:
    count = 0
    for u, v in g.edges:
        count += sum(1 for w in g.adj[u] & g.adj[v] if w > v)
    return count


def bridges(g: Graph) -> list[tuple[int, int]]:
    base = len(components(g))
    return [e for e in g.sorted_edges() if len(components(Graph(g.n, g.edges - {e}))) > base]


def stats(g: Graph) -> GraphStats:
    return GraphStats(
        vertex_count=g.n,
        edge_count=g.m,
        components=len(components(g)),
        degree_sequence=tuple(sorted(g.degrees(), reverse=True)),
        triangles=triangle_count(g),
    )


# ---------------------------------------------------------------------------
# families

def null_graph(n: int) -> Graph:
    return Graph(n)


def complete_graph(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise DomainError("cycles need at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(n: int) -> Graph:
    return Graph(n, [(0, i) for i in range(1, n)])


def hypercube_graph(s: int) -> Graph:
    n = 1 << s
    return Graph(n, [(i, i ^ (1 << j)) for i in range(n) for j in range(s) if i < i ^ (1 << j)])


def diamond_graph() -> Graph:
    """K4 minus an edge."""
    return Graph(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])


_PATTERN_RE = re.compile(r"([NPKCQ])_?(\d+)")


def named_pattern(name: str) -> Graph:
    """Resolve names such as ``N1``, ``P2``, ``K3``, ``C4``, ``Q3``/``Q_3``, ``K4-e``."""
    key = name.strip()
    if key.replace(" ", "").lower() in ("k4-e", "k4e", "diamond"):
        return diamond_graph()
    match = _PATTERN_RE.fullmatch(key)
    if not match:
        raise DomainError(f"unknown pattern {name!r}")
    kind, size = match.group(1), int(match.group(2))
    if kind == "N":
        return null_graph(size)
    if kind == "P":
        if size < 1:
            raise DomainError("paths need at least one vertex")
        return path_graph(size)
    if kind == "K":
        if size < 1:
            raise DomainError("cliques need at least one vertex")
        return complete_graph(size)
    if kind == "C":
        return cycle_graph(size)
    return hypercube_graph(size)

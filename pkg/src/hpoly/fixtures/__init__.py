"""Small graphs used throughout the tests and documentation.

Each graph ships as an edge list (``NAME.el``, with its vertex labelling in
a comment) and as graph6 (``NAME.g6``):

* ``p3`` -- path on three vertices.
* ``t1``, ``t2``, ``t3`` -- trees on six vertices; ``t2`` and ``t3`` share a
  degree sequence but are not isomorphic.
* ``r1``, ``r2`` -- pseudotrees on six vertices with a triangle; equal
  chromatic polynomials, different pairs polynomials.
* ``g1``, ``g2`` -- seven-vertex graphs sharing chromatic and pairs
  polynomials but not the induced 4-cycle polynomial.
"""

from __future__ import annotations

from importlib import resources

from ..errors import DomainError
from ..graph import Graph, parse_graph

FIXTURE_NAMES = ("p3", "t1", "t2", "t3", "r1", "r2", "g1", "g2")


def fixture_text(name: str) -> str:
    stem, _, ext = name.partition(".")
    if stem not in FIXTURE_NAMES:
        raise DomainError(f"unknown fixture {name!r}; choose from {', '.join(FIXTURE_NAMES)}")
    filename = f"{stem}.{ext or 'el'}"
    return resources.files(__name__).joinpath(filename).read_text()


def load_fixture(name: str) -> Graph:
    return parse_graph(fixture_text(name))


def fixture_path(name: str):
    """A traversable handle for ``NAME.el`` or ``NAME.g6``."""
    stem, _, ext = name.partition(".")
    return resources.files(__name__).joinpath(f"{stem}.{ext or 'el'}")

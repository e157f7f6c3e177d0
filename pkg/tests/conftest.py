from __future__ import annotations

import random
from functools import lru_cache

import pytest

from hpoly.fixtures import load_fixture
from hpoly.graph import Graph


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


@lru_cache(maxsize=None)
def atlas(max_n: int) -> tuple[Graph, ...]:
    """One graph per isomorphism class on 1..max_n vertices (max_n <= 7)."""
    import networkx as nx

    out = []
    for G in nx.graph_atlas_g()[1:]:
        if G.number_of_nodes() > max_n:
            break
        out.append(Graph(G.number_of_nodes(), G.edges()))
    return tuple(out)


def random_tree(n: int, rng: random.Random) -> Graph:
    """Uniform labelled tree via a Pruefer sequence."""
    if n == 1:
        return Graph(1)
    if n == 2:
        return Graph(2, [(0, 1)])
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = min(v for v in range(n) if degree[v] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = [w for w in range(n) if degree[w] == 1]
    edges.append((u, v))
    return Graph(n, edges)


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


@pytest.fixture(scope="session")
def fx():
    return {name: load_fixture(name) for name in ("p3", "t1", "t2", "t3", "r1", "r2", "g1", "g2")}


_criteria: dict[int, list[str]] = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    for mark in getattr(report, "criteria", ()):
        _criteria.setdefault(mark, []).append(report.outcome)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    rep.criteria = [m.args[0] for m in item.iter_markers("criterion")]


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        status = "PASS" if all(o == "passed" for o in _criteria[n]) else "FAIL"
        terminalreporter.write_line(f"criterion {n:2d}: {status}")

from __future__ import annotations

import random
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from conftest import atlas, random_graph
from hpoly.errors import DomainError, GraphFormatError
from hpoly.fixtures import FIXTURE_NAMES, fixture_text, load_fixture
from hpoly.graph import (Graph, automorphism_count, bridges, complete_graph, contract_edge,
                         cycle_graph, delete_edge, disjoint_union, hypercube_graph,
                         induced_subgraph, is_isomorphic, named_pattern, null_graph,
                         parse_edge_list, parse_graph, parse_graph6, path_graph, stats,
                         to_edge_list, to_graph6, triangle_count)


def test_graph6_triangle():
    g = parse_graph6("Bw")
    assert g == complete_graph(3)
    assert to_graph6(g) == "Bw"


def test_graph6_single_vertex():
    assert parse_graph6("@") == null_graph(1)
    assert to_graph6(null_graph(1)) == "@"


@pytest.mark.parametrize("name", FIXTURE_NAMES)
def test_fixture_round_trips(name):
    g6 = fixture_text(name + ".g6").strip()
    assert to_graph6(parse_graph6(g6)) == g6
    assert parse_graph6(g6) == load_fixture(name)
    el = load_fixture(name)
    assert parse_edge_list(to_edge_list(el)) == el


@pytest.mark.parametrize("text, offset", [
    ("", 0), ("B", 1), ("Bww", 2), ("B\x7f", 1), ("Bx", 1)])
def test_graph6_errors(text, offset):
    with pytest.raises(GraphFormatError) as info:
        parse_graph6(text)
    assert info.value.offset == offset


def test_edge_list_errors():
    for bad in ["", "3 1\n0 0\n", "3 2\n0 1\n", "2 1\n0 5\n", "2 2\n0 1\n1 0\n", "x y\n"]:
        with pytest.raises(GraphFormatError):
            parse_edge_list(bad)


def test_parse_graph_detects_format():
    assert parse_graph("# comment\n3 2\n0 1\n1 2\n") == path_graph(3)
    assert parse_graph("Bw\n") == complete_graph(3)


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 12), st.data())
def test_graph6_round_trip_random(n, data):
    pairs = list(combinations(range(n), 2))
    edges = data.draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    g = Graph(n, edges)
    assert parse_graph6(to_graph6(g)) == g


def test_invalid_graphs():
    with pytest.raises(DomainError):
        Graph(2, [(0, 0)])
    with pytest.raises(DomainError):
        Graph(2, [(0, 2)])
    with pytest.raises(DomainError):
        Graph(-1)


def test_contractions():
    assert contract_edge(path_graph(3), (0, 1)) == path_graph(2)
    assert contract_edge(path_graph(3), (1, 2)) == path_graph(2)
    assert contract_edge(complete_graph(3), (0, 2)) == path_graph(2)
    # the two far vertices of a 4-cycle stay adjacent, so the result is a triangle
    c4e = contract_edge(cycle_graph(4), (0, 1))
    assert c4e == complete_graph(3)
    for n in range(4, 8):
        assert is_isomorphic(contract_edge(cycle_graph(n), (0, 1)), cycle_graph(n - 1))
    with pytest.raises(DomainError):
        contract_edge(path_graph(3), (0, 2))


def test_contraction_keeps_merged_vertex_at_min_index():
    g = Graph(4, [(1, 3), (0, 3), (2, 3)])
    h = contract_edge(g, (1, 3))
    assert h == Graph(3, [(0, 1), (1, 2)])


def test_induced_subgraphs(fx):
    assert induced_subgraph(complete_graph(3), {0, 1}) == path_graph(2)
    assert induced_subgraph(complete_graph(3), set()) == null_graph(0)
    assert induced_subgraph(fx["g1"], {0, 4, 5}) == complete_graph(3)
    with pytest.raises(DomainError):
        induced_subgraph(path_graph(2), {5})


def test_isomorphism(fx):
    assert is_isomorphic(path_graph(3), path_graph(3))
    assert not is_isomorphic(fx["t2"], fx["t3"])
    assert sorted(fx["t2"].degrees()) == sorted(fx["t3"].degrees())
    two_triangles = disjoint_union(complete_graph(3), complete_graph(3))
    assert not is_isomorphic(cycle_graph(6), two_triangles)
    assert automorphism_count(cycle_graph(6)) == 12
    assert automorphism_count(hypercube_graph(3)) == 48
    assert automorphism_count(null_graph(4)) == 24


def test_isomorphism_is_an_equivalence_on_random_relabellings():
    rng = random.Random(3)
    for _ in range(60):
        g = random_graph(rng.randint(1, 7), 0.4, rng)
        perm = list(range(g.n))
        rng.shuffle(perm)
        h = Graph(g.n, [(perm[u], perm[v]) for u, v in g.edges])
        assert is_isomorphic(g, g) and is_isomorphic(g, h) and is_isomorphic(h, g)


def test_isomorphism_separates_atlas_classes():
    graphs = atlas(5)
    for a, b in combinations(graphs, 2):
        if a.n == b.n and a.m == b.m:
            assert not is_isomorphic(a, b)


def test_stats_of_fixtures(fx):
    s1, s2 = stats(fx["g1"]), stats(fx["g2"])
    assert (s1.vertex_count, s1.edge_count, s1.triangles) == (7, 12, 6)
    assert s1.degree_sequence == (5, 5, 3, 3, 3, 3, 2)
    assert (s2.vertex_count, s2.edge_count, s2.triangles) == (7, 12, 6)
    assert s2.degree_sequence == (5, 4, 4, 4, 3, 2, 2)
    assert s1.degree_square_sum == s2.degree_square_sum == 90
    n5 = stats(null_graph(5))
    assert n5.components == 5 and n5.triangles == 0


def test_degree_sums_on_random_graphs():
    rng = random.Random(11)
    for _ in range(1000):
        g = random_graph(rng.randint(0, 8), rng.random(), rng)
        s = stats(g)
        assert sum(s.degree_sequence) == 2 * s.edge_count
        if g.n:
            assert s.components >= 1


def test_triangles_against_brute_force():
    for g in atlas(7)[::7]:
        brute = sum(1 for a, b, c in combinations(range(g.n), 3)
                    if g.has_edge(a, b) and g.has_edge(a, c) and g.has_edge(b, c))
        assert triangle_count(g) == brute


def test_edge_operations_preserve_orders():
    rng = random.Random(5)
    for _ in range(100):
        g = random_graph(rng.randint(2, 7), 0.5, rng)
        for e in g.sorted_edges():
            assert contract_edge(g, e).n == g.n - 1
            assert delete_edge(g, e).n == g.n


def test_named_patterns():
    assert named_pattern("N1") == null_graph(1)
    assert named_pattern("P2") == path_graph(2)
    assert named_pattern("Q_3") == hypercube_graph(3) == named_pattern("Q3")
    assert named_pattern("K4-e").m == 5
    assert bridges(path_graph(4)) == [(0, 1), (1, 2), (2, 3)]
    assert bridges(cycle_graph(4)) == []
    with pytest.raises(DomainError):
        named_pattern("X9")

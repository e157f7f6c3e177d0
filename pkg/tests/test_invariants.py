from __future__ import annotations

import random
from fractions import Fraction

import pytest

from conftest import random_graph
from hpoly.closed_forms import pairs_general
from hpoly.errors import DomainError, NotATreeError
from hpoly.graph import (cycle_graph, disjoint_union, null_graph, path_graph)
from hpoly.invariants import (chromatic_number, coefficient_report, component_count_from_pairs,
                              disjoint_union_pairs, has_hypercube, hypercube_first_appearance,
                              hypercube_sufficient, predicted_top_coefficients,
                              pseudotree_slope_at_two, recover_tree_degrees)
from hpoly.poly import Poly, binomial_poly
from hpoly.restrained import rho

K = Poly([0, 1])


def test_top_coefficients(fx):
    pred = predicted_top_coefficients(path_graph(3))
    assert pred.a_top3 == (Fraction(3, 2), Fraction(13, 2), Fraction(9))
    assert pairs_general(path_graph(3)) == Poly([0, -8, 18, -13, 3]) / 2
    assert predicted_top_coefficients(fx["g1"]).a_top3 == predicted_top_coefficients(fx["g2"]).a_top3
    assert predicted_top_coefficients(null_graph(1)).a_top3[0] == Fraction(1, 2)
    for name in ("t1", "t2", "r1", "r2", "g1", "g2"):
        g = fx[name]
        assert coefficient_report(pairs_general(g), g.n).a_top3 == predicted_top_coefficients(g).a_top3


def test_component_counts():
    assert component_count_from_pairs(K ** 3 - K ** 2) == 2
    assert component_count_from_pairs(pairs_general(path_graph(6))) == 1
    union = disjoint_union_pairs(binomial_poly(2), K, rho(path_graph(2)) * 1, rho(path_graph(2)))
    assert component_count_from_pairs(union) == 2
    with pytest.raises(DomainError):
        component_count_from_pairs(Poly())


def test_disjoint_union_rule():
    n1, p2 = null_graph(1), path_graph(2)
    composed = disjoint_union_pairs(pairs_general(n1), rho(n1), pairs_general(p2), rho(p2))
    assert composed == Poly([0, 0, 5, -8, 3]) / 2
    empty = null_graph(0)
    assert disjoint_union_pairs(pairs_general(p2), rho(p2), Poly(), rho(empty)) == pairs_general(p2)
    rng = random.Random(9)
    for _ in range(20):
        a, b = random_graph(rng.randint(1, 4), 0.5, rng), random_graph(rng.randint(1, 4), 0.5, rng)
        assert disjoint_union_pairs(pairs_general(a), rho(a), pairs_general(b), rho(b)) == \
            pairs_general(disjoint_union(a, b))


def test_tree_recovery(fx):
    assert recover_tree_degrees(pairs_general(fx["t2"]), 6) == [1, 1, 1, 2, 2, 3]
    assert recover_tree_degrees(pairs_general(path_graph(6)), 6) == [1, 1, 2, 2, 2, 2]
    assert recover_tree_degrees(binomial_poly(2), 1) == [0]
    with pytest.raises(NotATreeError):
        recover_tree_degrees(pairs_general(fx["r1"]), 6)
    with pytest.raises(NotATreeError):
        recover_tree_degrees(K ** 3, 3)


def test_pseudotree_slopes(fx):
    for n in range(3, 9):
        assert pseudotree_slope_at_two(cycle_graph(n)) == (n if n % 2 == 0 else -n)
    assert pseudotree_slope_at_two(fx["r1"]) == -2
    assert pseudotree_slope_at_two(fx["r2"]) == -1
    with pytest.raises(DomainError):
        pseudotree_slope_at_two(path_graph(4))


def test_hypercube_examples(fx):
    for name in ("g1", "g2"):
        assert has_hypercube(fx[name], 5, 5)
        assert not has_hypercube(fx[name], 4, 4)
        assert has_hypercube(fx[name], 7, 6)
    assert not has_hypercube(path_graph(3), 4, 9)
    assert has_hypercube(path_graph(3), 0, 2) and not has_hypercube(path_graph(3), 0, 1)
    assert hypercube_first_appearance(fx["g1"], 8, 8) == [3, 4, 4, 4, 5, 5, 6, 6, None]


def test_hypercube_sufficiency(fx):
    assert hypercube_sufficient(fx["t3"], 4, 3)
    assert not hypercube_sufficient(fx["t2"], 4, 3)
    assert not has_hypercube(fx["t2"], 4, 3)
    assert has_hypercube(fx["t3"], 4, 3)
    for s in range(4):
        assert hypercube_sufficient(null_graph(s), s, 2)
    for name, g in fx.items():
        if g.n > 6:
            continue
        for s in range(g.n + 1):
            for k in range(1, 5):
                if hypercube_sufficient(g, s, k):
                    assert has_hypercube(g, s, k), (name, s, k)


def test_chromatic_number(fx):
    assert chromatic_number(null_graph(0)) == 0
    assert chromatic_number(null_graph(3)) == 1
    assert chromatic_number(cycle_graph(5)) == 3
    assert chromatic_number(fx["g1"]) == 3

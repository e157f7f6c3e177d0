from __future__ import annotations

import random

import pytest

from conftest import atlas, random_graph
from hpoly.errors import DomainError
from hpoly.graph import cycle_graph, null_graph, path_graph
from hpoly.poly import Poly, binomial_poly
from hpoly.closed_forms import FamilySpec, pairs_closed
from hpoly.restrained import (Restraint, count_restrained_colorings, restraint_from_generator,
                              rho, rho_outside)

K = Poly([0, 1])


def random_restraint(g, rng, max_color=3):
    return Restraint({v: rng.sample(range(1, max_color + 1), rng.randint(0, 2)) for v in range(g.n)})


def test_examples():
    assert rho(null_graph(1), {0: [1]}) == K - 1
    assert rho(cycle_graph(4)) == (K - 1) ** 4 + (K - 1)
    assert rho(path_graph(2), {0: [1], 1: [2]}) == K ** 2 - 3 * K + 3
    assert rho(null_graph(0)) == Poly([1])


def test_sigma_relation_to_cycle_pairs():
    for n in range(3, 8):
        sigma = rho(path_graph(n - 1), {0: [1, 2], n - 2: [1, 2]})
        assert n * binomial_poly(2) * sigma == pairs_closed(FamilySpec("cycle", n))


def test_brute_force_agreement():
    rng = random.Random(2)
    for g in atlas(5):
        for _ in range(2):
            r = random_restraint(g, rng)
            p = rho(g, r)
            for k in range(max(r.max_color, 1), 7):
                assert p(k) == count_restrained_colorings(g, r, k)


def test_shape_of_restrained_polynomials():
    rng = random.Random(4)
    for _ in range(200):
        g = random_graph(rng.randint(1, 6), 0.5, rng)
        r = random_restraint(g, rng, 4)
        p = rho(g, r)
        assert p.degree == g.n and p.leading == 1
        assert all((p.coeff(i) >= 0) == ((g.n - i) % 2 == 0) or p.coeff(i) == 0
                   for i in range(g.n + 1))
        assert -p.coeff(g.n - 1) == g.m + r.total_entries


def test_edge_order_independence():
    rng = random.Random(6)
    for _ in range(150):
        g = random_graph(rng.randint(1, 5), 0.6, rng)
        r = random_restraint(g, rng)
        assert rho(g, r) == rho(g, r, edge_choice="max", memo=False) == rho(g, r, memo=False)


def test_restraint_from_generator():
    p3 = path_graph(3)
    r = restraint_from_generator(p3, {0, 2}, [{0: 1, 2: 2}, {0: 3, 2: 2}, {0: 1, 2: 3}])
    assert r[1] == {1, 2, 3}
    # the worked example uses colorings (1,2), (1,3) on (v1, v3)
    r = restraint_from_generator(p3, [0, 2], [(2, 1), (3, 1)])
    assert r[1] == {1, 2, 3}
    r = restraint_from_generator(p3, [0, 2], [(1, 2), (1, 3)])
    assert r[1] == {1, 2, 3}
    r = restraint_from_generator(path_graph(3), [0, 2], [(2, 2), (3, 2)])
    assert r[1] == {2, 3}
    assert restraint_from_generator(p3, [], [()]) == Restraint()
    r = restraint_from_generator(p3, [1], [(1,), (2,)])
    assert r[0] == r[2] == {1, 2}
    with pytest.raises(DomainError):
        restraint_from_generator(p3, [0, 1], [{0: 1}])


def test_rho_outside_relabels():
    g = path_graph(3)
    r = restraint_from_generator(g, [1], [(1,), (2,)])
    assert rho_outside(g, [1], r) == (K - 2) ** 2


def test_restraint_json_round_trip():
    r = Restraint({0: [2, 1], 3: [4]})
    assert Restraint.from_json(r.to_json()) == r
    assert r.max_color == 4 and r.total_entries == 3
    assert Restraint().max_color == 0
    with pytest.raises(DomainError):
        Restraint({0: [0]})
    with pytest.raises(DomainError):
        rho(path_graph(2), {5: [1]})

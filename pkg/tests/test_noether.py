import pytest

from hopfbase.errors import SizeLimit
from hopfbase.groups import cyclic, klein_four, regular_action, symmetric3
from hopfbase.laurent import LaurentPoly
from hopfbase.noether import (
    coaction_action_dictionary_check,
    invariant_basis,
    invariant_generators,
    molien_coefficients,
    reynolds,
    theta_invariance_check,
)


@pytest.mark.parametrize("G", [cyclic(2), cyclic(3), cyclic(4), klein_four(), symmetric3()], ids=lambda G: G.name)
def test_molien_matches_orbit_sums(G):
    D = 4
    assert molien_coefficients(G, D) == [len(invariant_basis(G, d)) if d else 1 for d in range(D + 1)]


def test_reynolds_projects_onto_invariants():
    G = cyclic(3)
    P = LaurentPoly.var(3, 0) * LaurentPoly.var(3, 1) ** 2
    R = reynolds(G, P)
    assert all(regular_action(G, h, R) == R for h in range(3))
    assert reynolds(G, R) == R


def test_cyclic_top_degree():
    assert invariant_generators(cyclic(2), 2).top_degree == 2
    assert invariant_generators(cyclic(3), 3).top_degree == 3
    sl = invariant_generators(cyclic(4), 5)
    assert sl.top_degree == 4 and sl.generators_by_degree[5] == []


def test_klein_four_stops_early():
    sl = invariant_generators(klein_four(), 4)
    assert sl.top_degree == 3
    assert sl.dims_by_degree[4][0] == sl.dims_by_degree[4][1]


def test_size_limits():
    with pytest.raises(SizeLimit):
        invariant_generators(cyclic(7), 2)
    with pytest.raises(SizeLimit):
        invariant_generators(cyclic(2), 4)


@pytest.mark.parametrize("G", [cyclic(2), cyclic(3), cyclic(4), symmetric3()], ids=lambda G: G.name)
def test_theta_character(G):
    r = theta_invariance_check(G)
    assert r["ok"]


def test_dictionary():
    for G in (cyclic(3), symmetric3()):
        r = coaction_action_dictionary_check(G, seed=3)
        assert r["ok"], r["witnesses"]

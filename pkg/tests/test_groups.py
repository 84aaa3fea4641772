import pytest

from hopfbase.errors import InputError, InvalidGroup, SizeLimit
from hopfbase.groups import (
    LatticeBasis,
    abelianization,
    cyclic,
    dedekind_determinant,
    dihedral,
    group_by_name,
    group_from_json,
    klein_four,
    lattice_basis_explicit,
    lattice_equals_oracle,
    primary_decompose,
    quaternion8,
    regular_action,
    symmetric3,
)

GROUPS = [cyclic(n) for n in range(1, 9)] + [klein_four(), symmetric3(), dihedral(4), quaternion8()]


@pytest.mark.parametrize("G", GROUPS, ids=lambda G: G.name)
def test_group_axioms(G):
    G.validate()
    for a in range(G.order):
        assert G.mul(a, G.inv(a)) == G.identity


@pytest.mark.parametrize(
    "G, order",
    [(cyclic(6), 6), (symmetric3(), 2), (dihedral(4), 4), (quaternion8(), 4), (klein_four(), 4)],
    ids=lambda x: getattr(x, "name", str(x)),
)
def test_abelianization_orders(G, order):
    Gab, proj = abelianization(G)
    assert Gab.order == order and Gab.is_abelian()
    for a in range(G.order):
        for b in range(G.order):
            assert proj[G.mul(a, b)] == Gab.mul(proj[a], proj[b])


def test_primary_decomposition_z6():
    dec = primary_decompose(cyclic(6))
    assert sorted(dec.primary_orders) == [2, 3]
    assert dec.d == 5 and dec.r == 2


def test_primary_decomposition_klein():
    dec = primary_decompose(klein_four())
    assert dec.primary_orders == [2, 2]


@pytest.mark.parametrize("G", GROUPS, ids=lambda G: G.name)
def test_lattice_oracle(G):
    Gab, proj = abelianization(G)
    dec = primary_decompose(Gab)
    lat = lattice_basis_explicit(G, proj, dec)
    assert lattice_equals_oracle(lat, G, proj, dec)
    assert abs(lat.det()) == Gab.order
    assert max(lat.degrees()) <= dec.d - dec.r + 1


def test_lattice_oracle_rejects_wrong_basis():
    G = cyclic(4)
    Gab, proj = abelianization(G)
    dec = primary_decompose(Gab)
    lat = lattice_basis_explicit(G, proj, dec)
    cols = [list(c) for c in lat.columns]
    cols[0] = [2 * x for x in cols[0]]
    bad = LatticeBasis(lat.ambient_rank, cols, lat.provenance, lat.lifts)
    assert not lattice_equals_oracle(bad, G, proj, dec)


def test_dedekind_size_limit():
    with pytest.raises(SizeLimit):
        dedekind_determinant(quaternion8(), size_limit=6)


@pytest.mark.parametrize("G", [cyclic(2), cyclic(4), symmetric3()], ids=lambda G: G.name)
def test_theta_square_invariant(G):
    sq = dedekind_determinant(G) ** 2
    assert all(regular_action(G, h, sq) == sq for h in range(G.order))


def test_group_json():
    G = group_from_json({"elements": ["e", "a"], "table": [[0, 1], [1, 0]]})
    assert G.order == 2
    with pytest.raises(InputError):
        group_from_json({"elements": ["e", "a"], "table": [[0, 1], [0, 0]]})
    with pytest.raises(InputError):
        group_from_json({"elements": ["e"]})


def test_group_by_name():
    assert group_by_name("Z4").order == 4
    assert group_by_name("Q8").order == 8
    assert group_by_name("trivial").order == 1


def test_invalid_table_rejected():
    from hopfbase.groups import FiniteGroup

    with pytest.raises(InvalidGroup):
        FiniteGroup(["e", "a", "b"], [[0, 1, 2], [1, 0, 2], [2, 2, 0]])

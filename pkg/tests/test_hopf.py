import pytest

from hopfbase.errors import NotGrouplike, ShapeMismatch, UndeclaredCoradical
from hopfbase.groups import cyclic, symmetric3
from hopfbase.hopf import (
    HopfAlgebraData,
    change_basis,
    coradical_dim,
    dual,
    functions_on_group,
    group_algebra,
    grouplike_certify,
    hab_is_group_algebra,
    hab_quotient,
    sweedler,
    taft,
    uqbar_sl2,
    verify_hopf,
)


@pytest.mark.parametrize(
    "H, expected",
    [
        (sweedler(), 2),
        (taft(3), 3),
        (group_algebra(symmetric3()), 6),
        (functions_on_group(symmetric3()), 6),
        (functions_on_group(cyclic(4)), 4),
        (uqbar_sl2(2), 2),
    ],
    ids=lambda x: getattr(x, "name", str(x)),
)
def test_coradical_dimension(H, expected):
    assert coradical_dim(H) == expected


def test_sweedler_structure():
    H = sweedler()
    v, g, one = H.index("v"), H.index("g"), H.index("1")
    assert H.coproduct({v: 1}) == {(one, v): 1, (v, g): 1}
    assert H.multiply({v: 1}, {v: 1}) == {}
    assert H.multiply({g: 1}, {g: 1}) == {one: 1}
    assert not H.is_commutative()


def test_corrupted_structure_fails_coassociativity():
    H = sweedler()
    comul = [dict(c) for c in H.comul]
    v, g = H.index("v"), H.index("g")
    comul[v][(v, g)] = comul[v][(v, g)] * 2
    bad = HopfAlgebraData("bad", H.field, H.basis, H.mul, H.unit, comul, H.counit, H.antipode)
    rep = verify_hopf(bad)
    failed = {c.name: c.witness for c in rep.failures()}
    assert failed["coassociativity"] == "v"


def test_shape_mismatch():
    H = sweedler()
    with pytest.raises(ShapeMismatch):
        HopfAlgebraData("bad", H.field, H.basis, H.mul, H.unit, H.comul[:3], H.counit, H.antipode)


def test_grouplike_certification():
    GL = grouplike_certify(taft(3))
    assert GL.ell == 3 and GL.pointed and GL.group.is_abelian()


def test_declared_non_grouplike_rejected():
    H = sweedler()
    H.grouplikes = [{0: 1}, {H.index("v"): 1}]
    with pytest.raises(NotGrouplike):
        grouplike_certify(H)


def test_undeclared_coradical():
    with pytest.raises(UndeclaredCoradical) as info:
        grouplike_certify(functions_on_group(symmetric3()))
    assert info.value.coradical_dim == 6


@pytest.mark.parametrize(
    "H, order",
    [(sweedler(), 2), (taft(4), 4), (group_algebra(symmetric3()), 2), (uqbar_sl2(2), 2)],
    ids=lambda x: getattr(x, "name", str(x)),
)
def test_hab(H, order):
    QH = hab_quotient(H)
    assert QH.dim == order
    assert QH.quotient.is_commutative()
    assert verify_hopf(QH.quotient).ok
    info = hab_is_group_algebra(QH, grouplike_certify(H))
    assert info.ok and info.Gbar.order == order


def test_hab_of_uqbar3_is_trivial():
    assert hab_quotient(uqbar_sl2(3)).dim == 1


def test_dual_is_hopf():
    D = dual(sweedler())
    assert verify_hopf(D).ok
    assert dual(group_algebra(symmetric3())).is_commutative()


def test_change_basis_keeps_axioms():
    H = functions_on_group(cyclic(3))
    G = change_basis(H, H.grouplikes, ["c0", "c1", "c2"])
    assert verify_hopf(G).ok
    assert G.is_commutative()

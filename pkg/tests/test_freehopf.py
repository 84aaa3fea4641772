import pytest

from hopfbase.errors import NegativeExponent
from hopfbase.freehopf import FreeHopf
from hopfbase.genbase import prepare
from hopfbase.groups import cyclic
from hopfbase.hopf import group_algebra, sweedler, taft
from hopfbase.laurent import LaurentPoly


@pytest.fixture(scope="module")
def sw():
    return prepare(sweedler())


def test_tinv_of_grouplike_is_inverse(sw):
    F, H = sw.F, sw.H
    g = H.index("g")
    assert F.tinv[g] == F.frac(F.t[g] ** -1)


def test_tinv_relations(sw):
    assert sw.F.check_tinv() == []


def test_theta_counit_and_grouplike(sw):
    F = sw.F
    theta, theta_p = F.theta_pair
    assert F.counit(theta) == 1
    assert F.is_grouplike(theta) and F.is_grouplike(theta_p)
    assert F.qtilde(theta * theta_p, sw.QH) == sw.QH.quotient.one()


def test_theta_of_group_algebra_is_product():
    # the comatrix of k[Z2] is diagonal, so Theta is the product of the t_g
    H = group_algebra(cyclic(2))
    F = FreeHopf(H)
    theta, _ = F.theta_pair
    assert theta == F.t[0] * F.t[1]


def test_antipode_and_counit_law():
    F = prepare(taft(3)).F
    assert F.check_antipode_involution() == []
    assert F.check_counit_law() == []


def test_coaction_axioms(sw):
    assert sw.F.check_coaction(sw.QH) == []


def test_coaction_on_v(sw):
    F, QH, H = sw.F, sw.QH, sw.H
    v = H.index("v")
    value = F.coaction(F.t[v], QH)
    # q(v) = 0 and q(g) = gbar
    gbar = next(m for m, c in QH.projection[H.index("g")].items())
    assert value.comps == {gbar: F.t[v]}


def test_negative_exponent_rejected(sw):
    F, H = sw.F, sw.H
    with pytest.raises(NegativeExponent):
        F.coproduct(F.t[H.index("v")] ** -1)


def test_coproduct_of_t_v(sw):
    F, H = sw.F, sw.H
    one, g, v = (H.index(x) for x in ("1", "g", "v"))
    n = F.n
    expected = F.tensor(F.t[one], F.t[v]) + F.tensor(F.t[v], F.t[g])
    assert F.coproduct(F.t[v]) == expected

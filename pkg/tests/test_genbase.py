import pytest

from hopfbase.errors import GammaInvalid, HypothesisNotMet
from hopfbase.genbase import (
    build_presentation,
    default_gamma,
    jacobian_rank,
    localization_witness,
    make_generator,
    monoid_membership,
    prepare,
    skew_primitive_type,
    verify_gamma,
    verify_generator_coinvariance,
)
from hopfbase.groups import cyclic, symmetric3
from hopfbase.hopf import group_algebra, sweedler, taft
from hopfbase.laurent import LaurentPoly


@pytest.fixture(scope="module")
def sw():
    return prepare(sweedler())


def test_sweedler_presentation(sw):
    pres = build_presentation(sw.H, ctx=sw)
    js = pres.to_json()
    assert [g["monomial"] for g in js["laurent_generators"]] == ["t[1]", "t[g]^2"]
    assert [g["monomial"] for g in js["polynomial_generators"]] == ["t[g]*t[v]", "t[gv]"]
    assert (pres.n, pres.ell, pres.degree_bound, pres.lattice_det) == (4, 2, 2, 2)
    assert all(pres.checks.values())


def test_taft3_presentation():
    pres = build_presentation(taft(3))
    assert (pres.n, pres.ell, pres.degree_bound) == (9, 3, 3)
    assert [sum(e) for e in pres.laurent_gens] == [1, 3, 2]
    assert all(sum(e) <= 2 for e in pres.poly_gens)


def test_group_algebra_presentation_is_laurent():
    pres = build_presentation(group_algebra(symmetric3()))
    assert pres.poly_gens == [] and pres.ell == 6 and abs(pres.lattice_det) == 2


def test_membership(sw):
    pres = build_presentation(sw.H, ctx=sw)
    v = sw.H.index("v")
    assert not monoid_membership(sw.F.t[v], pres)
    for x in range(4):
        assert monoid_membership(make_generator(sw.F, "p", x).value.as_laurent(), pres)
    assert jacobian_rank(pres) == 4


def test_generator_coinvariance(sw):
    result = verify_generator_coinvariance(sw.F, sw.QH)
    assert result["ok"]
    assert result["counts"]["q"] == 16 and result["counts"]["p"] == 4


def test_generator_arity():
    F = prepare(sweedler()).F
    with pytest.raises(ValueError):
        make_generator(F, "q", 0)
    with pytest.raises(ValueError):
        make_generator(F, "nope", 0)


def test_default_gamma_certified(sw):
    cert = verify_gamma(sw.H, default_gamma(sw.H, sw.grouplike_indices), sw.grouplike_indices, sw.QH)
    assert all(c["ok"] for c in cert.values())


def test_gamma_one_minus_g(sw):
    # gamma(v) = 1 - g is a coalgebra map but neither a right module map nor compatible with q
    H = sw.H
    gamma = default_gamma(H, sw.grouplike_indices)
    gamma[H.index("v")] = {H.index("1"): 1, H.index("g"): -1}
    cert = verify_gamma(H, gamma, sw.grouplike_indices, sw.QH)
    assert cert["coalgebra_map"]["ok"]
    assert not cert["right_module_map"]["ok"]
    assert cert["right_module_map"]["witness"] == ["v", "g"]
    assert not cert["compatible_with_q"]["ok"]
    with pytest.raises(GammaInvalid):
        build_presentation(H, gamma=gamma, ctx=sw)


def test_skew_primitive_type(sw):
    H = sw.H
    assert skew_primitive_type(H, H.index("v"), sw.grouplike_indices) == (H.index("1"), H.index("g"))
    assert skew_primitive_type(H, H.index("g"), sw.grouplike_indices) is None


def test_localization_witnesses(sw):
    H = sw.H
    records = localization_witness(sw.F, H.index("v"), H.index("g"), sw.grouplike_indices)
    assert len(records) == 2 and all(r["holds"] for r in records)


def test_localization_hypotheses():
    ctx = prepare(taft(3))
    H = ctx.H
    with pytest.raises(HypothesisNotMet):
        localization_witness(ctx.F, H.index("x^2"), None, ctx.grouplike_indices)
    with pytest.raises(HypothesisNotMet):
        localization_witness(ctx.F, H.index("g"), H.index("x"), ctx.grouplike_indices)

import pytest

from hopfbase.errors import SizeLimit
from hopfbase.freehopf import FreeHopf
from hopfbase.genbase import make_generator, prepare
from hopfbase.groups import cyclic
from hopfbase.hopf import group_algebra, hab_quotient, sweedler, taft
from hopfbase.laurent import LaurentPoly
from hopfbase.pitheory import (
    NcPoly,
    canonical_coinvariants,
    check_delta_T,
    check_mu_comodule_map,
    delta_T,
    identities_in_degree,
    is_identity,
    iyer_truncated_check,
    mu,
    pi_abelianize,
    random_words,
    square_check,
    verify_canonical,
)


@pytest.fixture(scope="module")
def sw():
    return prepare(sweedler())


def letters(H, *labels):
    return NcPoly.word(H.dim, [H.index(x) for x in labels])


def test_delta_T_on_letters(sw):
    H = sw.H
    one, g, v = (H.index(x) for x in ("1", "g", "v"))
    assert delta_T(H, letters(H, "v")) == {((one,), v): 1, ((v,), g): 1}
    assert delta_T(H, NcPoly.one(4)) == {((), one): 1}
    assert delta_T(H, letters(H, "g", "g")) == {((g, g), one): 1}
    assert check_delta_T(H) == []


def test_mu_examples(sw):
    F, H = sw.F, sw.H
    one, g, v = (H.index(x) for x in ("1", "g", "v"))
    assert mu(F, letters(H, "g")).comps == {g: F.t[g]}
    assert mu(F, letters(H, "v")).comps == {v: F.t[one], g: F.t[v]}
    assert mu(F, NcPoly.one(4)).comps == {one: LaurentPoly.const(4, 1)}


def test_identities(sw):
    F, H = sw.F, sw.H
    commutator = letters(H, "1", "v") - letters(H, "v", "1")
    assert is_identity(F, commutator)
    assert not is_identity(F, letters(H, "g"))
    ids = identities_in_degree(F, 2)
    assert ids and all(is_identity(F, P) for P in ids)
    for w in random_words(4, count=10, seed=1):
        assert is_identity(F, ids[0] * w) and is_identity(F, w * ids[0])


def test_pi(sw):
    H = sw.H
    assert pi_abelianize(letters(H, "g", "v") - letters(H, "v", "g")) == LaurentPoly.zero(4)
    assert pi_abelianize(NcPoly.one(4)) == LaurentPoly.const(4, 1)


def test_canonical_group_algebra():
    H = group_algebra(cyclic(2))
    F = FreeHopf(H)
    P = canonical_coinvariants(H, 1)
    assert P == NcPoly.word(2, [1, 1])
    assert mu(F, P).comps == {0: F.t[1] ** 2}
    assert all(verify_canonical(F, 1).values())


def test_canonical_sweedler_q(sw):
    H = sw.H
    r = verify_canonical(sw.F, H.index("g"), H.index("v"))
    assert all(r.values())


def test_square(sw):
    H = sw.H
    assert square_check(sw.F, sw.QH, letters(H, "v"))
    assert square_check(sw.F, sw.QH, NcPoly.one(4))
    ctx = prepare(taft(3))
    for w in random_words(9, count=20, max_length=3, seed=5):
        assert square_check(ctx.F, ctx.QH, w)
        assert check_mu_comodule_map(ctx.F, w)


def test_word_length_cap(sw):
    with pytest.raises(SizeLimit):
        mu(sw.F, NcPoly.word(4, [0] * 7))


def test_iyer_small():
    r = iyer_truncated_check(cyclic(2), 2)
    assert r["ok"]
    assert [d["s_invariant_dim"] for d in r["degrees"]] == [1, 1, 2]
    assert iyer_truncated_check(cyclic(1), 3)["ok"]
    with pytest.raises(SizeLimit):
        iyer_truncated_check(cyclic(4), 2)

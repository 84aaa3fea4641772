"""Acceptance criteria, one test each.

Every test prints a single PASS/FAIL line (visible even under captured
output) and then asserts. All comparisons are exact.
"""

from dataclasses import replace
from itertools import product

import pytest

from hopfbase.freehopf import FreeHopf
from hopfbase.genbase import (
    build_presentation,
    localization_witness,
    monoid_membership,
    prepare,
    skew_primitive_type,
)
from hopfbase.groups import (
    abelianization,
    cyclic,
    dedekind_determinant,
    dihedral,
    klein_four,
    lattice_basis_explicit,
    lattice_equals_oracle,
    primary_decompose,
    quaternion8,
    regular_action,
    symmetric3,
)
from hopfbase.hopf import (
    functions_on_group,
    grouplike_certify,
    group_algebra,
    hab_is_group_algebra,
    hab_quotient,
    sweedler,
    taft,
    uqbar_sl2,
    verify_hopf,
)
from hopfbase.laurent import LaurentPoly
from hopfbase.noether import coaction_action_dictionary_check, invariant_generators
from hopfbase.pitheory import iyer_truncated_check, random_words, square_check, verify_canonical


def _builtins():
    out = [("k[Z%d]" % n, lambda n=n: group_algebra(cyclic(n))) for n in range(1, 9)]
    out += [("O(Z%d)" % n, lambda n=n: functions_on_group(cyclic(n))) for n in range(1, 5)]
    out += [
        ("O(S3)", lambda: functions_on_group(symmetric3())),
        ("k[S3]", lambda: group_algebra(symmetric3())),
        ("sweedler", sweedler),
        ("taft2", lambda: taft(2)),
        ("taft3", lambda: taft(3)),
        ("taft4", lambda: taft(4)),
        ("uqbar2", lambda: uqbar_sl2(2)),
        ("uqbar3", lambda: uqbar_sl2(3)),
    ]
    return out


BUILTINS = _builtins()
_cache = {}


def algebra(name):
    if name not in _cache:
        _cache[name] = dict(BUILTINS)[name]()
    return _cache[name]


def context(name):
    key = ("ctx", name)
    if key not in _cache:
        _cache[key] = prepare(algebra(name))
    return _cache[key]


def pointed_names():
    return [name for name, _ in BUILTINS if name != "O(S3)"]


@pytest.fixture
def announce(capsys):
    def emit(number, text, ok, detail=""):
        line = "[%s] criterion %2d: %s%s" % ("PASS" if ok else "FAIL", number, text, (" (%s)" % detail) if detail else "")
        with capsys.disabled():
            print("\n" + line)
        return ok

    return emit


# 1
def test_criterion_01_hopf_axioms(announce):
    failures = {}
    for name, _ in BUILTINS:
        rep = verify_hopf(algebra(name))
        if not rep.ok:
            failures[name] = [c.name for c in rep.failures()]
    announce(1, "Hopf axiom suite on %d built-ins" % len(BUILTINS), not failures, failures or "")
    assert not failures


# 2
def test_criterion_02_sweedler_presentation(announce):
    H = sweedler()
    pres = build_presentation(H)
    n = pres.n
    i1, ig, iv, igv = (H.index(x) for x in ("1", "g", "v", "gv"))

    def e(**kw):
        v = [0] * n
        for k, c in kw.items():
            v[{"one": i1, "g": ig, "v": iv, "gv": igv}[k]] = c
        return tuple(v)

    expected = replace(pres, laurent_gens=[e(one=1), e(g=2)], poly_gens=[e(g=1, v=1), e(gv=1)])
    mono = lambda exps: LaurentPoly.monomial(n, exps)
    forward = all(monoid_membership(mono(x), pres) for x in expected.laurent_gens + expected.poly_gens)
    forward &= all(monoid_membership(mono(tuple(-c for c in x)), pres) for x in expected.laurent_gens)
    backward = all(monoid_membership(mono(x), expected) for x in pres.laurent_gens + pres.poly_gens)
    backward &= all(monoid_membership(mono(tuple(-c for c in x)), expected) for x in pres.laurent_gens)
    # t_v alone is not in the monoid
    strict = not monoid_membership(mono(e(v=1)), pres)
    ok = forward and backward and strict
    announce(2, "Sweedler monoid equals <t_1^+-1, (t_g^2)^+-1, t_g t_v, t_gv>", ok)
    assert ok


# 3
def test_criterion_03_sweedler_census(announce):
    ctx = context("sweedler")
    F, QH, H = ctx.F, ctx.QH, ctx.H
    order = [H.index(x) for x in ("1", "g", "v", "gv")]
    checked, mismatches = 0, []
    for a, b, c, d in product(range(5), repeat=4):
        if a + b + c + d > 4:
            continue
        e = [0] * 4
        for idx, k in zip(order, (a, b, c, d)):
            e[idx] = k
        checked += 1
        if F.is_coinvariant(LaurentPoly.monomial(4, e), QH) != ((b + c) % 2 == 0):
            mismatches.append((a, b, c, d))
    ok = checked == 70 and not mismatches
    announce(3, "Sweedler coinvariance census over %d monomials" % checked, ok, mismatches[:5] or "")
    assert ok


# 4
SPECIFIC = {"sweedler": (4, 2, 2), "taft3": (9, 3, 3), "taft4": (16, 4, 4), "k[S3]": (6, 6, 2)}


def test_criterion_04_presentation_counts(announce):
    bad = {}
    for name in pointed_names():
        ctx = context(name)
        pres = build_presentation(ctx.H, ctx=ctx)
        G = ctx.grouplikes.group
        conditions = {
            "ell": pres.ell == G.order == len(pres.laurent_gens),
            "n": len(pres.generators()) == pres.n == ctx.H.dim,
            "laurent_degree": all(sum(e) <= pres.degree_bound for e in pres.laurent_gens),
            "poly_degree": all(sum(e) <= 2 for e in pres.poly_gens),
            "det": abs(pres.lattice_det) == ctx.hab.Gbar.order,
            "checks": all(pres.checks.values()),
        }
        if name in SPECIFIC:
            conditions["values"] = (pres.n, pres.ell, pres.degree_bound) == SPECIFIC[name]
        failed = [k for k, v in conditions.items() if not v]
        if failed:
            bad[name] = failed
    announce(4, "presentation counts and degree bounds on %d pointed built-ins" % len(pointed_names()), not bad, bad or "")
    assert not bad


# 5
def test_criterion_05_lattice_oracle(announce):
    groups = [cyclic(n) for n in range(1, 9)] + [klein_four(), symmetric3(), dihedral(4), quaternion8()]
    bad = []
    for G in groups:
        Gab, proj = abelianization(G)
        dec = primary_decompose(Gab)
        lat = lattice_basis_explicit(G, proj, dec)
        if not (lattice_equals_oracle(lat, G, proj, dec) and abs(lat.det()) == Gab.order):
            bad.append(G.name)
    announce(5, "lattice basis equals the Hermite kernel lattice for %d groups" % len(groups), not bad, bad or "")
    assert not bad


# 6
def _is_cyclic_of_order(G, n):
    return G.order == n and any(G.element_order(g) == n for g in range(G.order))


def test_criterion_06_hab_values(announce):
    expectations = {"sweedler": 2, "taft2": 2, "taft3": 3, "taft4": 4, "k[S3]": 2, "uqbar3": 1, "uqbar2": 2}
    bad = {}
    for name, order in expectations.items():
        H = algebra(name)
        QH = hab_quotient(H)
        info = hab_is_group_algebra(QH, grouplike_certify(H))
        if not (QH.dim == order and info.ok and _is_cyclic_of_order(info.Gbar, order)):
            bad[name] = QH.dim
    announce(6, "H_ab dimensions and groups", not bad, bad or "")
    assert not bad


# 7
def test_criterion_07_tinv_relations(announce):
    bad = {}
    for name, _ in BUILTINS:
        F = context(name).F if name != "O(S3)" else FreeHopf(algebra(name), invertible=[])
        failing = F.check_tinv()
        if failing:
            bad[name] = failing
    announce(7, "t_x1 t^-1_x2 = eps(x) = t^-1_x1 t_x2 on every built-in", not bad, bad or "")
    assert not bad


# 8
def test_criterion_08_theta_grouplike(announce):
    bad = {}
    names = [name for name, _ in BUILTINS if algebra(name).dim <= 16]
    for name in names:
        if name == "O(S3)":
            H = algebra(name)
            F, QH = FreeHopf(H, invertible=[]), hab_quotient(H)
        else:
            F, QH = context(name).F, context(name).QH
        theta, theta_p = F.theta_pair
        ok = F.is_grouplike(theta) and F.is_grouplike(theta_p)
        ok = ok and F.qtilde(theta * theta_p, QH) == QH.quotient.one()
        if not ok:
            bad[name] = False
    announce(8, "Delta(Theta), Delta(Theta'), q(Theta Theta') = 1 on %d built-ins" % len(names), not bad, bad or "")
    assert not bad


# 9
def test_criterion_09_dedekind(announce):
    G = cyclic(3)
    t = [LaurentPoly.var(3, i) for i in range(3)]
    circulant = t[0] ** 3 + t[1] ** 3 + t[2] ** 3 - t[0] * t[1] * t[2] * 3
    ok_circ = dedekind_determinant(G) == circulant
    groups = [cyclic(n) for n in range(1, 6)] + [symmetric3()]
    ok_sq, ok_dict = True, True
    for H in groups:
        sq = dedekind_determinant(H) ** 2
        ok_sq &= all(regular_action(H, h, sq) == sq for h in range(H.order))
        ok_dict &= coaction_action_dictionary_check(H)["ok"]
    ok = ok_circ and ok_sq and ok_dict
    announce(9, "Dedekind determinant, Theta^2 invariance, O(G) dictionary", ok,
             "circulant=%s square=%s dictionary=%s" % (ok_circ, ok_sq, ok_dict))
    assert ok


# 10
def test_criterion_10_pi_suite(announce):
    bad = {}
    for name in ("sweedler", "taft3"):
        ctx = context(name)
        n = ctx.H.dim
        for x in range(n):
            for y in [None] + list(range(n)):
                r = verify_canonical(ctx.F, x, y)
                if not all(r.values()):
                    bad.setdefault(name, []).append((x, y))
    for name, _ in BUILTINS:
        if name == "O(S3)":
            H = algebra(name)
            F, QH = FreeHopf(H, invertible=[]), hab_quotient(H)
        else:
            F, QH = context(name).F, context(name).QH
        words = random_words(F.n, count=100, max_length=4, seed=0)
        if not all(square_check(F, QH, w) for w in words):
            bad.setdefault(name, []).append("square")
    announce(10, "mu(P_x) = p_x, mu(Q_xy) = q_xy, coinvariance, square on 100 words", not bad, bad or "")
    assert not bad


# 11
def test_criterion_11_localization_witnesses(announce):
    bad, count = [], 0
    for name in ("sweedler", "taft3"):
        ctx = context(name)
        H, F, gl = ctx.H, ctx.F, ctx.grouplike_indices
        for x in range(H.dim):
            grouplike = x in gl
            skew = skew_primitive_type(H, x, gl) is not None and not H.counit[x]
            if not (grouplike or skew):
                continue
            records = localization_witness(F, x, None, gl)
            for y in gl:
                records += [r for r in localization_witness(F, x, y, gl) if "y" in r]
            count += len(records)
            bad += [(name, r["identity"], r["x"], r.get("y")) for r in records if not r["holds"]]
    ok = count > 0 and not bad
    announce(11, "%d localization identities in sweedler and taft3" % count, ok, bad[:5] or "")
    assert ok


# 12
def test_criterion_12_iyer(announce):
    bad = {}
    for G in (cyclic(2), cyclic(3)):
        r = iyer_truncated_check(G, 3)
        if not r["ok"]:
            bad[G.name] = r["degrees"]
    announce(12, "truncated coinvariant surjection for Z2, Z3 up to degree 3", not bad, bad or "")
    assert not bad


# 13
def test_criterion_13_noether_bound(announce):
    z2 = invariant_generators(cyclic(2), 2).top_degree
    z3 = invariant_generators(cyclic(3), 3).top_degree
    v4 = invariant_generators(klein_four(), 4).top_degree
    ok = z2 == 2 and z3 == 3 and v4 < 4
    announce(13, "top generator degrees Z2=%d, Z3=%d, Z2xZ2=%d (to degree 4)" % (z2, z3, v4), ok)
    assert ok

"""Generators and an explicit presentation of the generic base algebra B_H.

For a pointed H whose commutative quotient H_ab is a group algebra, B_H is
generated by Laurent monomials in the group-like variables (a basis of the
kernel lattice of Z^G -> Gbar) together with one polynomial monomial of
degree <= 2 for every non-group basis element.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import GammaInvalid, HypothesisNotMet, MissingAdaptedBasis
from .groups import lattice_basis_explicit, lattice_equals_oracle, primary_decompose
from .hopf import (
    _acc,
    _is_grouplike,
    change_basis,
    derive_group_part,
    grouplike_certify,
    hab_is_group_algebra,
    hab_quotient,
)
from .freehopf import FreeHopf
from .laurent import FracElem, LaurentPoly
from .linalg import rank, solve

__all__ = [
    "GeneratorElement",
    "PresentationBH",
    "make_generator",
    "verify_generator_coinvariance",
    "verify_gamma",
    "default_gamma",
    "build_presentation",
    "prepare",
    "GenericBaseContext",
    "monoid_membership",
    "jacobian_rank",
    "skew_primitive_type",
    "localization_witness",
]

KINDS = ("sigma", "sigma_inv", "p", "q", "p_prime", "q_prime")
TWO_ARG = {"sigma", "sigma_inv", "q", "q_prime"}


@dataclass
class GeneratorElement:
    kind: str
    args: tuple
    value: FracElem


def _pairs(H, x, y):
    """(a, b, c, d, coef) over Delta(x) = sum x_a (x) x_b and Delta(y)."""
    for (a, b), c1 in H.comul[x].items():
        for (c, d), c2 in H.comul[y].items():
            yield a, b, c, d, c1 * c2


def make_generator(F, kind, x, y=None):
    """Evaluate one of sigma, sigma_inv, p, q, p_prime, q_prime exactly.

    ``x`` and ``y`` are basis indices of H.
    """
    if kind not in KINDS:
        raise ValueError("unknown generator kind %r" % kind)
    if (kind in TWO_ARG) != (y is not None):
        raise ValueError("generator %s takes %s argument(s)" % (kind, 2 if kind in TWO_ARG else 1))
    H = F.H
    n = F.n
    t, tinv = F.t, F.tinv
    if kind == "p":
        total = LaurentPoly.zero(n)
        for (a, b), c in H.comul[x].items():
            total = total + t[a] * F.t_S({b: 1}) * c
        value = F.frac(total)
    elif kind == "q":
        total = LaurentPoly.zero(n)
        for a, b, cc, d, c in _pairs(H, x, y):
            total = total + t[a] * t[cc] * F.t_S(H.mul[b][d]) * c
        value = F.frac(total)
    elif kind == "sigma":
        value = F.frac(LaurentPoly.zero(n))
        for a, b, cc, d, c in _pairs(H, x, y):
            value = value + F.tinv_of(H.mul[b][d]) * (t[a] * t[cc] * c)
    elif kind == "sigma_inv":
        value = F.frac(LaurentPoly.zero(n))
        for a, b, cc, d, c in _pairs(H, x, y):
            value = value + tinv[b] * tinv[d] * (F.t_of(H.mul[a][cc]) * c)
    elif kind == "p_prime":
        value = F.frac(LaurentPoly.zero(n))
        for (a, b), c in H.comul[x].items():
            value = value + F.tinv_of(H.S({a: 1})) * tinv[b] * c
    else:
        value = F.frac(LaurentPoly.zero(n))
        for a, b, cc, d, c in _pairs(H, x, y):
            value = value + F.tinv_of(H.S(H.mul[a][cc])) * tinv[b] * tinv[d] * c
    args = (H.basis[x],) if y is None else (H.basis[x], H.basis[y])
    return GeneratorElement(kind, args, value)


def verify_generator_coinvariance(F, QH, kinds=KINDS, max_failures=20, sample=None, seed=0):
    """Check delta_S(u) = u (x) 1 for every generator of the requested kinds.

    With ``sample`` set, at most that many seeded argument tuples are
    checked per kind.
    """
    H = F.H
    n = H.dim
    counts = {}
    failures = []
    rng = random.Random(seed)
    for kind in kinds:
        count = 0
        args = [(x, y) for x in range(n) for y in range(n)] if kind in TWO_ARG else [(x, None) for x in range(n)]
        if sample is not None and len(args) > sample:
            args = sorted(rng.sample(args, sample), key=lambda a: (a[0], -1 if a[1] is None else a[1]))
        for x, y in args:
            g = make_generator(F, kind, x, y)
            v = g.value
            if v.is_polynomial():
                ok = F.is_coinvariant(v.as_laurent(), QH)
            else:
                ok = F.is_coinvariant_frac(v, QH)
            count += 1
            if not ok and len(failures) < max_failures:
                failures.append({"kind": kind, "args": list(g.args)})
        counts[kind] = count
    return {"ok": not failures, "counts": counts, "failures": failures}


# ------------------------------------------------------------------ gamma


def default_gamma(H, grouplike_indices):
    """Projection onto k[G] along the non-group basis elements."""
    gset = set(grouplike_indices)
    return [{i: H.field.one} if i in gset else {} for i in range(H.dim)]


def verify_gamma(H, gamma, grouplike_indices, QH):
    """Check that gamma is a right k[G]-module coalgebra retraction compatible with q.

    Returns ``{predicate: {"ok": bool, "witness": label or None}}``.
    """
    n = H.dim
    gset = list(grouplike_indices)
    lab = H.basis

    def mapped(x):
        out = {}
        for i, a in x.items():
            for j, c in gamma[i].items():
                _acc(out, j, a * c)
        return out

    def first(items, pred):
        for item in items:
            if not pred(item):
                return item
        return None

    cert = {}
    bad = next((g for g in range(n) if any(k not in set(gset) for k in gamma[g])), None)
    if bad is not None:
        cert["image_in_kG"] = {"ok": False, "witness": lab[bad]}
    else:
        cert["image_in_kG"] = {"ok": True, "witness": None}
    bad = first(gset, lambda g: gamma[g] == {g: 1})
    cert["identity_on_kG"] = {"ok": bad is None, "witness": None if bad is None else lab[bad]}
    pairs = [(h, g) for h in range(n) for g in gset]
    bad = first(pairs, lambda p: mapped(H.mul[p[0]][p[1]]) == H.multiply(gamma[p[0]], {p[1]: 1}))
    cert["right_module_map"] = {"ok": bad is None, "witness": None if bad is None else [lab[bad[0]], lab[bad[1]]]}

    def coalg(h):
        left = {}
        for (a, b), c in H.comul[h].items():
            for i, u in gamma[a].items():
                for j, v in gamma[b].items():
                    _acc(left, (i, j), c * u * v)
        return left == H.coproduct(gamma[h])

    bad = first(range(n), coalg)
    cert["coalgebra_map"] = {"ok": bad is None, "witness": None if bad is None else lab[bad]}
    bad = first(range(n), lambda h: H.eps(gamma[h]) == H.counit[h])
    cert["counit"] = {"ok": bad is None, "witness": None if bad is None else lab[bad]}
    bad = first(range(n), lambda h: QH.q(gamma[h]) == QH.projection[h])
    cert["compatible_with_q"] = {"ok": bad is None, "witness": None if bad is None else lab[bad]}
    return cert


# ----------------------------------------------------------- presentation


@dataclass
class PresentationBH:
    name: str
    n: int
    ell: int
    d: int
    r: int
    gbar_order: int
    laurent_gens: list
    laurent_tags: list
    poly_gens: list
    poly_tags: list
    lattice_det: int
    gamma_certificate: dict
    names: list
    checks: dict = field(default_factory=dict)

    @property
    def degree_bound(self):
        return self.d - self.r + 1

    def generators(self):
        return list(self.laurent_gens) + list(self.poly_gens)

    def monomial(self, exps):
        return LaurentPoly.monomial(self.n, exps)

    def to_json(self):
        from .laurent import format_monomial

        def mono(e):
            return format_monomial(e, self.names) or "1"

        return {
            "name": self.name,
            "n": self.n,
            "ell": self.ell,
            "d": self.d,
            "r": self.r,
            "degree_bound": self.degree_bound,
            "gbar_order": self.gbar_order,
            "lattice_det": self.lattice_det,
            "laurent_generators": [
                {"monomial": mono(e), "exponents": list(e), "provenance": tag}
                for e, tag in zip(self.laurent_gens, self.laurent_tags)
            ],
            "polynomial_generators": [
                {"monomial": mono(e), "exponents": list(e), "provenance": tag}
                for e, tag in zip(self.poly_gens, self.poly_tags)
            ],
            "gamma_certificate": self.gamma_certificate,
            "checks": self.checks,
        }


@dataclass
class GenericBaseContext:
    """Everything computed on the way to a presentation."""

    H: object
    grouplikes: object
    QH: object
    hab: object
    F: FreeHopf
    grouplike_indices: list
    group_part: dict


def prepare(H, seed=0):
    """Certify the hypotheses and return a :class:`GenericBaseContext`.

    When every basis element would be group-like after a change of basis
    (for example functions on an abelian group), the basis is changed to
    the declared group-likes.
    """
    GL = grouplike_certify(H)
    idx = GL.basis_indices
    if any(i is None for i in idx):
        if GL.ell == H.dim:
            labels = ["g%d" % k for k in range(H.dim)]
            H = change_basis(H, GL.vectors, labels, name=H.name)
            H.grouplikes = [{k: H.field.one} for k in range(H.dim)]
            H.group_part = {}
            GL = grouplike_certify(H)
            idx = GL.basis_indices
        else:
            raise MissingAdaptedBasis("declared group-likes are not basis elements of %s" % H.name)
    QH = hab_quotient(H)
    info = hab_is_group_algebra(QH, GL)
    if not info.ok:
        raise HypothesisNotMet("H_ab is not the group algebra of the image of G(H): %s" % info.witness)
    gp = H.group_part
    if gp is None or any(b not in gp for b in range(H.dim) if b not in set(idx)):
        gp = derive_group_part(H, idx)
        if gp is None:
            raise MissingAdaptedBasis("no group_part data and none derivable for %s" % H.name)
    F = FreeHopf(H, idx)
    return GenericBaseContext(H, GL, QH, info, F, idx, gp)


def build_presentation(H, gamma=None, seed=0, ctx=None):
    """Presentation of B_H by ell Laurent and n - ell polynomial monomials."""
    if ctx is None:
        ctx = prepare(H, seed)
    H = ctx.H
    GL, QH, info, idx = ctx.grouplikes, ctx.QH, ctx.hab, ctx.grouplike_indices
    n = H.dim
    if gamma is None:
        gamma = default_gamma(H, idx)
    cert = verify_gamma(H, gamma, idx, QH)
    failed = [k for k, v in cert.items() if not v["ok"]]
    if failed:
        raise GammaInvalid("retraction fails: %s" % ", ".join(failed), [(k, cert[k]["witness"]) for k in failed])
    G = GL.group
    dec = primary_decompose(info.Gbar)
    lat = lattice_basis_explicit(G, info.qbar, dec)
    lattice_ok = lattice_equals_oracle(lat, G, info.qbar, dec)
    laurent, ltags = [], []
    for col, tag in zip(lat.columns, lat.provenance):
        e = [0] * n
        for g, k in enumerate(col):
            e[idx[g]] += k
        laurent.append(tuple(e))
        ltags.append(tag)
    # group_part(b) = g means delta_S(t_b) = t_b (x) q(g); pair b with g^{-1}
    poly, ptags = [], []
    unit_index = next(i for i in idx if H.unit == {i: H.field.one})
    for b in range(n):
        if b in set(idx):
            continue
        g = ctx.group_part[b]
        ginv = next(iter(H.antipode[g]))
        e = [0] * n
        e[b] += 1
        if ginv != unit_index:
            e[ginv] += 1
            ptags.append("t_b*t_ginv:%s" % H.basis[b])
        else:
            ptags.append("t_b:%s" % H.basis[b])
        poly.append(tuple(e))
    pres = PresentationBH(
        H.name,
        n,
        GL.ell,
        dec.d,
        dec.r,
        info.Gbar.order,
        laurent,
        ltags,
        poly,
        ptags,
        lat.det(),
        cert,
        ctx.F.names,
    )
    F = ctx.F
    coinv = all(F.is_coinvariant(pres.monomial(e), QH) for e in laurent + poly)
    pres.checks = {
        "lattice_oracle": lattice_ok,
        "lattice_det_equals_gbar": abs(pres.lattice_det) == info.Gbar.order,
        "laurent_degree_bound": max(sum(e) for e in laurent) <= pres.degree_bound,
        "poly_degree_le_2": all(sum(e) <= 2 for e in poly),
        "generators_coinvariant": coinv,
        "jacobian_rank": jacobian_rank(pres, seed) == n,
        "counts": len(laurent) == GL.ell and len(laurent) + len(poly) == n,
    }
    return pres


def _exponent_matrix(pres):
    gens = pres.generators()
    return [[Fraction(g[i]) for g in gens] for i in range(pres.n)]


def _monomial_in_monoid(e, pres, M):
    x = solve(M, [Fraction(v) for v in e], len(M[0]) if M else 0)
    if x is None:
        return False
    if rank(M, len(M[0])) != len(M[0]):
        raise ArithmeticError("presentation exponent matrix is not of full column rank")
    ell = len(pres.laurent_gens)
    for k, v in enumerate(x):
        if v.denominator != 1:
            return False
        if k >= ell and v < 0:
            return False
    return True


def monoid_membership(P, pres):
    """Whether every monomial of P lies in the monoid of the presentation.

    Lattice generators may appear with any integer exponent, polynomial
    generators with non-negative exponents. The exponent matrix is square
    and invertible, so each monomial has exactly one rational solution.
    """
    M = _exponent_matrix(pres)
    for e in P.terms:
        if not _monomial_in_monoid(e, pres, M):
            return False
    return True


def jacobian_rank(pres, seed=0):
    """Rank of the Jacobian of the generating monomials at a random point."""
    rng = random.Random(seed)
    n = pres.n
    gens = pres.generators()
    for _ in range(20):
        point = [Fraction(rng.randint(1, 97)) for _ in range(n)]
        J = []
        for e in gens:
            u = Fraction(1)
            for x, k in zip(point, e):
                u *= x ** k
            J.append([e[j] * u / point[j] for j in range(n)])
        r = rank(J, n)
        if r == n:
            return r
    return r


# ------------------------------------------------------- localization witness


def skew_primitive_type(H, x, grouplike_indices):
    """(g, h) with Delta(x) = g (x) x + x (x) h, or None."""
    gset = set(grouplike_indices)
    terms = H.comul[x]
    if len(terms) != 2 or x in gset:
        return None
    g = h = None
    for (a, b), c in terms.items():
        if c != 1:
            return None
        if b == x and a in gset:
            g = a
        elif a == x and b in gset:
            h = b
    if g is None or h is None:
        return None
    return g, h


def localization_witness(F, x, y=None, grouplike_indices=None):
    """Verify the closed-form inverse of p_x (and q_{x,y}) as fractions.

    Group-like x (and y): p'_x p_x = 1 and q'_{x,y} q_{x,y} = 1.
    Skew-primitive x with Delta(x) = g (x) x + x (x) h and group-like y:
    p'_x p_g p_h = -p_x and q'_{x,y} q_{g,y} q_{h,y} = -q_{x,y}.
    """
    H = F.H
    if grouplike_indices is None:
        grouplike_indices = H.grouplike_basis_indices() or []
    gset = set(grouplike_indices)
    lab = H.basis
    gen = lambda kind, a, b=None: make_generator(F, kind, a, b).value
    records = []
    if y is not None and y not in gset:
        raise HypothesisNotMet("second argument %s must be group-like" % lab[y])
    if x in gset:
        holds = gen("p_prime", x) * gen("p", x) == 1
        records.append({"identity": "p'_x * p_x = 1", "x": lab[x], "holds": holds})
        if y is not None:
            holds = gen("q_prime", x, y) * gen("q", x, y) == 1
            records.append({"identity": "q'_xy * q_xy = 1", "x": lab[x], "y": lab[y], "holds": holds})
        return records
    st = skew_primitive_type(H, x, gset)
    if st is None:
        raise HypothesisNotMet("%s is neither group-like nor skew-primitive" % lab[x])
    g, h = st
    if H.counit[x]:
        raise HypothesisNotMet("skew-primitive %s has nonzero counit" % lab[x])
    holds = gen("p_prime", x) * gen("p", g) * gen("p", h) == -gen("p", x)
    records.append({"identity": "p'_x * p_g * p_h = -p_x", "x": lab[x], "g": lab[g], "h": lab[h], "holds": holds})
    if y is not None:
        holds = gen("q_prime", x, y) * gen("q", g, y) * gen("q", h, y) == -gen("q", x, y)
        records.append(
            {"identity": "q'_xy * q_gy * q_hy = -q_xy", "x": lab[x], "y": lab[y], "g": lab[g], "h": lab[h], "holds": holds}
        )
    return records

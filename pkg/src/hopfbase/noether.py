"""Invariants of the regular representation and the functions-on-G dictionary.

The group G acts on k[t_g : g in G] by h . t_g = t_{hg}. Graded pieces of
the invariant ring are spanned by orbit sums of monomials; the Molien
series gives their dimensions independently.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement

from .errors import SizeLimit
from .freehopf import FreeHopf
from .groups import dedekind_determinant, regular_action
from .hopf import functions_on_group, hab_quotient
from .laurent import LaurentPoly
from .linalg import rank

__all__ = [
    "reynolds",
    "molien_coefficients",
    "monomials",
    "invariant_basis",
    "InvariantRingSlice",
    "invariant_generators",
    "theta_invariance_check",
    "coaction_action_dictionary_check",
]


def reynolds(G, P):
    total = LaurentPoly.zero(G.order)
    for h in range(G.order):
        total = total + regular_action(G, h, P)
    return total.scale(Fraction(1, G.order))


def _cycle_lengths(G, h):
    seen, out = set(), []
    for g in range(G.order):
        if g in seen:
            continue
        k, x = 0, g
        while x not in seen:
            seen.add(x)
            x = G.mul(h, x)
            k += 1
        out.append(k)
    return out


def molien_coefficients(G, D):
    """Dimensions of the degree 0..D invariants, from the Molien series."""
    total = [Fraction(0)] * (D + 1)
    for h in range(G.order):
        series = [Fraction(0)] * (D + 1)
        series[0] = Fraction(1)
        for length in _cycle_lengths(G, h):
            # multiply by 1 / (1 - z^length)
            for k in range(length, D + 1):
                series[k] += series[k - length]
        for k in range(D + 1):
            total[k] += series[k]
    out = [c / G.order for c in total]
    if any(c.denominator != 1 for c in out):
        raise ArithmeticError("Molien coefficients are not integral")
    return [int(c) for c in out]


def monomials(n, d):
    out = []
    for combo in combinations_with_replacement(range(n), d):
        e = [0] * n
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return out


def _act_on_exponent(G, h, e):
    out = [0] * G.order
    for g, k in enumerate(e):
        if k:
            out[G.mul(h, g)] += k
    return tuple(out)


def invariant_basis(G, d):
    """Orbit sums of degree-d monomials, ordered by their largest monomial."""
    seen = set()
    out = []
    for e in sorted(monomials(G.order, d), reverse=True):
        if e in seen:
            continue
        orbit = {_act_on_exponent(G, h, e) for h in range(G.order)}
        seen |= orbit
        out.append(LaurentPoly(G.order, {m: 1 for m in orbit}))
    return out


@dataclass
class InvariantRingSlice:
    group: object
    max_degree: int
    generators_by_degree: dict
    dims_by_degree: dict
    molien: list

    @property
    def top_degree(self):
        degs = [d for d, gens in self.generators_by_degree.items() if gens]
        return max(degs) if degs else 0

    def to_json(self):
        names = ["t[%s]" % x for x in self.group.elements]
        return {
            "group": self.group.name,
            "max_degree": self.max_degree,
            "generators": {
                str(d): [P.to_string(names) for P in gens] for d, gens in sorted(self.generators_by_degree.items())
            },
            "dims": {str(d): list(v) for d, v in sorted(self.dims_by_degree.items())},
            "molien": self.molien,
            "top_generator_degree": self.top_degree,
            "beta_witness": "beta(G) = %d as witnessed up to degree %d" % (self.top_degree, self.max_degree),
        }


def invariant_generators(G, D, max_order=6):
    """Minimal homogeneous generators of the invariant ring up to degree D."""
    if G.order > max_order or D > G.order + 1:
        raise SizeLimit("invariant generators limited to |G| <= %d and D <= |G| + 1" % max_order)
    n = G.order
    molien = molien_coefficients(G, D)
    bases = {0: [LaurentPoly.const(n, 1)]}
    gens = {}
    dims = {0: (1, 1)}
    for d in range(1, D + 1):
        basis = invariant_basis(G, d)
        for P in basis:
            for h in range(n):
                if regular_action(G, h, P) != P:
                    raise ArithmeticError("orbit sum is not invariant")
        bases[d] = basis
        mons = monomials(n, d)
        pos = {m: i for i, m in enumerate(mons)}

        def coords(P):
            v = [Fraction(0)] * len(mons)
            for e, c in P.terms.items():
                v[pos[e]] = Fraction(c) if not isinstance(c, Fraction) else c
            return v

        products = []
        for k in range(1, d):
            for g in gens.get(k, []):
                for b in bases[d - k]:
                    products.append(coords(g * b))
        dec_rank = rank(products, len(mons)) if products else 0
        rows = list(products)
        current = dec_rank
        new = []
        for P in basis:
            trial = rows + [coords(P)]
            r = rank(trial, len(mons))
            if r > current:
                rows, current = trial, r
                new.append(P)
        gens[d] = new
        dims[d] = (len(basis), dec_rank)
    return InvariantRingSlice(G, D, gens, dims, molien)


def theta_invariance_check(G, size_limit=8):
    """h . Theta_G = chi(h) Theta_G with chi(h) = +-1, and Theta_G^2 invariant."""
    theta = dedekind_determinant(G, size_limit)
    sq = theta * theta
    chars, sq_ok = [], True
    for h in range(G.order):
        moved = regular_action(G, h, theta)
        if moved == theta:
            chars.append(1)
        elif moved == -theta:
            chars.append(-1)
        else:
            chars.append(None)
        if regular_action(G, h, sq) != sq:
            sq_ok = False
    return {
        "group": G.name,
        "theta_terms": len(theta),
        "character": {G.elements[h]: c for h, c in enumerate(chars)},
        "character_is_sign": all(c in (1, -1) for c in chars),
        "square_invariant": sq_ok,
        "ok": sq_ok and all(c in (1, -1) for c in chars),
    }


def coaction_action_dictionary_check(G, samples=10, seed=0):
    """Compare the coaction of O(G) on S(t_H) with the regular action.

    With t_g := t_{e_{g^-1}}, delta_S(P) = sum_h (h . P) (x) e_h and
    Delta(t_g) = sum_h t_{hg} (x) t_{h^-1}.
    """
    H = functions_on_group(G)
    F = FreeHopf(H, invertible=[])
    QH = hab_quotient(H)
    n = G.order
    # group variable g  <->  H variable of e_{g^-1}
    to_h = [G.inv(g) for g in range(n)]
    from_h = [G.inv(x) for x in range(n)]
    witnesses = []
    rng = random.Random(seed)
    polys = [LaurentPoly.var(n, g) for g in range(n)]
    for _ in range(samples):
        e = [0] * n
        e[rng.randrange(n)] += 1
        e[rng.randrange(n)] += 1
        polys.append(LaurentPoly.monomial(n, e))
    polys.append(sum((LaurentPoly.var(n, g) for g in range(n)), LaurentPoly.zero(n)))
    names = ["t[%s]" % x for x in G.elements]
    coaction_ok = True
    invariance_ok = True
    for P in polys:
        value = F.coaction(P.remap(n, to_h), QH)
        expected = {}
        for h in range(n):
            moved = regular_action(G, h, P).remap(n, to_h)
            for m, c in QH.projection[h].items():
                expected[m] = expected[m] + moved.scale(c) if m in expected else moved.scale(c)
        expected = {m: v for m, v in expected.items() if v}
        if value.comps != expected:
            coaction_ok = False
            witnesses.append({"polynomial": P.to_string(names), "identity": "coaction"})
        invariant = all(regular_action(G, h, P) == P for h in range(n))
        if F.is_coinvariant(P.remap(n, to_h), QH) != invariant:
            invariance_ok = False
            witnesses.append({"polynomial": P.to_string(names), "identity": "coinvariant_iff_invariant"})
    coproduct_ok = True
    # variables of the tensor square, translated back to group labels
    back = [from_h[i] for i in range(n)] + [n + from_h[i] for i in range(n)]
    for g in range(n):
        d = F.coproduct(LaurentPoly.var(n, to_h[g])).remap(2 * n, back)
        expected = LaurentPoly.zero(2 * n)
        for h in range(n):
            expected = expected + LaurentPoly.var(2 * n, G.mul(h, g)) * LaurentPoly.var(2 * n, n + G.inv(h))
        if d != expected:
            coproduct_ok = False
            witnesses.append({"polynomial": names[g], "identity": "coproduct"})
    return {
        "group": G.name,
        "coaction_matches_action": coaction_ok,
        "coinvariant_iff_invariant": invariance_ok,
        "coproduct_formula": coproduct_ok,
        "samples": len(polys),
        "witnesses": witnesses,
        "ok": coaction_ok and invariance_ok and coproduct_ok,
    }

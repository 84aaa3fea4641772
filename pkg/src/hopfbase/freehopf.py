"""The free commutative Hopf algebra S(t_H)_Theta on the coalgebra of H.

Variables t_0, ..., t_{n-1} correspond to the basis of H; t_x for a general
element x is extended linearly. Elements of S(t_H) (x) S(t_H) are Laurent
polynomials in 2n variables: the first n are the left tensor factor.
Elements of S(t_H) (x) H_ab are dicts ``{H_ab basis index: LaurentPoly}``.
"""

from __future__ import annotations

import random
from fractions import Fraction
from functools import cached_property

from .errors import (
    DenominatorNotTrivializable,
    NegativeExponent,
    NonInvertibleDenominator,
    SingularComatrix,
)
from .hopf import _acc
from .laurent import FracElem, LaurentPoly, cramer_solve, poly_det
from .linalg import det, solve

__all__ = [
    "FreeHopf",
    "AlgElem",
    "CoactionElem",
    "coproduct_S",
    "tinv_solve",
    "theta_pair",
    "qtilde",
    "coaction_deltaS",
    "is_coinvariant",
    "is_coinvariant_frac",
]


def _ratio(a, b):
    if isinstance(a, int) and isinstance(b, int):
        return Fraction(a, b)
    return a / b


class AlgElem:
    """An element of a finite-dimensional algebra, usable as a ring value."""

    __slots__ = ("A", "vec")

    def __init__(self, A, vec):
        self.A = A
        self.vec = vec

    def __add__(self, other):
        out = dict(self.vec)
        for k, v in other.vec.items():
            _acc(out, k, v)
        return AlgElem(self.A, out)

    def __mul__(self, other):
        if isinstance(other, AlgElem):
            return AlgElem(self.A, self.A.multiply(self.vec, other.vec))
        if not other:
            return AlgElem(self.A, {})
        return AlgElem(self.A, {k: v * other for k, v in self.vec.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, AlgElem):
            return self.vec == other.vec
        return NotImplemented

    def inverse(self):
        """Two-sided inverse via the left regular representation."""
        A = self.A
        n = A.dim
        zero = A.field.zero
        cols = [A.multiply(self.vec, {j: 1}) for j in range(n)]
        M = [[cols[j].get(i, zero) for j in range(n)] for i in range(n)]
        rhs = [A.unit.get(i, zero) for i in range(n)]
        x = solve(M, rhs, n)
        if x is None:
            raise NonInvertibleDenominator("element %s is not invertible" % A.label_of(self.vec))
        inv = {i: c for i, c in enumerate(x) if c}
        if A.multiply(inv, self.vec) != A.unit:
            raise NonInvertibleDenominator("element %s has no two-sided inverse" % A.label_of(self.vec))
        return AlgElem(A, inv)


class CoactionElem:
    """An element of S(t_H) (x) A for a finite-dimensional algebra A."""

    __slots__ = ("A", "nvars", "comps")

    def __init__(self, A, nvars, comps):
        self.A = A
        self.nvars = nvars
        self.comps = {k: v for k, v in comps.items() if v}

    def __add__(self, other):
        out = dict(self.comps)
        for k, v in other.comps.items():
            out[k] = out[k] + v if k in out else v
        return CoactionElem(self.A, self.nvars, out)

    def __mul__(self, other):
        if not isinstance(other, CoactionElem):
            return CoactionElem(self.A, self.nvars, {k: v * other for k, v in self.comps.items()})
        out = {}
        mul = self.A.mul
        for a, P in self.comps.items():
            for b, Q in other.comps.items():
                PQ = None
                for m, c in mul[a][b].items():
                    if PQ is None:
                        PQ = P * Q
                    term = PQ.scale(c)
                    out[m] = out[m] + term if m in out else term
        return CoactionElem(self.A, self.nvars, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, CoactionElem):
            return self.comps == other.comps
        return NotImplemented

    def to_json(self, names):
        return {self.A.basis[k]: v.to_string(names) for k, v in sorted(self.comps.items())}


class FreeHopf:
    """Computations in S(t_H)_Theta for one Hopf algebra H.

    ``invertible`` lists the variables that may carry negative exponents;
    by default these are the variables of declared group-like basis
    elements.
    """

    def __init__(self, H, invertible=None):
        self.H = H
        self.n = H.dim
        if invertible is None:
            invertible = H.grouplike_basis_indices() or []
        self.invertible = frozenset(invertible)
        self.t = [LaurentPoly.var(self.n, i) for i in range(self.n)]
        self.names = ["t[%s]" % lab for lab in H.basis]

    # ---------------------------------------------------------- linear maps
    def one(self, nvars=None):
        return LaurentPoly.const(self.n if nvars is None else nvars, 1)

    def t_of(self, x):
        """t_x for a coordinate vector x."""
        terms = {}
        for i, c in x.items():
            if c:
                e = [0] * self.n
                e[i] = 1
                terms[tuple(e)] = c
        return LaurentPoly(self.n, terms)

    def frac(self, P, den=None):
        return FracElem(P, den, self.invertible)

    def fmt(self, P):
        return P.to_string(self.names)

    # ------------------------------------------------------------ coproduct
    def tensor(self, P, Q):
        n = self.n
        return P.remap(2 * n, list(range(n))) * Q.remap(2 * n, list(range(n, 2 * n)))

    @cached_property
    def _delta_gens(self):
        n = self.n
        out = []
        for i in range(n):
            terms = {}
            for (j, k), c in self.H.comul[i].items():
                e = [0] * (2 * n)
                e[j] += 1
                e[k + n] += 1
                terms[tuple(e)] = terms.get(tuple(e), 0) + c
            out.append(LaurentPoly(2 * n, terms))
        return out

    def _check_exponents(self, P):
        for e in P.terms:
            for i, k in enumerate(e):
                if k < 0 and i not in self.invertible:
                    raise NegativeExponent("negative exponent on non-invertible variable %s" % self.names[i])

    def coproduct(self, P):
        """Delta on S(t_H), as a polynomial in 2n variables."""
        self._check_exponents(P)
        n = self.n
        inverses = [None] * n
        for g in self.invertible:
            dg = self._delta_gens[g]
            if dg.is_monomial():
                inverses[g] = dg ** -1
        return P.substitute(self._delta_gens, self.one(2 * n), inverses)

    def counit(self, P):
        self._check_exponents(P)
        total = 0
        for e, c in P.terms.items():
            v = c
            for i, k in enumerate(e):
                if k:
                    v = v * self.H.counit[i] ** k if k > 0 else v * (1 / self.H.counit[i]) ** (-k)
            total = total + v
        return total

    # -------------------------------------------------------------- t^{-1}
    def comatrix(self):
        """A[i][k] = sum_j c_i^{jk} t_j."""
        n = self.n
        A = [[LaurentPoly.zero(n) for _ in range(n)] for _ in range(n)]
        for i in range(n):
            for (j, k), c in self.H.comul[i].items():
                A[i][k] = A[i][k] + self.t[j].scale(c)
        return A

    @cached_property
    def tinv(self):
        """t^{-1}_{e_k} for each basis k, solved by Cramer's rule."""
        n = self.n
        A = self.comatrix()
        rhs = [LaurentPoly.const(n, c) if c else LaurentPoly.zero(n) for c in self.H.counit]
        nums, d = cramer_solve(A, rhs, n)
        if not d:
            raise SingularComatrix("comatrix of %s is singular" % self.H.name)
        self._theta = d
        return [self.frac(p, d) for p in nums]

    def tinv_of(self, x):
        total = self.frac(LaurentPoly.zero(self.n))
        for i, c in x.items():
            total = total + self.tinv[i] * c
        return total

    def t_S(self, x):
        """t_{S(x)}."""
        return self.t_of(self.H.S(x))

    def check_tinv(self):
        """Both defining relations of t^{-1}; returns failing basis labels."""
        bad = []
        for i in range(self.n):
            left = self.frac(LaurentPoly.zero(self.n))
            right = self.frac(LaurentPoly.zero(self.n))
            for (j, k), c in self.H.comul[i].items():
                left = left + self.tinv[k] * self.t[j] * c
                right = right + self.tinv[j] * self.t[k] * c
            target = self.H.counit[i]
            if not (left == target and right == target):
                bad.append(self.H.basis[i])
        return bad

    # ---------------------------------------------------------------- Theta
    @cached_property
    def theta_pair(self):
        n = self.n
        A = self.comatrix()
        theta = poly_det(A, n)
        B = [[LaurentPoly.zero(n) for _ in range(n)] for _ in range(n)]
        tS = [self.t_S({j: 1}) for j in range(n)]
        for i in range(n):
            for (j, k), c in self.H.comul[i].items():
                B[i][k] = B[i][k] + tS[j].scale(c)
        theta_p = poly_det(B, n)
        return theta, theta_p

    def is_grouplike(self, P):
        return self.coproduct(P) == self.tensor(P, P)

    # --------------------------------------------------------------- q-tilde
    def qtilde(self, P, QH):
        """Algebra map t_x -> q(x) into H_ab (fractions via inverses)."""
        if isinstance(P, FracElem):
            num = self.qtilde(P.num, QH)
            den = AlgElem(QH.quotient, self.qtilde(P.den, QH)).inverse()
            return QH.quotient.multiply(num, den.vec)
        Q = QH.quotient
        values = [AlgElem(Q, QH.projection[i]) for i in range(self.n)]
        inverses = [AlgElem(Q, QH.q(self.H.antipode[i])) if i in self.invertible else None for i in range(self.n)]
        self._check_exponents(P)
        result = P.substitute(values, AlgElem(Q, Q.one()), inverses)
        return result.vec

    # -------------------------------------------------------------- coaction
    def _coaction_gens(self, QH):
        key = id(QH)
        cache = self.__dict__.setdefault("_coact_cache", {})
        if key not in cache:
            Q = QH.quotient
            gens, invs = [], []
            for i in range(self.n):
                comps = {}
                for (j, k), c in self.H.comul[i].items():
                    for m, v in QH.projection[k].items():
                        term = self.t[j].scale(c * v)
                        comps[m] = comps[m] + term if m in comps else term
                gens.append(CoactionElem(Q, self.n, comps))
                if i in self.invertible:
                    # delta(t_g^{-1}) = t_g^{-1} (x) q(S(g))
                    comps = {m: (self.t[i] ** -1).scale(v) for m, v in QH.q(self.H.antipode[i]).items()}
                    invs.append(CoactionElem(Q, self.n, comps))
                else:
                    invs.append(None)
            cache[key] = (QH, gens, invs)
        return cache[key][1], cache[key][2]

    def coaction(self, P, QH):
        """delta_S(P) in S(t_H) (x) H_ab."""
        self._check_exponents(P)
        gens, invs = self._coaction_gens(QH)
        Q = QH.quotient
        one = CoactionElem(Q, self.n, {m: LaurentPoly.const(self.n, c) for m, c in Q.unit.items()})
        return P.substitute(gens, one, invs)

    def trivial_coaction(self, P, QH):
        return CoactionElem(QH.quotient, self.n, {m: P.scale(c) for m, c in QH.quotient.unit.items()})

    def is_coinvariant(self, P, QH):
        return self.coaction(P, QH) == self.trivial_coaction(P, QH)

    def semi_invariant_character(self, P, QH):
        """chi with delta_S(P) = P (x) chi, or None."""
        value = self.coaction(P, QH)
        lead_e, lead_c = P.leading()
        chi = {}
        for m, comp in value.comps.items():
            c = comp.terms.get(lead_e)
            if not c or comp != P.scale(c / lead_c):
                return None
            chi[m] = c / lead_c
        return chi

    def trivialize_denominator(self, F, QH):
        """Rewrite F as N/D with q-tilde(D) = 1 and delta_S(D) = D (x) 1."""
        Q = QH.quotient
        chi = self.semi_invariant_character(F.den, QH)
        if chi is None:
            raise DenominatorNotTrivializable("denominator %s is not a semi-invariant" % self.fmt(F.den))
        power, order = dict(chi), 1
        while power != Q.unit:
            power = Q.multiply(power, chi)
            order += 1
            if order > 4 * Q.dim + 4:
                raise DenominatorNotTrivializable("character of the denominator has infinite order")
        extra = F.den ** (order - 1)
        return F.num * extra, F.den * extra

    def is_coinvariant_frac(self, F, QH):
        if not isinstance(F, FracElem):
            return self.is_coinvariant(F, QH)
        num, den = self.trivialize_denominator(F, QH)
        return self.is_coinvariant(num, QH)

    # ------------------------------------------------------------- antipode
    def antipode(self, P):
        """S on S(t_H): t_x -> t^{-1}_x, returned as a fraction."""
        if isinstance(P, FracElem):
            return self.antipode(P.num) / self.antipode(P.den)
        self._check_exponents(P)
        inverses = [self.frac(self.t[i]) if i in self.invertible else None for i in range(self.n)]
        return P.substitute(self.tinv, self.frac(self.one()), inverses)

    def check_antipode_involution(self):
        """S(S(t_x)) = t_x for every basis variable; returns failing labels.

        With Laurent t^{-1} the composite is expanded directly. Otherwise
        S(t^{-1}) is the unique solution y of S(A) y = eps; the right-hand
        relation says y = t solves it, and S(A) is shown invertible by an
        exact evaluation with nonzero determinant.
        """
        n = self.n
        if all(f.den.is_constant() for f in self.tinv):
            bad = []
            for i in range(n):
                ss = self.antipode(self.tinv[i])
                if not ss == self.frac(self.t[i]):
                    bad.append(self.H.basis[i])
            return bad
        bad = []
        for i in range(n):
            right = self.frac(LaurentPoly.zero(n))
            for (j, k), c in self.H.comul[i].items():
                right = right + self.tinv[j] * self.t[k] * c
            if not right == self.H.counit[i]:
                bad.append(self.H.basis[i])
        rng = random.Random(0)
        for _ in range(50):
            point = [rng.randint(1, 97) for _ in range(n)]
            dens = [f.den.evaluate(point) for f in self.tinv]
            if all(dens):
                vals = [_ratio(f.num.evaluate(point), d) for f, d in zip(self.tinv, dens)]
                SA = [[0] * n for _ in range(n)]
                for i in range(n):
                    for (j, k), c in self.H.comul[i].items():
                        SA[i][k] = SA[i][k] + c * vals[j]
                if det(SA):
                    return bad
        return bad + ["S(A) singular"]

    def check_counit_law(self):
        """(eps (x) id) Delta(t_x) = t_x = (id (x) eps) Delta(t_x)."""
        n = self.n
        bad = []
        for i in range(n):
            d = self._delta_gens[i]
            left, right = LaurentPoly.zero(n), LaurentPoly.zero(n)
            for e, c in d.terms.items():
                j = e.index(1)
                k = e.index(1, n) - n
                left = left + self.t[k].scale(c * self.H.counit[j])
                right = right + self.t[j].scale(c * self.H.counit[k])
            if not (left == self.t[i] == right):
                bad.append(self.H.basis[i])
        return bad

    def check_coaction(self, QH):
        """Coassociativity and counitality of delta_S on the generators."""
        Q = QH.quotient
        n = self.n
        bad = []
        for i in range(n):
            # (delta_S (x) id) delta_S(t_i) versus (id (x) Delta) delta_S(t_i)
            left, right = {}, {}
            for (j, k), c in self.H.comul[i].items():
                for (a, b), d in self.H.comul[j].items():
                    for m1, v1 in QH.projection[b].items():
                        for m2, v2 in QH.projection[k].items():
                            _acc(left, (a, m1, m2), c * d * v1 * v2)
                for m, v in QH.projection[k].items():
                    for (m1, m2), w in Q.comul[m].items():
                        _acc(right, (j, m1, m2), c * v * w)
            counit = {}
            for (j, k), c in self.H.comul[i].items():
                for m, v in QH.projection[k].items():
                    if Q.counit[m]:
                        _acc(counit, j, c * v * Q.counit[m])
            if left != right or counit != {i: 1}:
                bad.append(self.H.basis[i])
        return bad


# ---------------------------------------------------------- function forms


def coproduct_S(F, P):
    return F.coproduct(P)


def tinv_solve(F):
    return F.tinv


def theta_pair(F):
    return F.theta_pair


def qtilde(F, P, QH):
    return F.qtilde(P, QH)


def coaction_deltaS(F, P, QH):
    return F.coaction(P, QH)


def is_coinvariant(F, P, QH):
    return F.is_coinvariant(P, QH)


def is_coinvariant_frac(F, X, QH):
    return F.is_coinvariant_frac(X, QH)

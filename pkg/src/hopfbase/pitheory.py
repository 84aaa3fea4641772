"""Noncommutative polynomial identities for a comodule algebra.

T(X_H) is the free algebra on letters X_i, one per basis element of H. It
carries the coaction delta_T(X_x) = X_{x1} (x) x2, and the universal map
mu(X_x) = t_{x1} (x) x2 lands in S(t_H) (x) H. Elements killed by mu are
the identities of H; pi sends X_x to t_x.
"""

from __future__ import annotations

import random
from itertools import product

from .errors import SizeLimit
from .freehopf import CoactionElem, FreeHopf
from .genbase import make_generator
from .hopf import _acc, clean, functions_on_group, hab_quotient
from .laurent import LaurentPoly
from .linalg import rank, rref_and_kernel
from .noether import molien_coefficients, monomials

__all__ = [
    "NcPoly",
    "delta_T",
    "check_delta_T",
    "mu",
    "check_mu_comodule_map",
    "is_identity",
    "identities_in_degree",
    "canonical_coinvariants",
    "verify_canonical",
    "pi_abelianize",
    "square_check",
    "random_words",
    "iyer_truncated_check",
]

MAX_WORD_LENGTH = 6


class NcPoly:
    """A finite combination of words in the letters X_0, ..., X_{n-1}."""

    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        self.n = n
        self.terms = clean({tuple(w): c for w, c in (terms or {}).items()})
        for w in self.terms:
            if any(not 0 <= i < n for i in w):
                raise ValueError("letter index out of range in word %r" % (w,))

    @classmethod
    def one(cls, n):
        return cls(n, {(): 1})

    @classmethod
    def letter(cls, n, i):
        return cls(n, {(i,): 1})

    @classmethod
    def linear(cls, n, vec):
        """X_v for a coordinate vector v = {i: c}."""
        return cls(n, {(i,): c for i, c in vec.items()})

    @classmethod
    def word(cls, n, w, c=1):
        return cls(n, {tuple(w): c})

    def __add__(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            _acc(out, w, c)
        return NcPoly(self.n, out)

    def __neg__(self):
        return NcPoly(self.n, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, NcPoly):
            return NcPoly(self.n, {w: c * other for w, c in self.terms.items()})
        out = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                _acc(out, w1 + w2, c1 * c2)
        return NcPoly(self.n, out)

    def __rmul__(self, c):
        return NcPoly(self.n, {w: c * v for w, v in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, NcPoly) and self.n == other.n and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def degree(self):
        return max((len(w) for w in self.terms), default=-1)

    def to_string(self, labels):
        from .scalars import format_scalar

        if not self.terms:
            return "0"
        parts = []
        for w in sorted(self.terms, key=lambda w: (len(w), w)):
            word = "*".join("X[%s]" % labels[i] for i in w) or "1"
            parts.append("(%s)*%s" % (format_scalar(self.terms[w]), word))
        return " + ".join(parts)

    def to_json(self, labels):
        from .scalars import format_scalar

        return [[[labels[i] for i in w], format_scalar(c)] for w, c in sorted(self.terms.items(), key=lambda t: (len(t[0]), t[0]))]


def _check_length(P, limit):
    if P.degree() > limit:
        raise SizeLimit("word length %d exceeds the cap %d" % (P.degree(), limit))


# ----------------------------------------------------------------- coaction
def delta_T(H, P, max_length=MAX_WORD_LENGTH):
    """delta_T(P) as {(word, h): c}, the algebra map extending X_x -> X_{x1} (x) x2."""
    _check_length(P, max_length)
    out = {}
    for w, c in P.terms.items():
        state = {((), m): c * u for m, u in H.unit.items()}
        for i in w:
            nxt = {}
            for (v, a), c1 in state.items():
                for (j, k), c2 in H.comul[i].items():
                    for m, c3 in H.mul[a][k].items():
                        _acc(nxt, (v + (j,), m), c1 * c2 * c3)
            state = nxt
        for key, val in state.items():
            _acc(out, key, val)
    return out


def _trivial_T(H, P):
    out = {}
    for w, c in P.terms.items():
        for m, u in H.unit.items():
            _acc(out, (w, m), c * u)
    return out


def check_delta_T(H):
    """Coassociativity of delta_T on every letter."""
    failures = []
    for i in range(H.dim):
        left, right = {}, {}
        for ((j,), k), c in delta_T(H, NcPoly.letter(H.dim, i)).items():
            for ((a,), b), c2 in delta_T(H, NcPoly.letter(H.dim, j)).items():
                _acc(left, (a, b, k), c * c2)
            for (a, b), c2 in H.comul[k].items():
                _acc(right, (j, a, b), c * c2)
        if left != right:
            failures.append(H.basis[i])
    return failures


# ----------------------------------------------------------------------- mu
def _letter_values(F):
    H, n = F.H, F.n
    out = []
    for i in range(n):
        comps = {}
        for (j, k), c in H.comul[i].items():
            term = F.t[j].scale(c)
            comps[k] = comps[k] + term if k in comps else term
        out.append(CoactionElem(H, n, comps))
    return out


def mu(F, P, max_length=MAX_WORD_LENGTH):
    """mu(P) in S(t_H) (x) H, as a CoactionElem over H."""
    _check_length(P, max_length)
    H, n = F.H, F.n
    letters = _letter_values(F)
    unit = CoactionElem(H, n, {m: LaurentPoly.const(n, u) for m, u in H.unit.items()})

    # Horner form: mu(sum_i X_i P_i + c) = sum_i mu(X_i) mu(P_i) + c
    def evaluate(terms):
        total = unit * terms[()] if () in terms else CoactionElem(H, n, {})
        tails = {}
        for w, c in terms.items():
            if w:
                tails.setdefault(w[0], {})[w[1:]] = c
        for i in sorted(tails):
            total = total + letters[i] * evaluate(tails[i])
        return total

    return evaluate(P.terms)


def check_mu_comodule_map(F, P):
    """(mu (x) id) delta_T = (id (x) Delta) mu, compared in S(t_H) (x) H (x) H."""
    H, n = F.H, F.n
    left, right = {}, {}

    def add(d, key, L):
        d[key] = d[key] + L if key in d else L

    by_component = {}
    for (w, b), c in delta_T(H, P).items():
        by_component.setdefault(b, {})[w] = c
    for b, terms in by_component.items():
        for a, L in mu(F, NcPoly(n, terms)).comps.items():
            add(left, (a, b), L)
    for a, L in mu(F, P).comps.items():
        for (x, y), c in H.comul[a].items():
            add(right, (x, y), L.scale(c))
    return clean(left) == clean(right)


def is_identity(F, P):
    return not mu(F, P).comps


def _coordinates(rows_index, items):
    """Sparse vectors -> dense rows over a shared key index."""
    for key in items:
        if key not in rows_index:
            rows_index[key] = len(rows_index)


def identities_in_degree(F, d, max_words=4096):
    """A basis of the identities spanned by words of length d.

    The linear map word -> coordinates of mu(word) is assembled and its
    kernel computed exactly.
    """
    n = F.n
    if n ** d > max_words:
        raise SizeLimit("%d words of length %d exceed the cap %d" % (n ** d, d, max_words))
    words = list(product(range(n), repeat=d))
    images = []
    index = {}
    for w in words:
        value = mu(F, NcPoly.word(n, w))
        vec = {}
        for h, L in value.comps.items():
            for e, c in L.terms.items():
                vec[(h, e)] = c
        _coordinates(index, sorted(vec))
        images.append(vec)
    zero, one = F.H.field.zero, F.H.field.one
    # rows = coordinates, columns = words
    M = [[zero] * len(words) for _ in index]
    for col, vec in enumerate(images):
        for key, c in vec.items():
            M[index[key]][col] = c
    _, kernel = rref_and_kernel(M, len(words), zero, one)
    return [NcPoly(n, {words[i]: c for i, c in enumerate(v) if c}) for v in kernel]


# ------------------------------------------------------ canonical elements
def canonical_coinvariants(H, x, y=None):
    """P_x = X_{x1} X_{S(x2)}, or Q_{x,y} = X_{x1} X_{y1} X_{S(x2 y2)}."""
    n = H.dim
    total = NcPoly(n)
    if y is None:
        for (a, b), c in H.comul[x].items():
            total = total + NcPoly.letter(n, a) * NcPoly.linear(n, H.S({b: 1})) * c
        return total
    for (a, b), c1 in H.comul[x].items():
        for (cc, d), c2 in H.comul[y].items():
            tail = NcPoly.linear(n, H.S(H.mul[b][d]))
            total = total + NcPoly.letter(n, a) * NcPoly.letter(n, cc) * tail * (c1 * c2)
    return total


def verify_canonical(F, x, y=None):
    """Coinvariance of P_x (or Q_{x,y}) and mu(P) = p_x (x) 1."""
    H = F.H
    P = canonical_coinvariants(H, x, y)
    coinvariant = delta_T(H, P) == _trivial_T(H, P)
    kind = "p" if y is None else "q"
    target = make_generator(F, kind, x, y).value.as_laurent()
    value = mu(F, P)
    evaluation = value == F.trivial_coaction(target, _IdentityQuotient(H))
    abelian = pi_abelianize(P) == target
    return {"coinvariant": coinvariant, "mu_equals_generator": evaluation, "pi_equals_generator": abelian}


class _IdentityQuotient:
    """H viewed as a quotient of itself (only ``quotient`` is consulted)."""

    def __init__(self, H):
        self.quotient = H


def pi_abelianize(P):
    n = P.n
    out = {}
    for w, c in P.terms.items():
        e = [0] * n
        for i in w:
            e[i] += 1
        _acc(out, tuple(e), c)
    return LaurentPoly(n, out)


def square_check(F, QH, P):
    """(id (x) q) mu(P) = delta_S(pi(P))."""
    left = {}
    for h, L in mu(F, P).comps.items():
        for m, v in QH.projection[h].items():
            term = L.scale(v)
            left[m] = left[m] + term if m in left else term
    left = clean(left)
    right = F.coaction(pi_abelianize(P), QH).comps
    return left == right


def random_words(n, count=100, max_length=4, seed=0):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        length = rng.randint(1, max_length)
        out.append(NcPoly.word(n, [rng.randrange(n) for _ in range(length)]))
    return out


# ----------------------------------------------------- truncated Iyer check
def _kernel_basis(columns, nrows_index, zero, one):
    M = [[zero] * len(columns) for _ in nrows_index]
    for col, vec in enumerate(columns):
        for key, c in vec.items():
            M[nrows_index[key]][col] = c
    _, kernel = rref_and_kernel(M, len(columns), zero, one)
    return kernel


def _word_orbits(G, d):
    seen, count = set(), 0
    for w in product(range(G.order), repeat=d):
        if w in seen:
            continue
        count += 1
        for h in range(G.order):
            seen.add(tuple(G.mul(h, g) for g in w))
    return count


def iyer_truncated_check(G, D):
    """Degree-wise comparison of T(X_H) and S(t_H) coinvariants for H = O(G)."""
    if G.order > 3 or D > 4:
        raise SizeLimit("the truncated check is limited to |G| <= 3 and D <= 4")
    H = functions_on_group(G)
    F = FreeHopf(H, invertible=[])
    QH = hab_quotient(H)
    n = H.dim
    zero, one = H.field.zero, H.field.one
    molien = molien_coefficients(G, D)
    degrees = []
    ok = True
    for d in range(D + 1):
        # T-coinvariants: kernel of w -> delta_T(w) - w (x) 1
        words = list(product(range(n), repeat=d))
        cols, index = [], {}
        for w in words:
            P = NcPoly.word(n, w)
            vec = dict(delta_T(H, P))
            for key, c in _trivial_T(H, P).items():
                _acc(vec, key, -c)
            _coordinates(index, sorted(vec))
            cols.append(vec)
        t_basis = [NcPoly(n, {words[i]: c for i, c in enumerate(v) if c}) for v in _kernel_basis(cols, index, zero, one)]
        mu_is_pi = all(mu(F, P) == F.trivial_coaction(pi_abelianize(P), QH) for P in t_basis)

        # S-invariants: kernel of m -> delta_S(m) - m (x) 1 on degree-d monomials
        mons = monomials(n, d)
        cols, index = [], {}
        for e in mons:
            P = LaurentPoly.monomial(n, e)
            vec = {}
            for h, L in F.coaction(P, QH).comps.items():
                for m, c in L.terms.items():
                    _acc(vec, (h, m), c)
            for h, L in F.trivial_coaction(P, QH).comps.items():
                for m, c in L.terms.items():
                    _acc(vec, (h, m), -c)
            _coordinates(index, sorted(vec))
            cols.append(vec)
        s_dim = len(_kernel_basis(cols, index, zero, one))

        pos = {e: i for i, e in enumerate(mons)}
        images = []
        for P in t_basis:
            row = [zero] * len(mons)
            for e, c in pi_abelianize(P).terms.items():
                row[pos[e]] = c
            images.append(row)
        image_rank = rank(images, len(mons)) if images else 0
        record = {
            "degree": d,
            "t_coinvariant_dim": len(t_basis),
            "t_orbit_count": _word_orbits(G, d),
            "s_invariant_dim": s_dim,
            "molien": molien[d],
            "pi_image_rank": image_rank,
            "mu_equals_pi": mu_is_pi,
        }
        record["ok"] = (
            mu_is_pi
            and image_rank == s_dim == molien[d]
            and record["t_coinvariant_dim"] == record["t_orbit_count"]
        )
        ok = ok and record["ok"]
        degrees.append(record)
    return {"group": G.name, "max_degree": D, "degrees": degrees, "ok": ok}

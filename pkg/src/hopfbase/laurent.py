"""Sparse multivariate Laurent polynomials and fractions of them.

A :class:`LaurentPoly` maps integer exponent vectors to nonzero scalars.
Monomials are compared in graded lexicographic order (total degree first,
then lexicographically with variable 0 largest); that order fixes leading
terms and the canonical printed form.
"""

from __future__ import annotations

import heapq
from fractions import Fraction

from .errors import DegenerateScalar, NegativeExponent
from .scalars import Cyc, format_scalar

__all__ = ["LaurentPoly", "FracElem", "monomial_key", "format_monomial", "poly_det", "cramer_solve"]


def monomial_key(exps):
    return (sum(exps), exps)


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _tidy(c):
    # integral Fractions become ints: int arithmetic is far cheaper
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def _packed_product(nvars, a, b):
    """Product of two term dicts, with exponent vectors packed into ints."""
    lo_a = [min(col) for col in zip(*a)]
    lo_b = [min(col) for col in zip(*b)]
    hi = [max(col) for col in zip(*a)]
    hi = [h - l + max(col) - lb for h, l, col, lb in zip(hi, lo_a, zip(*b), lo_b)]
    width = max(1, max(hi).bit_length())
    shifts = [width * i for i in range(nvars)]

    def pack(terms, lo):
        out = []
        for e, c in terms.items():
            key = 0
            for x, l, s in zip(e, lo, shifts):
                key |= (x - l) << s
            out.append((key, _tidy(c)))
        return out

    pa, pb = pack(a, lo_a), pack(b, lo_b)
    acc = {}
    get = acc.get
    for ka, ca in pa:
        for kb, cb in pb:
            k = ka + kb
            acc[k] = get(k, 0) + ca * cb
    mask = (1 << width) - 1
    base = [la + lb for la, lb in zip(lo_a, lo_b)]
    out = {}
    for k, c in acc.items():
        if c:
            out[tuple(((k >> s) & mask) + o for s, o in zip(shifts, base))] = _tidy(c)
    return out


class LaurentPoly:
    """Element of k[t_0^{+-1}, ..., t_{n-1}^{+-1}] stored sparsely."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        if terms is None:
            self.terms = {}
        else:
            self.terms = {e: c for e, c in terms.items() if c}

    # ------------------------------------------------------------ builders
    @classmethod
    def _wrap(cls, nvars, terms):
        obj = cls.__new__(cls)
        obj.nvars = nvars
        obj.terms = terms
        return obj

    @classmethod
    def zero(cls, nvars):
        return cls._wrap(nvars, {})

    @classmethod
    def const(cls, nvars, c=1):
        return cls._wrap(nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def var(cls, nvars, i, power=1):
        e = [0] * nvars
        e[i] = power
        return cls._wrap(nvars, {tuple(e): 1})

    @classmethod
    def monomial(cls, nvars, exps, c=1):
        exps = tuple(exps)
        if len(exps) != nvars:
            raise ValueError("exponent vector of wrong length")
        return cls._wrap(nvars, {exps: c} if c else {})

    # ------------------------------------------------------------- queries
    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction, Cyc)):
            return self == LaurentPoly.const(self.nvars, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def is_polynomial(self):
        return all(x >= 0 for e in self.terms for x in e)

    def is_monomial(self):
        return len(self.terms) == 1

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def constant_term(self):
        return self.terms.get((0,) * self.nvars, 0)

    def degree(self):
        """Largest total degree of a term (-1 for zero)."""
        return max((sum(e) for e in self.terms), default=-1)

    def min_exponents(self):
        if not self.terms:
            return (0,) * self.nvars
        return tuple(min(col) for col in zip(*self.terms))

    def leading(self):
        e = max(self.terms, key=monomial_key)
        return e, self.terms[e]

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: monomial_key(kv[0]), reverse=True)

    def variables(self):
        used = set()
        for e in self.terms:
            used.update(i for i, x in enumerate(e) if x)
        return sorted(used)

    # ---------------------------------------------------------- arithmetic
    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            if other.nvars != self.nvars:
                raise ValueError("variable count mismatch: %d vs %d" % (self.nvars, other.nvars))
            return other
        if isinstance(other, (int, Fraction, Cyc)):
            return LaurentPoly.const(self.nvars, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for e, c in other.terms.items():
            v = terms.get(e)
            if v is None:
                terms[e] = c
            else:
                v = v + c
                if v:
                    terms[e] = v
                else:
                    del terms[e]
        return LaurentPoly._wrap(self.nvars, terms)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._wrap(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def scale(self, c):
        if not c:
            return LaurentPoly.zero(self.nvars)
        if c == 1:
            return self
        return LaurentPoly._wrap(self.nvars, {e: v * c for e, v in self.terms.items() if v * c})

    def shift(self, exps, c=1):
        """Multiply by the monomial ``c * t^exps``."""
        if not c:
            return LaurentPoly.zero(self.nvars)
        return LaurentPoly._wrap(
            self.nvars, {_add(e, exps): (v * c if c != 1 else v) for e, v in self.terms.items()}
        )

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Cyc)):
            return self.scale(other)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if len(self.terms) > len(other.terms):
            a, b = other.terms, self.terms
        else:
            a, b = self.terms, other.terms
        if len(a) == 1:
            (e, c), = a.items()
            return self.shift(e, c) if a is other.terms else other.shift(e, c)
        if len(a) * len(b) >= 32:
            return LaurentPoly._wrap(self.nvars, _packed_product(self.nvars, a, b))
        out = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                v = out.get(e)
                out[e] = ca * cb if v is None else v + ca * cb
        return LaurentPoly(self.nvars, {e: _tidy(c) for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            if not self.is_monomial():
                raise NegativeExponent("only monomials have Laurent inverses here")
            (e, c), = self.terms.items()
            return LaurentPoly._wrap(
                self.nvars, {tuple(-x * (-k) for x in e): (1 / Fraction(c) if not isinstance(c, Cyc) else c.inverse()) ** (-k)}
            )
        result = LaurentPoly.const(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def divexact(self, other):
        """Exact quotient ``self / other`` in the Laurent polynomial ring.

        Raises ``ArithmeticError`` when ``other`` does not divide ``self``.
        """
        if not other:
            raise DegenerateScalar("division by the zero polynomial")
        if other.is_monomial():
            (e, c), = other.terms.items()
            inv = 1 / c if not isinstance(c, int) else Fraction(1, c)
            return self.shift(tuple(-x for x in e), inv)
        sa, sb = self.min_exponents(), other.min_exponents()
        if any(sa) or any(sb):
            # strip monomial content; no variable divides the shifted divisor,
            # so the quotient of the shifted pair is a polynomial
            a = self.shift(tuple(-x for x in sa))
            b = other.shift(tuple(-x for x in sb))
            return a.divexact(b).shift(_sub(sa, sb))
        lead_e, lead_c = other.leading()
        inv = 1 / lead_c if not isinstance(lead_c, int) else Fraction(1, lead_c)
        rem = dict(self.terms)
        heap = [(-sum(e), tuple(-x for x in e)) for e in rem]
        heapq.heapify(heap)
        quot = {}
        while rem:
            while True:
                nd, ne = heapq.heappop(heap)
                e = tuple(-x for x in ne)
                if e in rem:
                    break
            c = rem[e]
            m = _sub(e, lead_e)
            if any(x < 0 for x in m):
                raise ArithmeticError("polynomial division is not exact")
            q = c * inv
            quot[m] = q
            for oe, oc in other.terms.items():
                t = _add(oe, m)
                v = rem.get(t)
                if v is None:
                    rem[t] = -q * oc
                    heapq.heappush(heap, (-sum(t), tuple(-x for x in t)))
                else:
                    v = v - q * oc
                    if v:
                        rem[t] = v
                    else:
                        del rem[t]
        return LaurentPoly(self.nvars, quot)

    # --------------------------------------------------------- evaluation
    def substitute(self, values, one, inverses=None):
        """Evaluate with variable i sent to ``values[i]``.

        ``values`` may be any ring elements supporting ``*`` and ``+``;
        negative exponents use ``inverses[i]``. Powers are cached.
        """
        if (
            isinstance(one, LaurentPoly)
            and self.is_polynomial()
            and all(isinstance(v, LaurentPoly) and v.is_polynomial() for v in values)
        ):
            return self._substitute_packed(values, one.nvars)
        cache = {}

        def power(i, k):
            key = (i, k)
            if key not in cache:
                if k == 1:
                    cache[key] = values[i]
                elif k == -1:
                    if inverses is None or inverses[i] is None:
                        raise NegativeExponent("variable %d is not invertible" % i)
                    cache[key] = inverses[i]
                else:
                    step = 1 if k > 0 else -1
                    cache[key] = power(i, k - step) * power(i, step)
            return cache[key]

        total = None
        acc = {} if isinstance(one, LaurentPoly) else None
        for e, c in self.sorted_terms():
            term = None
            for i, k in enumerate(e):
                if k:
                    term = power(i, k) if term is None else term * power(i, k)
            if term is None:
                term = one
            if acc is not None:
                # accumulate in place: repeated dict copies dominate otherwise
                for te, tc in term.terms.items():
                    acc[te] = acc.get(te, 0) + tc * c
                continue
            term = term * c
            total = term if total is None else total + term
        if acc is not None:
            return LaurentPoly(one.nvars, {e: _tidy(v) for e, v in acc.items() if v})
        return one * 0 if total is None else total

    def _substitute_packed(self, values, nvars):
        # all exponents are non-negative and bounded by deg(self) * deg(values)
        top = max(1, self.degree()) * max([1] + [v.degree() for v in values])
        width = top.bit_length() + 1
        shifts = [width * i for i in range(nvars)]

        def pack(P):
            out = {}
            for e, c in P.terms.items():
                key = 0
                for x, s in zip(e, shifts):
                    if x:
                        key |= x << s
                out[key] = _tidy(c)
            return out

        def mul(a, b):
            if len(a) > len(b):
                a, b = b, a
            acc = {}
            get = acc.get
            bl = list(b.items())
            for ka, ca in a.items():
                for kb, cb in bl:
                    k = ka + kb
                    acc[k] = get(k, 0) + ca * cb
            return {k: c for k, c in acc.items() if c}

        packed = [pack(v) for v in values]
        cache = {}

        def power(i, k):
            key = (i, k)
            if key not in cache:
                cache[key] = packed[i] if k == 1 else mul(power(i, k - 1), packed[i])
            return cache[key]

        acc = {}
        for e, c in self.sorted_terms():
            term = None
            for i, k in enumerate(e):
                if k:
                    term = power(i, k) if term is None else mul(term, power(i, k))
            if term is None:
                term = {0: 1}
            for tk, tc in term.items():
                acc[tk] = acc.get(tk, 0) + tc * c
        mask = (1 << width) - 1
        out = {}
        for k, c in acc.items():
            if c:
                out[tuple((k >> s) & mask for s in shifts)] = _tidy(c)
        return LaurentPoly._wrap(nvars, out)

    def evaluate(self, point):
        total = 0
        for e, c in self.terms.items():
            v = c
            for x, k in zip(point, e):
                if k:
                    v = v * (x ** k if k > 0 else 1 / Fraction(x) ** (-k))
            total = total + v
        return total

    def remap(self, nvars, index_map):
        """Rename variable i to ``index_map[i]`` inside ``nvars`` variables."""
        out = {}
        for e, c in self.terms.items():
            ne = [0] * nvars
            for i, k in enumerate(e):
                if k:
                    ne[index_map[i]] += k
            ne = tuple(ne)
            v = out.get(ne)
            out[ne] = c if v is None else v + c
        return LaurentPoly(nvars, out)

    def partial(self, i):
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                ne = list(e)
                ne[i] -= 1
                out[tuple(ne)] = c * e[i]
        return LaurentPoly(self.nvars, out)

    # ------------------------------------------------------------ printing
    def to_string(self, names=None):
        if names is None:
            names = ["t%d" % i for i in range(self.nvars)]
        if not self.terms:
            return "0"
        out = []
        for e, c in self.sorted_terms():
            mono = format_monomial(e, names)
            if isinstance(c, Cyc) and not c.is_rational():
                coef = "(%s)" % format_scalar(c)
                sign = "+"
            else:
                r = c.coeffs[0] if isinstance(c, Cyc) else Fraction(c)
                sign = "-" if r < 0 else "+"
                r = abs(r)
                coef = format_scalar(r)
                if mono and r == 1:
                    coef = ""
            body = coef + ("*" if coef and mono else "") + mono
            out.append((sign, body or "1"))
        s = ""
        for k, (sign, body) in enumerate(out):
            if k == 0:
                s = ("-" if sign == "-" else "") + body
            else:
                s += " %s %s" % (sign, body)
        return s

    def __repr__(self):
        return "LaurentPoly(%d, %s)" % (self.nvars, self.to_string())


def format_monomial(exps, names):
    parts = []
    for i, k in enumerate(exps):
        if k == 1:
            parts.append(names[i])
        elif k:
            parts.append("%s^%d" % (names[i], k))
    return "*".join(parts)


class FracElem:
    """A fraction ``num / den`` of Laurent polynomials.

    Reduction only strips common monomial content, absorbs monomial
    denominators in invertible variables, and makes the leading coefficient
    of the denominator 1. Equality is tested by cross-multiplication.
    """

    __slots__ = ("num", "den", "invertible")

    def __init__(self, num, den=None, invertible=frozenset()):
        if den is None:
            den = LaurentPoly.const(num.nvars, 1)
        if not den:
            raise DegenerateScalar("fraction with zero denominator")
        self.invertible = frozenset(invertible)
        self.num, self.den = self._normalize(num, den)

    def _normalize(self, num, den):
        nvars = num.nvars
        if not num:
            return num, LaurentPoly.const(nvars, 1)
        lo_n, lo_d = num.min_exponents(), den.min_exponents()
        common = tuple(min(a, b) for a, b in zip(lo_n, lo_d))
        if any(common):
            neg = tuple(-x for x in common)
            num, den = num.shift(neg), den.shift(neg)
        if den.is_monomial():
            (e, c), = den.terms.items()
            if all(k == 0 or i in self.invertible for i, k in enumerate(e)):
                inv = 1 / c if not isinstance(c, int) else Fraction(1, c)
                return num.shift(tuple(-x for x in e), inv), LaurentPoly.const(nvars, 1)
        _, lead = den.leading()
        if lead != 1:
            inv = 1 / lead if not isinstance(lead, int) else Fraction(1, lead)
            num, den = num.scale(inv), den.scale(inv)
        return num, den

    @property
    def nvars(self):
        return self.num.nvars

    def is_polynomial(self):
        return self.den.is_constant()

    def as_laurent(self):
        if not self.den.is_constant():
            raise ValueError("fraction has a non-constant denominator")
        c = self.den.constant_term()
        return self.num if c == 1 else self.num.scale(1 / Fraction(c) if not isinstance(c, Cyc) else c.inverse())

    def _lift(self, other):
        if isinstance(other, FracElem):
            return other
        if isinstance(other, LaurentPoly):
            return FracElem(other, None, self.invertible)
        if isinstance(other, (int, Fraction, Cyc)):
            return FracElem(LaurentPoly.const(self.nvars, other), None, self.invertible)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        inv = self.invertible | other.invertible
        if self.den == other.den:
            return FracElem(self.num + other.num, self.den, inv)
        return FracElem(self.num * other.den + other.num * self.den, self.den * other.den, inv)

    __radd__ = __add__

    def __neg__(self):
        return FracElem(-self.num, self.den, self.invertible)

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        inv = self.invertible | other.invertible
        return FracElem(self.num * other.num, self.den * other.den, inv)

    __rmul__ = __mul__

    def reciprocal(self):
        if not self.num:
            raise DegenerateScalar("reciprocal of zero")
        return FracElem(self.den, self.num, self.invertible)

    def __truediv__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self * other.reciprocal()

    def __pow__(self, k):
        if k < 0:
            return self.reciprocal() ** (-k)
        return FracElem(self.num ** k, self.den ** k, self.invertible)

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self.num * other.den == other.num * self.den

    __hash__ = None

    def to_string(self, names=None):
        if self.den.is_constant() and self.den.constant_term() == 1:
            return self.num.to_string(names)
        return "(%s)/(%s)" % (self.num.to_string(names), self.den.to_string(names))

    def __repr__(self):
        return "FracElem(%s)" % self.to_string()


# ------------------------------------------------------------ determinants


def _peel(M, n):
    """Laplace-expand along rows/columns holding a single nonzero entry.

    Returns ``(factor, rows, cols)``: the accumulated signed product of the
    removed entries and the surviving row/column indices.
    """
    rows = list(range(n))
    cols = list(range(n))
    factor = None
    sign = 1
    changed = True
    while changed and rows:
        changed = False
        for ri, r in enumerate(rows):
            nz = [ci for ci, c in enumerate(cols) if M[r][c]]
            if not nz:
                return 0, [], []
            if len(nz) == 1:
                ci = nz[0]
                entry = M[r][cols[ci]]
                if (ri + ci) % 2:
                    sign = -sign
                factor = entry if factor is None else factor * entry
                del rows[ri]
                del cols[ci]
                changed = True
                break
        if changed:
            continue
        for ci, c in enumerate(cols):
            nz = [ri for ri, r in enumerate(rows) if M[r][c]]
            if not nz:
                return 0, [], []
            if len(nz) == 1:
                ri = nz[0]
                entry = M[rows[ri]][c]
                if (ri + ci) % 2:
                    sign = -sign
                factor = entry if factor is None else factor * entry
                del rows[ri]
                del cols[ci]
                changed = True
                break
    if factor is None:
        return sign, rows, cols
    return (factor if sign == 1 else -factor), rows, cols


LAPLACE_CUTOFF = 10


def _laplace_det(A, nvars):
    """Row expansion with memoized minors indexed by column bitmasks.

    Cheap when entries have few terms (as in comatrices and group
    determinants): every step multiplies a minor by a single entry.
    """
    m = len(A)
    # minors of the bottom rows, keyed by the set of columns used
    minors = {0: LaurentPoly.const(nvars, 1)}
    for k in range(m - 1, -1, -1):
        row = A[k]
        nxt = {}
        for mask, minor in minors.items():
            # sign of column j relative to columns already used to its left
            for j in range(m):
                bit = 1 << j
                if mask & bit or not row[j]:
                    continue
                left = bin(mask & (bit - 1)).count("1")
                term = row[j] * minor
                if left % 2:
                    term = -term
                key = mask | bit
                cur = nxt.get(key)
                nxt[key] = term if cur is None else cur + term
        minors = {k2: v for k2, v in nxt.items() if v}
        if not minors:
            return LaurentPoly.zero(nvars)
    return minors.get((1 << m) - 1, LaurentPoly.zero(nvars))


def poly_det(M, nvars):
    """Determinant of a square matrix of polynomials.

    Singleton rows and columns are expanded first; the remaining core goes
    through fraction-free Bareiss elimination with a Markowitz-style pivot
    (fewest competing nonzeros, then fewest terms).
    """
    n = len(M)
    one = LaurentPoly.const(nvars, 1)
    if n == 0:
        return one
    factor, rows, cols = _peel(M, n)
    if isinstance(factor, int) and factor == 0:
        return LaurentPoly.zero(nvars)
    if isinstance(factor, int):
        factor = one if factor == 1 else -one
    if not rows:
        return factor
    A = [[M[r][c] for c in cols] for r in rows]
    m = len(A)
    if m <= LAPLACE_CUTOFF:
        return factor * _laplace_det(A, nvars)
    sign = 1
    prev = one
    for k in range(m):
        best = None
        row_nz = [sum(1 for j in range(k, m) if A[i][j]) for i in range(m)]
        col_nz = [sum(1 for i in range(k, m) if A[i][j]) for j in range(m)]
        for i in range(k, m):
            for j in range(k, m):
                a = A[i][j]
                if a:
                    score = ((row_nz[i] - 1) * (col_nz[j] - 1), len(a.terms), i, j)
                    if best is None or score < best:
                        best = score
        if best is None:
            return LaurentPoly.zero(nvars)
        _, _, pi, pj = best
        if pi != k:
            A[k], A[pi] = A[pi], A[k]
            sign = -sign
        if pj != k:
            for row in A:
                row[k], row[pj] = row[pj], row[k]
            sign = -sign
        piv = A[k][k]
        for i in range(k + 1, m):
            aik = A[i][k]
            row_i, row_k = A[i], A[k]
            for j in range(k + 1, m):
                v = piv * row_i[j]
                if aik and row_k[j]:
                    v = v - aik * row_k[j]
                row_i[j] = v.divexact(prev) if (v and prev != one) else v
            row_i[k] = LaurentPoly.zero(nvars)
        prev = piv
    det = A[m - 1][m - 1]
    if sign < 0:
        det = -det
    return factor * det


def cramer_solve(M, b, nvars):
    """Solve ``M x = b`` over the fraction field by Cramer's rule.

    Returns ``(numerators, det)`` with ``x_k = numerators[k] / det``.
    """
    n = len(M)
    d = poly_det(M, nvars)
    nums = []
    for k in range(n):
        Mk = [list(row) for row in M]
        for i in range(n):
            Mk[i][k] = b[i]
        nums.append(poly_det(Mk, nvars))
    return nums, d

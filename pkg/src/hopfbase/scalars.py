"""Exact scalars: rationals and elements of cyclotomic fields Q(zeta_N).

Elements of Q(zeta_N) are stored in the power basis of Q[z]/(Phi_N(z)).
When phi(N) = 1 (N = 1 or 2) the field is Q itself and
:class:`CyclotomicField` hands out plain :class:`fractions.Fraction` values,
which keeps the rational case fast.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

from .errors import DegenerateScalar, OrderMismatch, ScalarParseError

__all__ = [
    "Cyc",
    "CyclotomicField",
    "cyclotomic_polynomial",
    "euler_phi",
    "format_scalar",
    "scalar_arith",
]


def _divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def euler_phi(n):
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _poly_divexact(num, den):
    # integer polynomials, low degree first, den monic
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        c = num[k + len(den) - 1]
        out[k] = c
        if c:
            for j, d in enumerate(den):
                num[k + j] -= c * d
    if any(num[: len(den) - 1]):
        raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n):
    """Return Phi_n as a tuple of integer coefficients, constant term first."""
    if n < 1:
        raise ValueError("order must be positive")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in _divisors(n)[:-1]:
        poly = _poly_divexact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


@lru_cache(maxsize=None)
def _reduction_table(n):
    """z^k mod Phi_n for 0 <= k <= 2*phi(n) - 2, as Fraction tuples."""
    phi = cyclotomic_polynomial(n)
    deg = len(phi) - 1
    table = []
    cur = [Fraction(0)] * deg
    cur[0] = Fraction(1)
    for _ in range(max(2 * deg - 1, 1)):
        table.append(tuple(cur))
        # multiply by z and reduce with the monic Phi_n
        top = cur[-1]
        cur = [Fraction(0)] + cur[:-1]
        if top:
            for j in range(deg):
                cur[j] -= top * phi[j]
    return tuple(table)


def _reduce(n, poly):
    table = _reduction_table(n)
    deg = len(table[0])
    if len(poly) <= deg:
        return tuple(poly) + (Fraction(0),) * (deg - len(poly))
    out = list(poly[:deg])
    for k in range(deg, len(poly)):
        c = poly[k]
        if c:
            if k < len(table):
                row = table[k]
            else:
                row = _power_mod(n, k)
            for j in range(deg):
                if row[j]:
                    out[j] += c * row[j]
    return tuple(out)


@lru_cache(maxsize=None)
def _power_mod(n, k):
    deg = len(cyclotomic_polynomial(n)) - 1
    base = [Fraction(0)] * (k + 1)
    base[k] = Fraction(1)
    # fold down one degree at a time
    phi = cyclotomic_polynomial(n)
    for top in range(k, deg - 1, -1):
        c = base[top]
        if c:
            base[top] = Fraction(0)
            for j in range(deg):
                base[top - deg + j] -= c * phi[j]
    return tuple(base[:deg])


def _poly_trim(p):
    p = list(p)
    while p and not p[-1]:
        p.pop()
    return p


def _poly_divmod(a, b):
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lead = b[-1]
    while len(a) >= len(b) and a:
        c = a[-1] / lead
        shift = len(a) - len(b)
        q[shift] = c
        for j, bj in enumerate(b):
            a[shift + j] -= c * bj
        a = _poly_trim(a)
    return _poly_trim(q), a


def _poly_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    for j, y in enumerate(b):
        a[j] -= y
    return _poly_trim(a)


def _inverse_mod(n, coeffs):
    """Extended Euclid of ``coeffs`` against Phi_n."""
    r0 = [Fraction(c) for c in cyclotomic_polynomial(n)]
    r1 = _poly_trim(coeffs)
    if not r1:
        raise DegenerateScalar("division by zero in Q(zeta_%d)" % n)
    s0, s1 = [], [Fraction(1)]
    while r1:
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
    # r0 is a nonzero constant since Phi_n is irreducible
    c = r0[0]
    return _reduce(n, [x / c for x in s0])


class Cyc:
    """An element of Q(zeta_N) in the power basis modulo Phi_N."""

    __slots__ = ("order", "coeffs", "_hash")

    def __init__(self, order, coeffs=()):
        if order < 1:
            raise ValueError("cyclotomic order must be positive")
        self.order = order
        self.coeffs = _reduce(order, [Fraction(c) for c in coeffs] or [Fraction(0)])
        self._hash = None

    @classmethod
    def _raw(cls, order, coeffs):
        obj = cls.__new__(cls)
        obj.order = order
        obj.coeffs = coeffs
        obj._hash = None
        return obj

    @classmethod
    def zeta(cls, order, power=1):
        power %= order
        return cls._raw(order, _reduce(order, [Fraction(0)] * power + [Fraction(1)]))

    def _coerce(self, other):
        if isinstance(other, Cyc):
            if other.order != self.order:
                raise OrderMismatch(
                    "cyclotomic orders differ: %d vs %d" % (self.order, other.order)
                )
            return other
        if isinstance(other, (int, Fraction, Rational)):
            deg = len(self.coeffs)
            return Cyc._raw(self.order, (Fraction(other),) + (Fraction(0),) * (deg - 1))
        return None

    def is_rational(self):
        return not any(self.coeffs[1:])

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Cyc):
            return self.order == other.order and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(self.coeffs[0])
            else:
                self._hash = hash((self.order, self.coeffs))
        return self._hash

    def __neg__(self):
        return Cyc._raw(self.order, tuple(-c for c in self.coeffs))

    def __pos__(self):
        return self

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Cyc._raw(self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Cyc._raw(self.order, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return Cyc._raw(self.order, (Fraction(0),) * len(self.coeffs))
            return Cyc._raw(self.order, tuple(a * other for a in self.coeffs))
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_rational():
            return self * other.coeffs[0]
        if self.is_rational():
            return other * self.coeffs[0]
        a, b = self.coeffs, other.coeffs
        prod = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return Cyc._raw(self.order, _reduce(self.order, prod))

    __rmul__ = __mul__

    def inverse(self):
        if self.is_rational():
            c = self.coeffs[0]
            if not c:
                raise DegenerateScalar("division by zero in Q(zeta_%d)" % self.order)
            return Cyc._raw(self.order, (1 / c,) + self.coeffs[1:])
        return Cyc._raw(self.order, _inverse_mod(self.order, self.coeffs))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise DegenerateScalar("division by zero in Q(zeta_%d)" % self.order)
            return Cyc._raw(self.order, tuple(a / other for a in self.coeffs))
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        result = Cyc._raw(self.order, (Fraction(1),) + (Fraction(0),) * (len(self.coeffs) - 1))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __repr__(self):
        return "Cyc(%d, %s)" % (self.order, format_scalar(self))

    def __str__(self):
        return format_scalar(self)


def scalar_arith(a, b, op):
    """Field arithmetic ``a op b`` with op in {add, sub, mul, div}."""
    if isinstance(a, Cyc) and isinstance(b, Cyc) and a.order != b.order:
        raise OrderMismatch("cyclotomic orders differ: %d vs %d" % (a.order, b.order))
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if not b:
            raise DegenerateScalar("division by zero")
        return a / b
    raise ValueError("unknown operation %r" % (op,))


def _format_rational(c):
    c = Fraction(c)
    if c.denominator == 1:
        return str(c.numerator)
    return "%d/%d" % (c.numerator, c.denominator)


def format_scalar(c):
    """Canonical literal: ``a/b`` for rationals, ``1-2/3*z^2`` otherwise."""
    if not isinstance(c, Cyc):
        return _format_rational(c)
    parts = []
    for k, a in enumerate(c.coeffs):
        if not a:
            continue
        if k == 0:
            term = _format_rational(a)
        else:
            zpart = "z" if k == 1 else "z^%d" % k
            if a == 1:
                term = zpart
            elif a == -1:
                term = "-" + zpart
            else:
                term = "%s*%s" % (_format_rational(a), zpart)
        if parts and not term.startswith("-"):
            term = "+" + term
        parts.append(term)
    return "".join(parts) if parts else "0"


_TERM = re.compile(
    r"""^(?P<coef>\d+(?:/\d+)?)?
        (?:(?(coef)\*)(?P<z>z)(?:\^(?P<exp>\d+))?)?$""",
    re.VERBOSE,
)


def _parse_poly(text):
    """Parse a polynomial literal in z into {power: Fraction}."""
    s = re.sub(r"\s+", "", str(text))
    if not s:
        raise ScalarParseError("empty scalar literal")
    if s[0] not in "+-":
        s = "+" + s
    terms = {}
    for m in re.finditer(r"([+-])([^+-]+)", s):
        sign, body = m.group(1), m.group(2)
        tm = _TERM.match(body)
        if not tm or (tm.group("coef") is None and tm.group("z") is None):
            raise ScalarParseError("cannot parse scalar term %r in %r" % (body, text))
        coef = Fraction(tm.group("coef")) if tm.group("coef") else Fraction(1)
        power = 0
        if tm.group("z"):
            power = int(tm.group("exp")) if tm.group("exp") else 1
        if sign == "-":
            coef = -coef
        terms[power] = terms.get(power, Fraction(0)) + coef
    consumed = "".join(m.group(0) for m in re.finditer(r"([+-])([^+-]+)", s))
    if consumed != s:
        raise ScalarParseError("cannot parse scalar literal %r" % (text,))
    return terms


class CyclotomicField:
    """The coefficient field Q(zeta_N) of a Hopf algebra instance."""

    def __init__(self, order=1):
        if order < 1:
            raise ValueError("cyclotomic order must be positive")
        self.order = order
        self.degree = euler_phi(order)

    @property
    def is_rational(self):
        return self.degree == 1

    def __eq__(self, other):
        return isinstance(other, CyclotomicField) and other.order == self.order

    def __hash__(self):
        return hash(("CyclotomicField", self.order))

    def __repr__(self):
        return "CyclotomicField(%d)" % self.order

    @property
    def zero(self):
        return self.coerce(0)

    @property
    def one(self):
        return self.coerce(1)

    def zeta(self, power=1):
        """The primitive root exp(2 pi i / N) raised to ``power``."""
        if self.order == 1:
            return Fraction(1)
        if self.order == 2:
            return Fraction(-1) ** (power % 2)
        return Cyc.zeta(self.order, power)

    def coerce(self, x):
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, Cyc):
            if x.order == self.order:
                return Fraction(x.coeffs[0]) if self.is_rational else x
            if x.is_rational():
                return self.coerce(x.coeffs[0])
            raise OrderMismatch("scalar of order %d in field of order %d" % (x.order, self.order))
        if isinstance(x, (int, Fraction, Rational)):
            if self.is_rational:
                return Fraction(x)
            return Cyc(self.order, [x])
        raise TypeError("cannot coerce %r into %r" % (x, self))

    def parse(self, text):
        terms = _parse_poly(text)
        if self.order == 1 and any(k for k, v in terms.items() if v and k > 0):
            raise ScalarParseError("literal %r uses z but the field is Q" % (text,))
        if self.order == 1:
            return Fraction(terms.get(0, 0))
        top = max(terms)
        poly = [Fraction(0)] * (top + 1)
        for k, v in terms.items():
            poly[k] += v
        value = Cyc(self.order, poly)
        return self.coerce(value)

    def format(self, c):
        return format_scalar(c)

"""Finite groups given by multiplication tables.

Covers abelianization, the primary decomposition of a finite abelian group,
the explicit basis of the kernel lattice of Z^G -> Gbar, the Dedekind group
determinant and the left regular action on polynomials in the t_g.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations, product
from math import gcd

from .errors import InvalidGroup, NonAbelianInput, SizeLimit, InputError
from .laurent import LaurentPoly, poly_det
from .linalg import smith_normal_form, hnf, kernel_mod, int_det, solve

__all__ = [
    "FiniteGroup",
    "AbelianDecomposition",
    "LatticeBasis",
    "cyclic",
    "dihedral",
    "symmetric3",
    "quaternion8",
    "direct_product",
    "klein_four",
    "group_by_name",
    "group_from_json",
    "abelianization",
    "primary_decompose",
    "lattice_basis_explicit",
    "lattice_equals_oracle",
    "dedekind_determinant",
    "regular_action",
]

MAX_ORDER = 24


class FiniteGroup:
    """A group on indices 0..n-1 with ``table[i][j]`` the index of i*j."""

    def __init__(self, elements, table, name=None, check=True):
        self.elements = list(elements)
        self.table = [list(row) for row in table]
        self.name = name or "G"
        n = len(self.elements)
        if n == 0:
            raise InvalidGroup("a group needs at least one element")
        if len(set(self.elements)) != n:
            raise InvalidGroup("element labels must be distinct")
        if len(self.table) != n or any(len(row) != n for row in self.table):
            raise InvalidGroup("table must be %d x %d" % (n, n))
        ident = [i for i in range(n) if all(self.table[i][j] == j for j in range(n))]
        if not ident:
            raise InvalidGroup("no identity element")
        self.identity = ident[0]
        self.inverse = [None] * n
        for i in range(n):
            for j in range(n):
                if self.table[i][j] == self.identity:
                    self.inverse[i] = j
                    break
            if self.inverse[i] is None:
                raise InvalidGroup("element %r has no inverse" % self.elements[i])
        if check:
            self.validate()

    def validate(self):
        n = self.order
        full = set(range(n))
        T = self.table
        for i in range(n):
            if set(T[i]) != full:
                raise InvalidGroup("row %r is not a permutation" % self.elements[i])
            if {T[j][i] for j in range(n)} != full:
                raise InvalidGroup("column %r is not a permutation" % self.elements[i])
            if T[self.identity][i] != i or T[i][self.identity] != i:
                raise InvalidGroup("identity fails at %r" % self.elements[i])
            if T[i][self.inverse[i]] != self.identity or T[self.inverse[i]][i] != self.identity:
                raise InvalidGroup("inverse fails at %r" % self.elements[i])
        for a in range(n):
            Ta = T[a]
            for b in range(n):
                ab = Ta[b]
                Tb = T[b]
                Tab = T[ab]
                for c in range(n):
                    if Tab[c] != Ta[Tb[c]]:
                        raise InvalidGroup(
                            "associativity fails at (%s, %s, %s)"
                            % (self.elements[a], self.elements[b], self.elements[c])
                        )

    @property
    def order(self):
        return len(self.elements)

    def mul(self, a, b):
        return self.table[a][b]

    def inv(self, a):
        return self.inverse[a]

    def power(self, a, k):
        if k < 0:
            a, k = self.inverse[a], -k
        result = self.identity
        for _ in range(k):
            result = self.table[result][a]
        return result

    def element_order(self, a):
        k, x = 1, a
        while x != self.identity:
            x = self.table[x][a]
            k += 1
        return k

    def index(self, label):
        try:
            return self.elements.index(label)
        except ValueError:
            raise KeyError("unknown group element %r" % (label,)) from None

    def is_abelian(self):
        T = self.table
        return all(T[i][j] == T[j][i] for i in range(self.order) for j in range(i))

    def generated_subgroup(self, gens):
        found = {self.identity}
        frontier = [self.identity]
        while frontier:
            new = []
            for x in frontier:
                for g in gens:
                    y = self.table[x][g]
                    if y not in found:
                        found.add(y)
                        new.append(y)
            frontier = new
        return found

    def to_json(self):
        return {"name": self.name, "elements": list(self.elements), "table": [list(r) for r in self.table]}

    def __repr__(self):
        return "FiniteGroup(%s, order=%d)" % (self.name, self.order)


# ----------------------------------------------------------------- builders


def cyclic(n):
    if n < 1:
        raise InvalidGroup("cyclic group order must be positive")
    labels = ["e"] + ["a" if k == 1 else "a^%d" % k for k in range(1, n)]
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return FiniteGroup(labels, table, name="Z%d" % n)


def dihedral(n):
    """Symmetry group of the n-gon, order 2n, elements r^i s^j."""
    if n < 1:
        raise InvalidGroup("dihedral parameter must be positive")

    def label(i, j):
        r = "" if i == 0 else ("r" if i == 1 else "r^%d" % i)
        s = "s" if j else ""
        return (r + s) or "e"

    elems = [(i, j) for j in range(2) for i in range(n)]
    pos = {x: k for k, x in enumerate(elems)}
    table = []
    for (i, a) in elems:
        row = []
        for (j, b) in elems:
            row.append(pos[((i + (j if a == 0 else -j)) % n, (a + b) % 2)])
        table.append(row)
    return FiniteGroup([label(i, j) for i, j in elems], table, name="D%d" % n)


def _cycle_label(perm):
    seen, cycles = set(), []
    for s in range(len(perm)):
        if s in seen or perm[s] == s:
            continue
        cyc, x = [], s
        while x not in seen:
            seen.add(x)
            cyc.append(x)
            x = perm[x]
        cycles.append("(" + " ".join(str(c + 1) for c in cyc) + ")")
    return "".join(cycles) or "e"


def symmetric3():
    perms = sorted(permutations(range(3)))
    pos = {p: k for k, p in enumerate(perms)}
    # (p*q)(x) = p(q(x))
    table = [[pos[tuple(p[q[x]] for x in range(3))] for q in perms] for p in perms]
    return FiniteGroup([_cycle_label(p) for p in perms], table, name="S3")


def quaternion8():
    labels = ["1", "i", "j", "k", "-1", "-i", "-j", "-k"]
    # unit quaternion products on the positive units
    units = {
        ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
        ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
        ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
        ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
    }

    def split(lab):
        return (-1, lab[1:]) if lab.startswith("-") else (1, lab)

    table = []
    for a in labels:
        sa, ua = split(a)
        row = []
        for b in labels:
            sb, ub = split(b)
            s, u = units[(ua, ub)]
            s *= sa * sb
            row.append(labels.index(u if s > 0 else "-" + u))
        table.append(row)
    return FiniteGroup(labels, table, name="Q8")


def direct_product(G, H):
    elems = [(a, b) for a in range(G.order) for b in range(H.order)]
    pos = {x: k for k, x in enumerate(elems)}
    table = [[pos[(G.table[a][c], H.table[b][d])] for (c, d) in elems] for (a, b) in elems]
    labels = ["(%s,%s)" % (G.elements[a], H.elements[b]) for a, b in elems]
    return FiniteGroup(labels, table, name="%sx%s" % (G.name, H.name))


def klein_four():
    return direct_product(cyclic(2), cyclic(2))


def group_by_name(name):
    """Parse names such as ``Z4``, ``D4``, ``S3``, ``Q8``, ``Z2xZ2``, ``trivial``."""
    key = name.strip()
    if key.lower() in ("trivial", "1", "z1"):
        return cyclic(1)
    if "x" in key:
        parts = [group_by_name(p) for p in key.split("x")]
        G = parts[0]
        for H in parts[1:]:
            G = direct_product(G, H)
        return G
    head, tail = key[:1].upper(), key[1:]
    if not tail.isdigit():
        raise InputError("unknown group name %r" % name, "group")
    k = int(tail)
    if head == "Z":
        return cyclic(k)
    if head == "D":
        return dihedral(k)
    if head == "S" and k == 3:
        return symmetric3()
    if head == "Q" and k == 8:
        return quaternion8()
    raise InputError("unknown group name %r" % name, "group")


def group_from_json(data):
    if not isinstance(data, dict):
        raise InputError("group must be an object", "group")
    for key in ("elements", "table"):
        if key not in data:
            raise InputError("missing field", key)
    elements = data["elements"]
    table = data["table"]
    if len(elements) > MAX_ORDER:
        raise SizeLimit("groups of order > %d are not supported" % MAX_ORDER)
    try:
        return FiniteGroup([str(e) for e in elements], table, name=data.get("name", "G"))
    except InvalidGroup as exc:
        raise InputError(str(exc), "table") from exc
    except (TypeError, IndexError) as exc:
        raise InputError("malformed table: %s" % exc, "table") from exc


# ------------------------------------------------------------ abelianization


def abelianization(G):
    """Quotient by the commutator subgroup; returns ``(Gab, proj)``.

    Cosets are numbered by their first element in G's order and labelled
    by that representative.
    """
    T, inv = G.table, G.inverse
    comms = {T[T[g][h]][T[inv[g]][inv[h]]] for g in range(G.order) for h in range(G.order)}
    N = G.generated_subgroup(sorted(comms))
    # conjugation closure (a no-op for the commutator subgroup, kept as a check)
    changed = True
    while changed:
        changed = False
        for g in range(G.order):
            for x in list(N):
                y = T[T[g][x]][inv[g]]
                if y not in N:
                    N = G.generated_subgroup(sorted(N | {y}))
                    changed = True
    proj = [None] * G.order
    reps = []
    for g in range(G.order):
        if proj[g] is None:
            k = len(reps)
            reps.append(g)
            for x in N:
                proj[T[g][x]] = k
    table = [[proj[T[a][b]] for b in reps] for a in reps]
    Gab = FiniteGroup([G.elements[r] for r in reps], table, name=G.name + "_ab")
    return Gab, proj


# ---------------------------------------------------- primary decomposition


def _prime_powers(m):
    out, p = [], 2
    while p * p <= m:
        if m % p == 0:
            q = 1
            while m % p == 0:
                m //= p
                q *= p
            out.append((p, q))
        p += 1
    if m > 1:
        out.append((m, m))
    return out


@dataclass
class AbelianDecomposition:
    group: FiniteGroup
    primes: list
    exponents: list
    generators: list
    coordinates: dict = field(repr=False)

    @property
    def primary_orders(self):
        return [p ** e for p, e in zip(self.primes, self.exponents)]

    @property
    def r(self):
        return len(self.generators)

    @property
    def d(self):
        return sum(self.primary_orders)

    def element(self, coords):
        G = self.group
        x = G.identity
        for s, f in zip(self.generators, coords):
            x = G.mul(x, G.power(s, f))
        return x

    def to_json(self):
        return {
            "primary_orders": self.primary_orders,
            "generators": [self.group.elements[s] for s in self.generators],
            "d": self.d,
            "r": self.r,
        }


def _int_inverse(V):
    n = len(V)
    cols = []
    for k in range(n):
        e = [Fraction(int(i == k)) for i in range(n)]
        cols.append(solve([[Fraction(x) for x in row] for row in V], e))
    inv = [[cols[j][i] for j in range(n)] for i in range(n)]
    for row in inv:
        for x in row:
            if x.denominator != 1:
                raise ArithmeticError("transform is not unimodular")
    return [[int(x) for x in row] for row in inv]


def primary_decompose(A):
    """Decompose a finite abelian group into cyclic groups of prime-power order.

    Generators come from the Smith form of the relation lattice of a greedy
    generating set, are split by prime, and each s_i is then replaced by the
    earliest element (in A's order) among its powers s_i^u with p_i not
    dividing u.
    """
    if not A.is_abelian():
        raise NonAbelianInput("%s is not abelian" % A.name)
    if A.order == 1:
        return AbelianDecomposition(A, [], [], [], {A.identity: ()})
    gens, span = [], {A.identity}
    for g in range(A.order):
        if g not in span:
            gens.append(g)
            span = A.generated_subgroup(gens)
    m = len(gens)
    orders = [A.element_order(g) for g in gens]
    relations = [[orders[i] if j == i else 0 for j in range(m)] for i in range(m)]
    first = {}
    for vec in product(*[range(o) for o in orders]):
        x = A.identity
        for g, f in zip(gens, vec):
            x = A.mul(x, A.power(g, f))
        if x in first:
            rel = [a - b for a, b in zip(vec, first[x])]
            if any(rel):
                relations.append(rel)
        else:
            first[x] = vec
    U, D, V = smith_normal_form(relations)
    Vinv = _int_inverse(V)
    factors = []
    for j in range(m):
        dj = D[j][j] if j < len(D) else 0
        if dj > 1:
            s = A.identity
            for g, f in zip(gens, Vinv[j]):
                s = A.mul(s, A.power(g, f))
            factors.append((dj, s))
    parts = []
    for dj, s in factors:
        for p, q in _prime_powers(dj):
            parts.append((p, q, A.power(s, dj // q)))
    parts.sort(key=lambda t: (t[0], t[1]))
    primes, exps, generators = [], [], []
    for p, q, s in parts:
        e = 0
        while p ** e < q:
            e += 1
        best = min(A.power(s, u) for u in range(1, q) if u % p)
        primes.append(p)
        exps.append(e)
        generators.append(best)
    coords = {}
    orders = [p ** e for p, e in zip(primes, exps)]
    for vec in product(*[range(o) for o in orders]):
        x = A.identity
        for s, f in zip(generators, vec):
            x = A.mul(x, A.power(s, f))
        if x in coords:
            raise ArithmeticError("primary decomposition is not direct")
        coords[x] = vec
    if len(coords) != A.order:
        raise ArithmeticError("primary decomposition does not generate")
    return AbelianDecomposition(A, primes, exps, generators, coords)


# -------------------------------------------------------------------- lattice


@dataclass
class LatticeBasis:
    ambient_rank: int
    columns: list
    provenance: list
    lifts: list

    def matrix(self):
        """Columns as a square integer matrix (rows indexed by G)."""
        n = self.ambient_rank
        return [[col[i] for col in self.columns] for i in range(n)]

    def det(self):
        return int_det(self.matrix())

    def degrees(self):
        return [sum(c) for c in self.columns]

    def to_json(self):
        return {"columns": [list(c) for c in self.columns], "provenance": list(self.provenance)}


def lattice_basis_explicit(G, proj, dec):
    """Explicit basis of the kernel of Z^G -> Gbar, g -> proj(g).

    ``dec`` decomposes Gbar. The basis consists of t_e, the powers
    t_{sigma_i}^{p_i^{e_i}} of lifts sigma_i of the s_i, and one monomial
    u_g = t_g * prod_{f_i(g) != 0} t_{sigma_i}^{p_i^{e_i} - f_i(g)} for every
    other g. Lifts are the first elements of G mapping to each s_i.
    """
    n = G.order
    lifts = []
    for s in dec.generators:
        lifts.append(next(g for g in range(n) if proj[g] == s))
    orders = dec.primary_orders

    def unit(i, c=1):
        v = [0] * n
        v[i] = c
        return v

    columns = [unit(G.identity)]
    tags = ["t_e"]
    for i, (sig, q) in enumerate(zip(lifts, orders)):
        columns.append(unit(sig, q))
        tags.append("sigma_power:%s" % G.elements[sig])
    special = {G.identity, *lifts}
    for g in range(n):
        if g in special:
            continue
        v = unit(g)
        f = dec.coordinates[proj[g]]
        for i, fi in enumerate(f):
            if fi:
                v[lifts[i]] += orders[i] - fi
        columns.append(v)
        tags.append("u_g:%s" % G.elements[g])
    return LatticeBasis(n, columns, tags, lifts)


def lattice_equals_oracle(basis, G, proj, dec):
    """Compare with an independently computed Hermite kernel basis."""
    Gbar = dec.group
    n = G.order
    for col in basis.columns:
        x = Gbar.identity
        for g, k in enumerate(col):
            x = Gbar.mul(x, Gbar.power(proj[g], k))
        if x != Gbar.identity:
            return False
    M = [[dec.coordinates[proj[g]][i] for g in range(n)] for i in range(dec.r)]
    oracle = kernel_mod(M, dec.primary_orders, n)
    if abs(basis.det()) != Gbar.order:
        return False
    return hnf(basis.columns, n) == oracle


# ---------------------------------------------------------------- Dedekind


def dedekind_determinant(G, size_limit=8):
    """det(t_{g h^{-1}}) as a polynomial in variables indexed by G."""
    n = G.order
    if n > size_limit:
        raise SizeLimit("Dedekind determinant of order %d exceeds limit %d" % (n, size_limit))
    t = [LaurentPoly.var(n, i) for i in range(n)]
    M = [[t[G.mul(g, G.inv(h))] for h in range(n)] for g in range(n)]
    return poly_det(M, n)


def regular_action(G, h, P):
    """Substitute t_g -> t_{hg}."""
    return P.remap(G.order, [G.mul(h, g) for g in range(G.order)])

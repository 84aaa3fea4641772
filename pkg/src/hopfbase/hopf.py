"""Finite-dimensional Hopf algebras given by structure constants.

Elements are sparse coordinate dicts ``{basis index: scalar}`` and tensors
are dicts keyed by index pairs. A :class:`HopfAlgebraData` stores

* ``mul[i][j]``   the product e_i e_j,
* ``comul[i]``    Delta(e_i) as ``{(j, k): c}``,
* ``antipode[i]`` S(e_i),
* ``unit`` and ``counit``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (
    ClosureFailure,
    NotGrouplike,
    ShapeMismatch,
    UndeclaredCoradical,
)
from .groups import FiniteGroup, abelianization, primary_decompose
from .linalg import rank, rref, rref_and_kernel, solve
from .scalars import CyclotomicField

__all__ = [
    "HopfAlgebraData",
    "GroupLikes",
    "QuotientHopf",
    "HabInfo",
    "verify_hopf",
    "dual",
    "coradical_dim",
    "grouplike_certify",
    "skew_primitives",
    "hab_quotient",
    "hab_is_group_algebra",
    "change_basis",
    "derive_group_part",
    "group_algebra",
    "functions_on_group",
    "sweedler",
    "taft",
    "uqbar_sl2",
]


# ------------------------------------------------------------ sparse helpers


def vadd(x, y, c=1):
    """x + c*y on sparse dicts (returns a new dict)."""
    out = dict(x)
    for k, v in y.items():
        w = out.get(k, 0) + c * v
        if w:
            out[k] = w
        else:
            out.pop(k, None)
    return out


def vscale(x, c):
    if not c:
        return {}
    return {k: v * c for k, v in x.items()}


def _acc(out, key, val):
    w = out.get(key, 0) + val
    if w:
        out[key] = w
    else:
        out.pop(key, None)


def clean(x):
    return {k: v for k, v in x.items() if v}


class HopfAlgebraData:
    def __init__(
        self,
        name,
        field,
        basis,
        mul,
        unit,
        comul,
        counit,
        antipode,
        grouplikes=None,
        group_part=None,
    ):
        self.name = name
        self.field = field if isinstance(field, CyclotomicField) else CyclotomicField(field)
        self.basis = list(basis)
        self.mul = mul
        self.unit = clean(unit)
        self.comul = [clean(c) for c in comul]
        self.counit = list(counit)
        self.antipode = [clean(s) for s in antipode]
        # declared group-likes as coordinate vectors
        self.grouplikes = [clean(g) for g in grouplikes] if grouplikes is not None else None
        # non-group basis index -> basis index of a group-like
        self.group_part = dict(group_part) if group_part else None
        self._check_shapes()

    def _check_shapes(self):
        n = self.dim
        if len(set(self.basis)) != n:
            raise ShapeMismatch("basis labels must be distinct")
        if len(self.mul) != n or any(len(row) != n for row in self.mul):
            raise ShapeMismatch("multiplication table must be %d x %d" % (n, n))
        for name, seq in (("comultiplication", self.comul), ("counit", self.counit), ("antipode", self.antipode)):
            if len(seq) != n:
                raise ShapeMismatch("%s has length %d, expected %d" % (name, len(seq), n))
        idx_ok = lambda k: isinstance(k, int) and 0 <= k < n
        for row in self.mul:
            for entry in row:
                if not all(idx_ok(k) for k in entry):
                    raise ShapeMismatch("product index out of range")
        for c in self.comul:
            if not all(idx_ok(j) and idx_ok(k) for j, k in c):
                raise ShapeMismatch("coproduct index out of range")
        for v in [self.unit] + self.antipode + (self.grouplikes or []):
            if not all(idx_ok(k) for k in v):
                raise ShapeMismatch("coordinate index out of range")

    @property
    def dim(self):
        return len(self.basis)

    def index(self, label):
        try:
            return self.basis.index(label)
        except ValueError:
            raise KeyError("unknown basis label %r" % (label,)) from None

    def basis_vector(self, i, c=1):
        return {i: self.field.coerce(c)}

    def one(self):
        return dict(self.unit)

    # ---------------------------------------------------------- operations
    def multiply(self, x, y):
        out = {}
        mul = self.mul
        for i, a in x.items():
            row = mul[i]
            for j, b in y.items():
                ab = a * b
                for k, c in row[j].items():
                    _acc(out, k, ab * c)
        return out

    def power(self, x, k):
        result = self.one()
        for _ in range(k):
            result = self.multiply(result, x)
        return result

    def coproduct(self, x):
        out = {}
        for i, a in x.items():
            for jk, c in self.comul[i].items():
                _acc(out, jk, a * c)
        return out

    def eps(self, x):
        total = 0
        for i, a in x.items():
            if self.counit[i]:
                total = total + a * self.counit[i]
        return total

    def S(self, x):
        out = {}
        for i, a in x.items():
            for j, c in self.antipode[i].items():
                _acc(out, j, a * c)
        return out

    def tensor_multiply(self, X, Y):
        out = {}
        mul = self.mul
        for (a, b), c in X.items():
            for (p, q), d in Y.items():
                cd = c * d
                left = mul[a][p]
                right = mul[b][q]
                for k1, v1 in left.items():
                    for k2, v2 in right.items():
                        _acc(out, (k1, k2), cd * v1 * v2)
        return out

    def is_commutative(self):
        n = self.dim
        return all(self.mul[i][j] == self.mul[j][i] for i in range(n) for j in range(i))

    def grouplike_basis_indices(self):
        """Basis indices of declared group-likes, or None if some are not basis vectors."""
        if self.grouplikes is None:
            return None
        out = []
        for g in self.grouplikes:
            if len(g) != 1:
                return None
            (i, c), = g.items()
            if c != 1:
                return None
            out.append(i)
        return out

    def label_of(self, x):
        """Readable form of a coordinate vector."""
        if not x:
            return "0"
        parts = []
        for i in sorted(x):
            c = x[i]
            parts.append(self.basis[i] if c == 1 else "%s*%s" % (self.field.format(c), self.basis[i]))
        return " + ".join(parts)

    def __repr__(self):
        return "HopfAlgebraData(%s, dim=%d)" % (self.name, self.dim)


# ---------------------------------------------------------------- checks


@dataclass
class Check:
    name: str
    ok: bool
    witness: object = None

    def to_json(self):
        return {"check": self.name, "ok": self.ok, "witness": self.witness}


@dataclass
class HopfReport:
    checks: list

    @property
    def ok(self):
        return all(c.ok for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.ok]

    def to_json(self):
        return {"ok": self.ok, "checks": [c.to_json() for c in self.checks]}


def _first_failure(items, pred):
    for item in items:
        if not pred(item):
            return item
    return None


def verify_hopf(H):
    """Check every Hopf algebra axiom on basis elements.

    Each failed identity carries the label(s) of a basis witness.
    """
    n = H.dim
    lab = H.basis
    e = lambda i: {i: 1}
    one = H.one()
    checks = []

    def record(name, bad, fmt=lambda w: lab[w]):
        checks.append(Check(name, bad is None, None if bad is None else fmt(bad)))

    triples = ((i, j, k) for i in range(n) for j in range(n) for k in range(n))
    bad = _first_failure(
        triples,
        lambda t: H.multiply(H.mul[t[0]][t[1]], e(t[2])) == H.multiply(e(t[0]), H.mul[t[1]][t[2]]),
    )
    record("associativity", bad, lambda t: [lab[i] for i in t])

    bad = _first_failure(range(n), lambda i: H.multiply(one, e(i)) == e(i) == H.multiply(e(i), one))
    record("unit", bad)

    def coassoc(i):
        left, right = {}, {}
        for (j, k), c in H.comul[i].items():
            for (a, b), d in H.comul[j].items():
                _acc(left, (a, b, k), c * d)
            for (a, b), d in H.comul[k].items():
                _acc(right, (j, a, b), c * d)
        return left == right

    record("coassociativity", _first_failure(range(n), coassoc))

    def counit_law(i):
        left, right = {}, {}
        for (j, k), c in H.comul[i].items():
            if H.counit[j]:
                _acc(left, k, c * H.counit[j])
            if H.counit[k]:
                _acc(right, j, c * H.counit[k])
        return left == e(i) == right

    record("counit", _first_failure(range(n), counit_law))

    def delta_mult(pair):
        i, j = pair
        return H.coproduct(H.mul[i][j]) == H.tensor_multiply(H.comul[i], H.comul[j])

    pairs = [(i, j) for i in range(n) for j in range(n)]
    unit_ok = H.coproduct(one) == {(a, b): c * d for a, c in one.items() for b, d in one.items()}
    bad = None if unit_ok else "1"
    if bad is None:
        bad = _first_failure(pairs, delta_mult)
        bad = None if bad is None else [lab[bad[0]], lab[bad[1]]]
    checks.append(Check("comultiplication_multiplicative", bad is None, bad))

    bad = None if H.eps(one) == 1 else "1"
    if bad is None:
        p = _first_failure(pairs, lambda t: H.eps(H.mul[t[0]][t[1]]) == H.counit[t[0]] * H.counit[t[1]])
        bad = None if p is None else [lab[p[0]], lab[p[1]]]
    checks.append(Check("counit_multiplicative", bad is None, bad))

    def antipode(side):
        def ok(i):
            total = {}
            for (j, k), c in H.comul[i].items():
                if side == "left":
                    prod = H.multiply(H.antipode[j], e(k))
                else:
                    prod = H.multiply(e(j), H.antipode[k])
                total = vadd(total, prod, c)
            return total == vscale(one, H.counit[i])

        return ok

    record("antipode_left", _first_failure(range(n), antipode("left")))
    record("antipode_right", _first_failure(range(n), antipode("right")))
    return HopfReport(checks)


# ------------------------------------------------------------------ duals


def dual(H, prefix="*"):
    """The dual Hopf algebra on the dual basis."""
    n = H.dim
    mul = [[{} for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for (j, k), c in H.comul[i].items():
            mul[j][k][i] = c
    comul = [{} for _ in range(n)]
    for i in range(n):
        for j in range(n):
            for k, c in H.mul[i][j].items():
                comul[k][(i, j)] = c
    antipode = [{} for _ in range(n)]
    for i in range(n):
        for j, c in H.antipode[i].items():
            antipode[j][i] = c
    unit = {i: c for i, c in enumerate(H.counit) if c}
    counit = [H.unit.get(i, 0) * H.field.one for i in range(n)]
    basis = [lab[len(prefix):] if lab.startswith(prefix) else prefix + lab for lab in H.basis]
    return HopfAlgebraData("dual(%s)" % H.name, H.field, basis, mul, unit, comul, counit, antipode)


def coradical_dim(H):
    """Dimension of the coradical of H.

    Equals dim H*/J(H*), i.e. the rank of the trace form of the dual
    algebra (characteristic zero).
    """
    n = H.dim
    # trace of left multiplication by the dual basis vector e^c
    tau = [0] * n
    for i in range(n):
        for (c, k), v in H.comul[i].items():
            if k == i:
                tau[c] = tau[c] + v
    T = [[H.field.zero] * n for _ in range(n)]
    for i in range(n):
        if not tau[i]:
            continue
        for (a, b), v in H.comul[i].items():
            T[a][b] = T[a][b] + v * tau[i]
    return rank(T, n)


# ------------------------------------------------------------- group-likes


@dataclass
class GroupLikes:
    vectors: list
    group: FiniteGroup
    basis_indices: list
    pointed: bool
    coradical_dim: int

    @property
    def ell(self):
        return len(self.vectors)

    def to_json(self, H):
        return {
            "grouplikes": [H.label_of(v) for v in self.vectors],
            "ell": self.ell,
            "pointed": self.pointed,
            "coradical_dim": self.coradical_dim,
        }


def _is_grouplike(H, g):
    if H.eps(g) != 1:
        return False
    gg = {(a, b): c * d for a, c in g.items() for b, d in g.items()}
    return H.coproduct(g) == clean(gg)


def grouplike_certify(H, require_pointed=True):
    """Certify the declared group-likes and compare with the coradical.

    Raises ``NotGrouplike`` for a declared element that is not group-like
    and ``UndeclaredCoradical`` when the coradical is strictly larger than
    the span of the declared group-likes (when ``require_pointed``).
    """
    declared = H.grouplikes
    if declared is None:
        declared = []
    vectors = []
    for g in declared:
        if not _is_grouplike(H, g):
            raise NotGrouplike("declared element %s is not group-like" % H.label_of(g), H.label_of(g))
        if g in vectors:
            raise NotGrouplike("group-like %s declared twice" % H.label_of(g), H.label_of(g))
        vectors.append(g)
    if not vectors:
        raise NotGrouplike("no group-likes declared", None)
    ell = len(vectors)
    table = []
    for a in vectors:
        row = []
        for b in vectors:
            ab = H.multiply(a, b)
            if ab not in vectors:
                raise NotGrouplike("declared group-likes not closed under product", H.label_of(ab))
            row.append(vectors.index(ab))
        table.append(row)
    for a in vectors:
        if H.S(a) not in vectors:
            raise NotGrouplike("declared group-likes not closed under inverse", H.label_of(a))
    labels = [H.label_of(v) for v in vectors]
    group = FiniteGroup(labels, table, name="G(%s)" % H.name)
    cd = coradical_dim(H)
    pointed = cd == ell
    if require_pointed and cd > ell:
        raise UndeclaredCoradical(
            "coradical has dimension %d but only %d group-likes are declared" % (cd, ell), cd, ell
        )
    idx = []
    for v in vectors:
        if len(v) == 1 and next(iter(v.values())) == 1:
            idx.append(next(iter(v)))
        else:
            idx.append(None)
    return GroupLikes(vectors, group, idx, pointed, cd)


def skew_primitives(H, g, h):
    """Basis of {x : Delta(x) = g (x) x + x (x) h} for group-likes g, h."""
    n = H.dim
    keys = {}
    cols = []  # column i: Delta(e_i) - g (x) e_i - e_i (x) h
    for i in range(n):
        col = dict(H.comul[i])
        for a, c in g.items():
            _acc(col, (a, i), -c)
        for b, c in h.items():
            _acc(col, (i, b), -c)
        cols.append(col)
        for key in col:
            keys.setdefault(key, len(keys))
    zero = H.field.zero
    M = [[zero] * n for _ in keys]
    for i, col in enumerate(cols):
        for key, c in col.items():
            M[keys[key]][i] = c
    _, kernel = rref_and_kernel(M, n, zero, H.field.one)
    return [clean({i: v for i, v in enumerate(vec)}) for vec in kernel]


# ----------------------------------------------------------------- H_ab


class QuotientHopf:
    """A quotient Hopf algebra H/I with projection q.

    ``section[j]`` is the basis index of H whose class is basis vector j of
    the quotient; ``projection[i]`` is q(e_i) in quotient coordinates.
    """

    def __init__(self, H, quotient, projection, section, ideal_basis):
        self.H = H
        self.quotient = quotient
        self.projection = projection
        self.section = section
        self.ideal_basis = ideal_basis

    def q(self, x):
        out = {}
        for i, a in x.items():
            for j, c in self.projection[i].items():
                _acc(out, j, a * c)
        return out

    @property
    def dim(self):
        return self.quotient.dim


def _reduce_against(rows, pivots, v):
    # rows in RREF with pivot columns `pivots`
    v = list(v)
    for row, p in zip(rows, pivots):
        c = v[p]
        if c:
            v = [a - c * b for a, b in zip(v, row)]
    return v


def _span_closure(H, gens):
    n = H.dim
    zero = H.field.zero
    dense = lambda x: [x.get(i, zero) for i in range(n)]
    rows, pivots = rref([dense(x) for x in gens], n) if gens else ([], [])
    rows = rows[: len(pivots)]
    frontier = [dict((i, c) for i, c in enumerate(r) if c) for r in rows]
    while frontier:
        new = []
        for x in frontier:
            for k in range(n):
                for y in (H.multiply({k: 1}, x), H.multiply(x, {k: 1})):
                    red = _reduce_against(rows, pivots, dense(y))
                    if any(red):
                        rows, pivots = rref(rows + [red], n)
                        rows = rows[: len(pivots)]
                        new.append(clean({i: c for i, c in enumerate(red)}))
        frontier = new
    return rows, pivots


def hab_quotient(H):
    """Largest commutative quotient H/I, I generated by all commutators."""
    n = H.dim
    zero = H.field.zero
    comms = []
    for i in range(n):
        for j in range(i + 1, n):
            c = vadd(H.mul[i][j], H.mul[j][i], -1)
            if c:
                comms.append(c)
    rows, pivots = _span_closure(H, comms)
    pivset = set(pivots)
    section = [c for c in range(n) if c not in pivset]
    pos = {c: j for j, c in enumerate(section)}

    def proj_dense(v):
        red = _reduce_against(rows, pivots, v)
        return clean({pos[c]: red[c] for c in section})

    def proj(x):
        return proj_dense([x.get(i, zero) for i in range(n)])

    projection = [proj({i: 1}) for i in range(n)]

    def q(x):
        out = {}
        for i, a in x.items():
            for j, c in projection[i].items():
                _acc(out, j, a * c)
        return out

    ideal = [clean({i: c for i, c in enumerate(r)}) for r in rows]
    for x in ideal:
        if H.eps(x):
            raise ClosureFailure("counit does not vanish on the commutator ideal")
        if q(H.S(x)):
            raise ClosureFailure("antipode does not preserve the commutator ideal")
        dx = H.coproduct(x)
        image = {}
        for (a, b), c in dx.items():
            for j1, v1 in projection[a].items():
                for j2, v2 in projection[b].items():
                    _acc(image, (j1, j2), c * v1 * v2)
        if image:
            raise ClosureFailure("coproduct does not preserve the commutator ideal")
    m = len(section)
    mul = [[q(H.mul[a][b]) for b in section] for a in section]
    comul = []
    for a in section:
        out = {}
        for (j, k), c in H.comul[a].items():
            for j1, v1 in projection[j].items():
                for j2, v2 in projection[k].items():
                    _acc(out, (j1, j2), c * v1 * v2)
        comul.append(out)
    antipode = [q(H.antipode[a]) for a in section]
    counit = [H.counit[a] for a in section]
    grouplikes = None
    if H.grouplikes is not None:
        grouplikes = []
        for g in H.grouplikes:
            qg = q(g)
            if qg and qg not in grouplikes:
                grouplikes.append(qg)
    Q = HopfAlgebraData(
        "%s_ab" % H.name,
        H.field,
        [H.basis[a] for a in section],
        mul,
        q(H.unit),
        comul,
        counit,
        antipode,
        grouplikes,
    )
    return QuotientHopf(H, Q, projection, section, ideal)


@dataclass
class HabInfo:
    ok: bool
    Gbar: FiniteGroup = None
    qbar: list = None
    images: list = None
    witness: object = None


def hab_is_group_algebra(QH, grouplikes):
    """Whether H_ab is the group algebra of the image of G(H).

    ``grouplikes`` is the certified :class:`GroupLikes` of H. Returns the
    image group Gbar and the surjection G(H) -> Gbar (as an index list).
    """
    Q = QH.quotient
    images, qbar = [], []
    for g in grouplikes.vectors:
        qg = QH.q(g)
        if not _is_grouplike(Q, qg):
            return HabInfo(False, witness="image of %s is not group-like" % QH.H.label_of(g))
        if qg not in images:
            images.append(qg)
        qbar.append(images.index(qg))
    zero = Q.field.zero
    dense = [[v.get(i, zero) for i in range(Q.dim)] for v in images]
    if len(images) != Q.dim or rank(dense, Q.dim) != Q.dim:
        return HabInfo(False, witness="group-like images span %d of %d dimensions" % (rank(dense, Q.dim) if dense else 0, Q.dim))
    G = grouplikes.group
    reps = []
    for k in range(len(images)):
        reps.append(qbar.index(k))
    table = [[qbar[G.mul(a, b)] for b in reps] for a in reps]
    labels = [G.elements[r] for r in reps]
    Gbar = FiniteGroup(labels, table, name="Gbar(%s)" % QH.H.name)
    return HabInfo(True, Gbar, qbar, images)


# ---------------------------------------------------------- basis changes


def change_basis(H, new_basis, labels, name=None):
    """Re-express H in the basis whose vectors (old coordinates) are ``new_basis``."""
    n = H.dim
    zero, one = H.field.zero, H.field.one
    P = [[new_basis[j].get(i, zero) for j in range(n)] for i in range(n)]
    # inverse: solve P x = e_i
    cols = []
    for i in range(n):
        x = solve(P, [one if k == i else zero for k in range(n)], n)
        if x is None:
            raise ValueError("new basis is not invertible")
        cols.append(x)
    Pinv = [[cols[j][i] for j in range(n)] for i in range(n)]

    def to_new(x):
        out = {}
        for i, a in x.items():
            for j in range(n):
                c = Pinv[j][i]
                if c:
                    _acc(out, j, a * c)
        return out

    mul = [[to_new(H.multiply(new_basis[a], new_basis[b])) for b in range(n)] for a in range(n)]
    comul = []
    for a in range(n):
        old = H.coproduct(new_basis[a])
        out = {}
        for (i, j), c in old.items():
            for p in range(n):
                cp = Pinv[p][i]
                if not cp:
                    continue
                for r in range(n):
                    cr = Pinv[r][j]
                    if cr:
                        _acc(out, (p, r), c * cp * cr)
        comul.append(out)
    antipode = [to_new(H.S(new_basis[a])) for a in range(n)]
    counit = [H.eps(new_basis[a]) for a in range(n)]
    grouplikes = None if H.grouplikes is None else [to_new(g) for g in H.grouplikes]
    return HopfAlgebraData(name or H.name, H.field, labels, mul, to_new(H.unit), comul, counit, antipode, grouplikes)


def derive_group_part(H, grouplike_indices):
    """For each non-group basis b, the group-like g with b (x) g in Delta(b).

    Returns None when some b has no such (unique) group-like partner.
    """
    gset = set(grouplike_indices)
    out = {}
    for b in range(H.dim):
        if b in gset:
            continue
        partners = [k for (j, k), c in H.comul[b].items() if j == b and k in gset and c]
        if len(partners) != 1:
            return None
        out[b] = partners[0]
    return out


# ---------------------------------------------------------------- builders


def _structure_from_words(field, basis, mul, words, gen_comul, gen_antipode, gen_counit, unit_index=0):
    """Extend coproduct, antipode and counit multiplicatively.

    ``words[i]`` writes basis element i as a product of generator names.
    """
    n = len(basis)
    one = field.one
    tmp = HopfAlgebraData("tmp", field, basis, mul, {unit_index: one}, [{}] * n, [0] * n, [{}] * n)
    comul, antipode, counit = [], [], []
    for i in range(n):
        d = {(unit_index, unit_index): one}
        s = {unit_index: one}
        e = one
        for gname in words[i]:
            d = tmp.tensor_multiply(d, gen_comul[gname])
            s = tmp.multiply(gen_antipode[gname], s)
            e = e * gen_counit[gname]
        comul.append(d)
        antipode.append(s)
        counit.append(e)
    return comul, antipode, counit


def group_algebra(G):
    n = G.order
    one = Fraction(1)
    mul = [[{G.mul(i, j): one} for j in range(n)] for i in range(n)]
    comul = [{(i, i): one} for i in range(n)]
    antipode = [{G.inv(i): one} for i in range(n)]
    grouplikes = [{i: one} for i in range(n)]
    return HopfAlgebraData(
        "k[%s]" % G.name, CyclotomicField(1), G.elements, mul, {G.identity: one}, comul, [one] * n, antipode, grouplikes, {}
    )


def _exponent(A):
    from math import lcm

    e = 1
    for a in range(A.order):
        e = lcm(e, A.element_order(a))
    return e


def functions_on_group(G, cyclotomic_order=None):
    """The dual Hopf algebra O(G) on the basis of point indicators e_g.

    The declared group-likes are the linear characters of G, written in
    the e_g basis; the field contains the roots of unity they need.
    """
    n = G.order
    Gab, proj = abelianization(G)
    N = cyclotomic_order or _exponent(Gab)
    F = CyclotomicField(N)
    one, zero = F.one, F.zero
    mul = [[{i: one} if i == j else {} for j in range(n)] for i in range(n)]
    unit = {i: one for i in range(n)}
    comul = []
    for g in range(n):
        comul.append({(G.mul(g, G.inv(h)), h): one for h in range(n)})
    antipode = [{G.inv(g): one} for g in range(n)]
    counit = [one if g == G.identity else zero for g in range(n)]
    dec = primary_decompose(Gab)
    orders = dec.primary_orders
    grouplikes = []
    from itertools import product as iproduct

    for ms in iproduct(*[range(o) for o in orders]):
        chi = {}
        for g in range(n):
            f = dec.coordinates[proj[g]]
            power = sum(m * fi * (N // o) for m, fi, o in zip(ms, f, orders))
            chi[g] = F.zeta(power % N)
        grouplikes.append(chi)
    labels = ["e_%s" % lab for lab in G.elements]
    return HopfAlgebraData("O(%s)" % G.name, F, labels, mul, unit, comul, counit, antipode, grouplikes)


def _taft_like(n, F, zeta, name, labels_fn):
    """Algebra on g^i x^j (index j*n + i) with x g = zeta g x, g^n = 1, x^n = 0."""
    one = F.one
    dim = n * n
    idx = lambda i, j: j * n + i
    mul = [[{} for _ in range(dim)] for _ in range(dim)]
    for j in range(n):
        for i in range(n):
            for l in range(n):
                for k in range(n):
                    if j + l < n:
                        mul[idx(i, j)][idx(k, l)] = {idx((i + k) % n, j + l): zeta ** (j * k) if j * k else one}
    words = [["g"] * i + ["x"] * j for j in range(n) for i in range(n)]
    return mul, words, idx, [labels_fn(i, j) for j in range(n) for i in range(n)]


def _gx_label(i, j):
    g = "" if i == 0 else ("g" if i == 1 else "g^%d" % i)
    x = "" if j == 0 else ("x" if j == 1 else "x^%d" % j)
    return (g + x) or "1"


def taft(n):
    """Taft algebra T_n: basis g^i x^j, Delta(x) = x (x) 1 + g (x) x."""
    if n < 2:
        raise ValueError("taft(n) needs n >= 2")
    F = CyclotomicField(n)
    zeta = F.zeta(1)
    one, zero = F.one, F.zero
    mul, words, idx, labels = _taft_like(n, F, zeta, "taft", _gx_label)
    g, x, e = idx(1, 0), idx(0, 1), idx(0, 0)
    ginv = idx(n - 1, 0)
    gen_comul = {"g": {(g, g): one}, "x": {(x, e): one, (g, x): one}}
    gen_antipode = {"g": {ginv: one}, "x": {idx(n - 1, 1): -one}}
    gen_counit = {"g": one, "x": zero}
    comul, antipode, counit = _structure_from_words(F, labels, mul, words, gen_comul, gen_antipode, gen_counit, e)
    grouplikes = [{idx(i, 0): one} for i in range(n)]
    group_part = {idx(i, j): idx(i, 0) for j in range(1, n) for i in range(n)}
    return HopfAlgebraData("taft(%d)" % n, F, labels, mul, {e: one}, comul, counit, antipode, grouplikes, group_part)


def sweedler():
    """Sweedler's 4-dimensional algebra on {1, g, v, gv}.

    g^2 = 1, v^2 = 0, gv = -vg, Delta(g) = g (x) g, Delta(v) = 1 (x) v + v (x) g.
    """
    F = CyclotomicField(1)
    one, zero = F.one, F.zero
    # index: 1 -> (0,0), g -> (1,0), v -> (0,1), gv -> (1,1); element g^a v^b
    pos = {(0, 0): 0, (1, 0): 1, (0, 1): 2, (1, 1): 3}
    mul = [[{} for _ in range(4)] for _ in range(4)]
    for (a, b), i in pos.items():
        for (c, d), j in pos.items():
            if b + d < 2:
                mul[i][j] = {pos[((a + c) % 2, b + d)]: one * (-1) ** (b * c)}
    words = [[], ["g"], ["v"], ["g", "v"]]
    gen_comul = {"g": {(1, 1): one}, "v": {(0, 2): one, (2, 1): one}}
    gen_antipode = {"g": {1: one}, "v": {3: one}}
    gen_counit = {"g": one, "v": zero}
    labels = ["1", "g", "v", "gv"]
    comul, antipode, counit = _structure_from_words(F, labels, mul, words, gen_comul, gen_antipode, gen_counit, 0)
    return HopfAlgebraData(
        "sweedler", F, labels, mul, {0: one}, comul, counit, antipode, [{0: one}, {1: one}], {2: 1, 3: 0}
    )


def uqbar_sl2(e):
    """Small quantum group on E^a F^b K^c (0 <= a, b, c < e).

    KE = q^2 EK, KF = q^-2 FK, EF - FE = (K - K^-1)/(q - q^-1),
    E^e = F^e = 0, K^e = 1, with q^2 a primitive e-th root of unity
    (q = zeta_e^((e+1)/2) for odd e, q = zeta_2e for even e).
    """
    if e < 2:
        raise ValueError("uqbar_sl2(e) needs e >= 2")
    if e % 2:
        F = CyclotomicField(e)
        q = F.zeta((e + 1) // 2)
    else:
        F = CyclotomicField(2 * e)
        q = F.zeta(1)
    one, zero = F.one, F.zero
    qinv = 1 / q
    q2, q2inv = q * q, qinv * qinv
    hden = 1 / (q - qinv)
    dim = e ** 3
    idx = lambda a, b, c: (a * e + b) * e + c

    # right multiplication of a normal-form dict {(a, b, c): coef} by a generator
    def times_K(x):
        return {(a, b, (c + 1) % e): v for (a, b, c), v in x.items()}

    def times_F(x):
        out = {}
        for (a, b, c), v in x.items():
            if b + 1 < e:
                _acc(out, (a, b + 1, c), v * q2inv ** c)
        return out

    memo = {}

    def EF_E(a, b):
        # E^a F^b E in normal form
        key = (a, b)
        if key in memo:
            return memo[key]
        if b == 0:
            out = {(a + 1, 0, 0): one} if a + 1 < e else {}
        else:
            # E^a F^(b-1) (E F - h), h = (K - K^-1)/(q - q^-1)
            out = times_F(EF_E(a, b - 1))
            _acc(out, (a, b - 1, 1), -hden)
            _acc(out, (a, b - 1, e - 1), hden)
        memo[key] = out
        return out

    def times_E(x):
        out = {}
        for (a, b, c), v in x.items():
            scale = v * q2 ** c
            for (a2, b2, c2), w in EF_E(a, b).items():
                _acc(out, (a2, b2, (c2 + c) % e), scale * w)
        return out

    basis = [(a, b, c) for a in range(e) for b in range(e) for c in range(e)]
    mul = [[None] * dim for _ in range(dim)]
    for i, x in enumerate(basis):
        for j, (a, b, c) in enumerate(basis):
            y = {x: one}
            for _ in range(a):
                y = times_E(y)
            for _ in range(b):
                y = times_F(y)
            for _ in range(c):
                y = times_K(y)
            mul[i][j] = {idx(*k): v for k, v in y.items()}

    def lab(a, b, c):
        parts = []
        for sym, k in (("E", a), ("F", b), ("K", c)):
            if k == 1:
                parts.append(sym)
            elif k:
                parts.append("%s^%d" % (sym, k))
        return "".join(parts) or "1"

    labels = [lab(*x) for x in basis]
    words = [["E"] * a + ["F"] * b + ["K"] * c for (a, b, c) in basis]
    E_, F_, K_, one_i = idx(1, 0, 0), idx(0, 1, 0), idx(0, 0, 1), idx(0, 0, 0)
    Kinv = idx(0, 0, e - 1)
    gen_comul = {
        "E": {(one_i, E_): one, (E_, K_): one},
        "F": {(Kinv, F_): one, (F_, one_i): one},
        "K": {(K_, K_): one},
    }
    tmp = HopfAlgebraData("tmp", F, labels, mul, {one_i: one}, [{}] * dim, [0] * dim, [{}] * dim)
    gen_antipode = {
        "E": vscale(tmp.multiply({E_: one}, {Kinv: one}), -one),
        "F": vscale(tmp.multiply({K_: one}, {F_: one}), -one),
        "K": {Kinv: one},
    }
    gen_counit = {"E": zero, "F": zero, "K": one}
    comul, antipode, counit = _structure_from_words(F, labels, mul, words, gen_comul, gen_antipode, gen_counit, one_i)
    grouplikes = [{idx(0, 0, c): one} for c in range(e)]
    group_part = {idx(a, b, c): idx(0, 0, (a + c) % e) for (a, b, c) in basis if a or b}
    return HopfAlgebraData(
        "uqbar_sl2(%d)" % e, F, labels, mul, {one_i: one}, comul, counit, antipode, grouplikes, group_part
    )

"""Exact linear algebra.

Field matrices are lists of rows whose entries are Fractions or
:class:`~hopfbase.scalars.Cyc` values; nothing here needs to know which.
Integer matrices are lists of rows of Python ints and get Smith and Hermite
normal forms with unimodular transforms.
"""

from __future__ import annotations

from fractions import Fraction

__all__ = [
    "rref",
    "rref_and_kernel",
    "rank",
    "solve",
    "det",
    "identity",
    "mat_mul",
    "transpose",
    "smith_normal_form",
    "hnf",
    "hermite_kernel",
    "kernel_mod",
    "int_det",
    "same_lattice",
]


def identity(n, one=1, zero=0):
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def transpose(M, ncols=None):
    if not M:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*M)]


def mat_mul(A, B):
    if not A:
        return []
    inner = len(B)
    ncols = len(B[0]) if B else 0
    out = []
    for row in A:
        new = [0] * ncols
        for k in range(inner):
            a = row[k]
            if a:
                bk = B[k]
                for j in range(ncols):
                    if bk[j]:
                        new[j] = new[j] + a * bk[j]
        out.append(new)
    return out


# ---------------------------------------------------------------- fields


def rref(M, ncols=None):
    """Reduced row echelon form; returns ``(R, pivot_columns)``."""
    R = [list(row) for row in M]
    if ncols is None:
        ncols = len(R[0]) if R else 0
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(R):
            break
        p = next((i for i in range(r, len(R)) if R[i][c]), None)
        if p is None:
            continue
        R[r], R[p] = R[p], R[r]
        piv = R[r][c]
        if piv != 1:
            inv = 1 / piv if not isinstance(piv, int) else Fraction(1, piv)
            R[r] = [x * inv if x else x for x in R[r]]
        row_r = R[r]
        for i in range(len(R)):
            if i != r:
                f = R[i][c]
                if f:
                    row_i = R[i]
                    R[i] = [a - f * b if b else a for a, b in zip(row_i, row_r)]
        pivots.append(c)
        r += 1
    return R, pivots


def rank(M, ncols=None):
    return len(rref(M, ncols)[1])


def rref_and_kernel(M, ncols=None, zero=0, one=1):
    """RREF of ``M`` and a basis of its right null space.

    Kernel vectors have a 1 in one free column and are zero in the others.
    """
    if ncols is None:
        ncols = len(M[0]) if M else 0
    R, pivots = rref(M, ncols)
    free = [c for c in range(ncols) if c not in set(pivots)]
    kernel = []
    for f in free:
        v = [zero] * ncols
        v[f] = one
        for i, p in enumerate(pivots):
            x = R[i][f]
            if x:
                v[p] = -x
        kernel.append(v)
    R = [row for row in R[: len(pivots)]] + [row for row in R[len(pivots):]]
    return R, kernel


def solve(M, b, ncols=None):
    """One solution ``x`` of ``M x = b`` or ``None`` when inconsistent."""
    if ncols is None:
        ncols = len(M[0]) if M else 0
    aug = [list(row) + [bi] for row, bi in zip(M, b)]
    R, pivots = rref(aug, ncols + 1)
    if ncols in pivots:
        return None
    x = [0] * ncols
    for i, p in enumerate(pivots):
        x[p] = R[i][ncols]
    return x


def det(M):
    """Determinant over a field by Gaussian elimination."""
    n = len(M)
    A = [list(row) for row in M]
    result = 1
    for c in range(n):
        p = next((i for i in range(c, n) if A[i][c]), None)
        if p is None:
            return 0 * result
        if p != c:
            A[c], A[p] = A[p], A[c]
            result = -result
        piv = A[c][c]
        result = result * piv
        for i in range(c + 1, n):
            f = A[i][c]
            if f:
                f = f / piv
                A[i] = [a - f * b for a, b in zip(A[i], A[c])]
    return result


# -------------------------------------------------------------- integers


def _xgcd(a, b):
    """(g, x, y) with a*x + b*y = g >= 0."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def smith_normal_form(M, nrows=None, ncols=None):
    """Smith normal form ``U M V = D`` with unimodular ``U`` and ``V``.

    Pivoting takes the entry of smallest absolute value in the remaining
    block. Diagonal entries are non-negative with d_1 | d_2 | ...
    """
    m = len(M) if nrows is None else nrows
    n = (len(M[0]) if M else 0) if ncols is None else ncols
    D = [list(row) for row in M]
    U = identity(m)
    V = identity(n)

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in D:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, f):
        D[dst] = [a + f * b for a, b in zip(D[dst], D[src])]
        U[dst] = [a + f * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, f):
        for row in D:
            row[dst] += f * row[src]
        for row in V:
            row[dst] += f * row[src]

    for t in range(min(m, n)):
        while True:
            best = None
            for i in range(t, m):
                for j in range(t, n):
                    if D[i][j] and (best is None or abs(D[i][j]) < abs(D[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                break
            swap_rows(t, best[0])
            swap_cols(t, best[1])
            piv = D[t][t]
            clean = True
            for i in range(t + 1, m):
                if D[i][t]:
                    add_row(i, t, -(D[i][t] // piv))
                    if D[i][t]:
                        clean = False
            for j in range(t + 1, n):
                if D[t][j]:
                    add_col(j, t, -(D[t][j] // piv))
                    if D[t][j]:
                        clean = False
            if not clean:
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if D[i][j] % piv),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if t < m and t < n and D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            U[t] = [-x for x in U[t]]
    return U, D, V


def hnf(rows, ncols=None):
    """Row-style Hermite normal form of the lattice spanned by ``rows``.

    Returns the nonzero rows: echelon form, positive pivots, entries above
    each pivot reduced into [0, pivot).
    """
    A = [list(r) for r in rows]
    if ncols is None:
        ncols = len(A[0]) if A else 0
    r = 0
    pivots = []
    for c in range(ncols):
        # gcd-combine the column into row r
        for i in range(r + 1, len(A)):
            if A[i][c]:
                a, b = A[r][c], A[i][c]
                g, x, y = _xgcd(a, b)
                ra, rb = A[r], A[i]
                A[r] = [x * p + y * q for p, q in zip(ra, rb)]
                A[i] = [(a // g) * q - (b // g) * p for p, q in zip(ra, rb)]
        if r < len(A) and A[r][c]:
            if A[r][c] < 0:
                A[r] = [-x for x in A[r]]
            pivots.append(c)
            r += 1
        if r == len(A):
            break
    A = A[:r]
    for i, c in enumerate(pivots):
        piv = A[i][c]
        for k in range(i):
            f = A[k][c] // piv
            if f:
                A[k] = [p - f * q for p, q in zip(A[k], A[i])]
    return A


def _integer_kernel_rows(M, ncols):
    m = len(M)
    # [M^T | I] row reduced; zero-left rows carry kernel vectors
    aug = [[M[i][j] for i in range(m)] + [1 if k == j else 0 for k in range(ncols)] for j in range(ncols)]
    if m == 0:
        return [row[m:] for row in aug]
    r = 0
    for c in range(m):
        for i in range(r + 1, ncols):
            if aug[i][c]:
                a, b = aug[r][c], aug[i][c]
                g, x, y = _xgcd(a, b)
                ra, rb = aug[r], aug[i]
                aug[r] = [x * p + y * q for p, q in zip(ra, rb)]
                aug[i] = [(a // g) * q - (b // g) * p for p, q in zip(ra, rb)]
        if r < ncols and aug[r][c]:
            r += 1
        if r == ncols:
            break
    return [row[m:] for row in aug[r:]]


def hermite_kernel(M, ncols=None):
    """Basis of ``{v in Z^cols : M v = 0}`` as a list of column vectors.

    The basis is returned Hermite-reduced (row HNF of the basis vectors).
    """
    if ncols is None:
        ncols = len(M[0]) if M else 0
    return hnf(_integer_kernel_rows(M, ncols), ncols)


def kernel_mod(M, moduli, ncols=None):
    """Basis of ``{v in Z^cols : (M v)_i = 0 mod moduli[i]}``.

    Implemented by augmenting ``M`` with one modulus column per row.
    """
    if ncols is None:
        ncols = len(M[0]) if M else 0
    k = len(M)
    aug = [list(M[i]) + [moduli[i] if j == i else 0 for j in range(k)] for i in range(k)]
    rows = _integer_kernel_rows(aug, ncols + k)
    return hnf([row[:ncols] for row in rows], ncols)


def int_det(M):
    """Integer determinant by fraction-free (Bareiss) elimination."""
    n = len(M)
    if n == 0:
        return 1
    A = [list(r) for r in M]
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            p = next((i for i in range(k + 1, n) if A[i][k]), None)
            if p is None:
                return 0
            A[k], A[p] = A[p], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[k][k] * A[i][j] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def same_lattice(A, B, ncols=None):
    """Whether the integer vectors ``A`` and ``B`` span the same lattice."""
    if ncols is None:
        ncols = len((A or B)[0]) if (A or B) else 0
    return hnf(A, ncols) == hnf(B, ncols)

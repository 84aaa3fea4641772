from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from hopfbase.linalg import (
    det,
    hermite_kernel,
    hnf,
    int_det,
    kernel_mod,
    mat_mul,
    rank,
    rref_and_kernel,
    same_lattice,
    smith_normal_form,
    solve,
)

small = st.integers(min_value=-6, max_value=6)


def matrices(rows, cols):
    return st.lists(st.lists(small, min_size=cols, max_size=cols), min_size=rows, max_size=rows)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4).flatmap(lambda m: st.integers(1, 4).flatmap(lambda n: matrices(m, n))))
def test_smith_normal_form(M):
    U, D, V = smith_normal_form(M)
    assert mat_mul(mat_mul(U, M), V) == D
    assert abs(int_det(U)) == 1 and abs(int_det(V)) == 1
    diag = [D[i][i] for i in range(min(len(D), len(D[0])))]
    assert all(d >= 0 for d in diag)
    for a, b in zip(diag, diag[1:]):
        assert (b == 0) if a == 0 else (b % a == 0)
    assert all(D[i][j] == 0 for i in range(len(D)) for j in range(len(D[0])) if i != j)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: matrices(n, n)))
def test_determinants_agree(M):
    F = [[Fraction(x) for x in row] for row in M]
    assert det(F) == int_det(M)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 3).flatmap(lambda m: st.integers(1, 4).flatmap(lambda n: matrices(m, n))))
def test_kernels(M):
    n = len(M[0])
    _, K = rref_and_kernel([[Fraction(x) for x in row] for row in M], n, Fraction(0), Fraction(1))
    assert len(K) == n - rank([[Fraction(x) for x in row] for row in M], n)
    for v in K:
        assert all(sum(a * b for a, b in zip(row, v)) == 0 for row in M)
    L = hermite_kernel(M, n)
    assert len(L) == len(K)
    for v in L:
        assert all(sum(a * b for a, b in zip(row, v)) == 0 for row in M)


def test_hermite_kernel_is_saturated():
    # 2x = 0 over Z has only the zero solution; x - 2y = 0 is spanned by (2, 1)
    assert hermite_kernel([[2]], 1) == []
    assert same_lattice(hermite_kernel([[1, -2]], 2), [[2, 1]])


def test_kernel_mod():
    L = kernel_mod([[1, 1]], [3], 2)
    assert same_lattice(L, [[1, 2], [0, 3]])


def test_hnf_canonical():
    assert hnf([[2, 4], [1, 1]], 2) == hnf([[1, 1], [0, 2]], 2)


def test_solve():
    M = [[Fraction(2), Fraction(1)], [Fraction(1), Fraction(3)]]
    x = solve(M, [Fraction(3), Fraction(4)], 2)
    assert x == [Fraction(1), Fraction(1)]
    assert solve([[Fraction(1), Fraction(1)], [Fraction(1), Fraction(1)]], [Fraction(1), Fraction(2)], 2) is None

from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from latnrd import exact

small = st.integers(-6, 6)
fracs = st.builds(Fraction, st.integers(-9, 9), st.integers(1, 5))


def matrices(elements, max_rows=5, max_cols=5):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(elements, min_size=c, max_size=c), min_size=r, max_size=r)))


def square(elements, max_n=5):
    return st.integers(1, max_n).flatmap(
        lambda n: st.lists(st.lists(elements, min_size=n, max_size=n), min_size=n, max_size=n))


def leibniz_det(m):
    n = len(m)
    total = Fraction(0)
    for p in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])
        term = Fraction(-1 if inv % 2 else 1)
        for i in range(n):
            term *= m[i][p[i]]
        total += term
    return total


@given(square(fracs))
def test_det_matches_leibniz(m):
    assert exact.det(m) == leibniz_det(m)


@given(matrices(fracs))
def test_rank_matches_rref(m):
    _, pivots = exact.rref(m)
    assert exact.rank(m) == len(pivots)


@given(matrices(small))
def test_kernel_basis_is_a_basis(m):
    ncols = len(m[0])
    k = exact.kernel_basis(m, ncols)
    assert len(k) == ncols - exact.rank(m)
    for v in k:
        assert all(x == int(x) for x in v)
        assert all(exact.dot(r, v) == 0 for r in m)
    if k:
        assert exact.rank(k) == len(k)


def test_kernel_basis_is_canonical():
    # two different row sets for the same row space give the same kernel
    a = [[1, 2, 3, 4], [0, 1, 1, 1]]
    b = [[1, 3, 4, 5], [2, 5, 7, 9]]
    assert exact.kernel_basis(a, 4) == exact.kernel_basis(b, 4)


@given(square(small, 4))
def test_inverse(m):
    if exact.det(m) == 0:
        with pytest.raises(ZeroDivisionError):
            exact.inverse(m)
        return
    inv = exact.inverse(m)
    n = len(m)
    assert exact.matmul(m, inv) == [[int(i == j) for j in range(n)] for i in range(n)]


@given(square(small, 5))
def test_bareiss_schur_minors(b):
    # b^T b + I is positive definite
    n = len(b)
    g = [[exact.dot([r[i] for r in b], [r[j] for r in b]) + (i == j) for j in range(n)]
         for i in range(n)]
    dets, rows = exact.bareiss_schur(g)
    assert dets[0] == 1
    for k in range(1, n + 1):
        assert dets[k] == exact.det([r[:k] for r in g[:k]])
        assert rows[k - 1][k - 1] == dets[k]


def test_bareiss_rejects_indefinite():
    with pytest.raises(ValueError):
        exact.bareiss_schur([[1, 2], [2, 1]])


def test_as_fraction_forms():
    assert exact.as_fraction("3/6") == Fraction(1, 2)
    assert exact.as_fraction([3, 6]) == Fraction(1, 2)
    assert exact.as_fraction(4) == 4
    with pytest.raises(TypeError):
        exact.as_fraction(0.5)
    with pytest.raises(TypeError):
        exact.as_fraction(True)


def test_primitive_and_integer_row():
    assert exact.primitive([4, -6, 0]) == (2, -3, 0)
    assert exact.primitive([0, 0]) == (0, 0)
    assert exact.integer_row([Fraction(1, 2), Fraction(-1, 3)]) == (3, -2)


def test_same_span():
    assert exact.same_span([[1, 0, 1], [0, 1, 1]], [[1, 1, 2], [1, -1, 0]])
    assert not exact.same_span([[1, 0, 0]], [[0, 1, 0]])

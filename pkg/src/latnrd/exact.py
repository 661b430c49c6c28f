"""Exact linear algebra over the integers and the rationals.

Everything here works on plain Python lists of ``int`` or ``Fraction``;
nothing is ever converted to floating point.
"""

from fractions import Fraction
from functools import reduce
from math import gcd, lcm


def as_fraction(x):
    """Coerce ints, Fractions and ``"a/b"`` strings to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, (int, str)):
        return Fraction(x)
    if isinstance(x, (list, tuple)) and len(x) == 2:
        return Fraction(int(x[0]), int(x[1]))
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def primitive(vec):
    """Divide an integer vector by the gcd of its entries."""
    g = reduce(gcd, vec, 0)
    if g in (0, 1):
        return tuple(vec)
    return tuple(v // g for v in vec)


def integer_row(row):
    """Scale a rational row by the lcm of its denominators (direction kept)."""
    row = [as_fraction(x) for x in row]
    m = reduce(lcm, (x.denominator for x in row), 1)
    return tuple(int(x * m) for x in row)


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def det(matrix):
    """Determinant by Bareiss fraction-free elimination.

    Rational input is cleared to integers first, so every intermediate
    value is an exact integer minor.
    """
    n = len(matrix)
    if n == 0:
        return Fraction(1)
    rows = [[as_fraction(x) for x in r] for r in matrix]
    scale = Fraction(1)
    a = []
    for r in rows:
        m = reduce(lcm, (x.denominator for x in r), 1)
        scale /= m
        a.append([int(x * m) for x in r])
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (pivot * a[i][j] - a[i][k] * a[k][j]) // prev
        prev = pivot
    return sign * a[n - 1][n - 1] * scale


def rank(rows):
    """Rank of a rational or integer matrix via fraction-free elimination."""
    a = [list(integer_row(r)) for r in rows if any(r)]
    if not a:
        return 0
    ncols = len(a[0])
    r = 0
    prev = 1
    for c in range(ncols):
        piv = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        for i in range(r + 1, len(a)):
            f = a[i][c]
            if f == 0:
                row = a[i]
                for j in range(c + 1, ncols):
                    row[j] = (p * row[j]) // prev
                continue
            ai, ar = a[i], a[r]
            for j in range(c + 1, ncols):
                ai[j] = (p * ai[j] - f * ar[j]) // prev
            ai[c] = 0
        prev = p
        r += 1
        if r == len(a):
            break
    return r


def rref(rows, ncols=None):
    """Reduced row echelon form over Q.

    Returns ``(reduced_rows, pivot_columns)`` with zero rows removed.
    """
    a = [[as_fraction(x) for x in r] for r in rows]
    if ncols is None:
        ncols = len(a[0]) if a else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        if p != 1:
            a[r] = [x / p for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    return a[:r], pivots


def clear_denominators(row):
    """Multiply a rational row by the lcm of its denominators."""
    m = reduce(lcm, (x.denominator for x in row), 1)
    return tuple(int(x * m) for x in row)


def kernel_basis(rows, ncols):
    """Canonical integer basis of the right kernel ``{x : rows x = 0}``.

    The basis is put in reduced row echelon form (pivots 1) and each row is
    then cleared to integers by the lcm of its denominators.
    """
    reduced, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -reduced[r][f]
        basis.append(v)
    if not basis:
        return []
    canon, _ = rref(basis, ncols)
    return [clear_denominators(r) for r in canon]


def same_span(a, b):
    """True when two families of vectors span the same subspace."""
    ra = rank(a) if a else 0
    rb = rank(b) if b else 0
    return ra == rb == (rank(list(a) + list(b)) if (a or b) else 0)


def matmul(a, b):
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def transpose(a):
    return [list(col) for col in zip(*a)]


def inverse(matrix):
    """Exact inverse of a nonsingular rational matrix (Gauss-Jordan)."""
    n = len(matrix)
    aug = [[as_fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(matrix)]
    reduced, pivots = rref(aug, 2 * n)
    if pivots[:n] != list(range(n)) or len(reduced) < n:
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in reduced]


def bareiss_schur(gram):
    """Leading minors and fraction-free Schur rows of an integer PD matrix.

    Returns ``(dets, rows)`` where ``dets[k]`` is the k-th leading principal
    minor (``dets[0] == 1``) and ``rows[k]`` is row ``k`` of the Bareiss
    matrix after ``k`` elimination steps, so ``rows[k][k] == dets[k + 1]``
    and ``rows[k][j] / dets[k]`` are the Schur-complement couplings.
    No pivoting: positive definiteness keeps every pivot positive.
    """
    n = len(gram)
    a = [list(r) for r in gram]
    dets = [1]
    rows = []
    prev = 1
    for k in range(n):
        rows.append(tuple(a[k]))
        p = a[k][k]
        if p <= 0:
            raise ValueError("matrix is not positive definite")
        dets.append(p)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (p * a[i][j] - a[i][k] * a[k][j]) // prev
        prev = p
    return dets, rows

"""Pure-Python hot kernels.

These mirror ``_ckernels.pyx`` line for line and are used whenever the
compiled module is missing, disabled, or its int64 overflow guard fails.
All arithmetic is on Python integers.
"""

from itertools import combinations
from math import gcd


def enumerate_coset(dets, rows, parity, bound):
    """All integer x with x = parity (mod 2) and minimal x^T G x <= bound.

    ``dets``/``rows`` come from ``exact.bareiss_schur`` applied to the
    integer Gram matrix G. Enumeration runs from the last coordinate down;
    at level k the admissible x_k satisfy

        (dets[k+1] * x_k + p_k)^2 <= dets[k] * (dets[k+1] * best - w_k)

    where p_k couples x_k to the already fixed tail and w_k is dets[k+1]
    times the tail's contribution. Candidates are visited in order of
    increasing |dets[k+1] * x_k + p_k| so short vectors appear early and
    ``best`` shrinks fast. Returns ``(best, vectors)``; both signs of each
    minimal vector are present.
    """
    n = len(rows)
    x = [0] * n
    best = bound
    found = []

    def visit(k, w):
        nonlocal best, found
        dk = dets[k]
        dk1 = dets[k + 1]
        row = rows[k]
        p = 0
        for j in range(k + 1, n):
            if x[j]:
                p += row[j] * x[j]
        par = parity[k]
        # x_k = par + 2u; u_dn / u_up bracket the real minimiser of |y|
        u_dn = -(p + dk1 * par) // (2 * dk1)
        u_up = u_dn + 1
        while True:
            y_dn = dk1 * (par + 2 * u_dn) + p
            y_up = dk1 * (par + 2 * u_up) + p
            if -y_dn <= y_up:
                y, u = y_dn, u_dn
                u_dn -= 1
            else:
                y, u = y_up, u_up
                u_up += 1
            if y * y > dk * (dk1 * best - w):
                return
            x[k] = par + 2 * u
            if k == 0:
                q = (w + y * y) // dk1
                if q < best:
                    best = q
                    found = [tuple(x)]
                elif q == best:
                    found.append(tuple(x))
            else:
                visit(k - 1, (dk * w + y * y) // dk1)

    visit(n - 1, 0)
    return best, found


def _solve(a, b):
    """Fraction-free Gauss-Jordan on the square integer system a x = b.

    Returns ``(numerators, den)`` with den > 0, or None if singular.
    """
    n = len(a)
    m = [list(a[i]) + [b[i]] for i in range(n)]
    prev = 1
    for k in range(n):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    break
            else:
                return None
        pk = m[k][k]
        mk = m[k]
        for i in range(n):
            if i == k:
                continue
            mi = m[i]
            f = mi[k]
            for j in range(n + 1):
                if j != k:
                    mi[j] = (pk * mi[j] - f * mk[j]) // prev
            mi[k] = 0
        prev = pk
    den = m[0][0]
    nums = [m[i][n] for i in range(n)]
    if den < 0:
        den = -den
        nums = [-v for v in nums]
    g = den
    for v in nums:
        g = gcd(g, v)
    return tuple(v // g for v in nums), den // g


def facet_subset_vertices(a, b):
    """Vertices of {x : a x <= b} by brute force over all n-row subsets.

    ``a`` is an integer m x n matrix and ``b`` an integer vector. Each
    nonsingular n x n subsystem is solved exactly; feasible solutions are
    kept. Returns a set of ``(numerators, den)`` pairs in lowest terms.
    """
    n = len(a[0])
    out = set()
    for sub in combinations(range(len(a)), n):
        sol = _solve([a[i] for i in sub], [b[i] for i in sub])
        if sol is None:
            continue
        nums, den = sol
        if all(sum(r[j] * nums[j] for j in range(n)) <= bi * den for r, bi in zip(a, b)):
            out.add(sol)
    return out


__all__ = ["enumerate_coset", "facet_subset_vertices"]

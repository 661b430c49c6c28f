"""Brute-force cross-checks, kept independent of the main algorithms."""

from fractions import Fraction
from functools import reduce
from itertools import combinations, product
from math import lcm

from . import exact, kernels
from .core import GramMatrix, qform_eval
from .minvec import sign_canonical


def box_min_vectors(g, label, box=4):
    """Minimal vectors of a coset among integer vectors with |x_i| <= box."""
    best, found = None, set()
    ranges = [[x for x in range(-box, box + 1) if (x - b) % 2 == 0] for b in label]
    for v in product(*ranges):
        if not any(v):
            continue
        f = qform_eval(g, v)
        if best is None or f < best:
            best, found = f, {sign_canonical(v)}
        elif f == best:
            found.add(sign_canonical(v))
    return best, sorted(found)


def brute_force_rays(h):
    """Extreme rays of a pointed cone by trying every subset of inequalities.

    A ray is extreme exactly when the rows vanishing on it have rank d - 1,
    so every such ray is the one-dimensional kernel of some row subset.
    """
    d = h.dim
    eqs = [exact.integer_row(r) for r in h.equalities]
    ineqs = [exact.integer_row(r) for r in h.inequalities]
    rays = set()
    for size in range(0, d):
        for sub in combinations(ineqs, size):
            rows = eqs + list(sub)
            if (exact.rank(rows) if rows else 0) != d - 1:
                continue
            (k,) = exact.kernel_basis(rows, d)
            for r in (k, tuple(-x for x in k)):
                if h.contains(r):
                    rays.add(exact.primitive(r))
    return sorted(rays)


def _integer_halfspace(a, b):
    m = reduce(lcm, [Fraction(x).denominator for x in a] + [Fraction(b).denominator], 1)
    return [int(x * m) for x in a], int(b * m)


def polytope_vertices(rows, backend=None):
    """Vertices of {x : a . x <= b} by solving every n-subset of rows exactly."""
    ia, ib = zip(*(_integer_halfspace(a, b) for a, b, *_ in rows))
    found = kernels.facet_subset_vertices(list(ia), list(ib), backend=backend)
    return sorted(tuple(Fraction(x, den) for x in nums) for nums, den in found)


# -- root lattices from explicit coordinate vectors -----------------------

def _gram_of(vectors):
    return GramMatrix([[exact.dot(u, v) for v in vectors] for u in vectors])


def _unit(n, i, s=1):
    return [s if j == i else 0 for j in range(n)]


def a_vectors(n):
    """Simple roots e_i - e_{i+1} in Z^{n+1}."""
    return [[1 if j == i else -1 if j == i + 1 else 0 for j in range(n + 1)] for i in range(n)]


def d_vectors(n):
    vecs = [[1 if j == i else -1 if j == i + 1 else 0 for j in range(n)] for i in range(n - 1)]
    vecs.append([1 if j in (n - 2, n - 1) else 0 for j in range(n)])
    return vecs


def dstar_vectors(n):
    """e_1, ..., e_{n-1} and the glue vector (1/2, ..., 1/2), scaled by sqrt(2)."""
    return [_unit(n, i) for i in range(n - 1)] + [[Fraction(1, 2)] * n]


def e8_vectors():
    """Bourbaki simple roots of E8 in the even coordinate system."""
    h = Fraction(1, 2)
    roots = [[h, -h, -h, -h, -h, -h, -h, h], [1, 1, 0, 0, 0, 0, 0, 0]]
    for i in range(6):
        roots.append([-1 if j == i else 1 if j == i + 1 else 0 for j in range(8)])
    return roots


def coordinate_gram(family, n=None):
    """Gram matrix built from coordinate vectors, for families that have them."""
    if family == "A":
        return _gram_of(a_vectors(n))
    if family == "D":
        return _gram_of(d_vectors(n))
    if family == "Dstar":
        return _gram_of(dstar_vectors(n)).scaled(2)
    if family in ("E6", "E7", "E8"):
        return _gram_of(e8_vectors()[: int(family[1])])
    raise ValueError(f"no coordinate model for {family}")

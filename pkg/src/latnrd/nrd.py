"""Non-rigidity degree as the corank of a norm-equality system.

For every nonzero coset of 2L in L all minimal vectors have equal norm at
the input form. Each equality v^T X v = u^T X u is a linear condition on
the symmetric matrix X; the forms sharing the input's L-type satisfy all of
them. When these within-coset equalities leave more than the ray of the
form itself, the affine relations of the Delaunay polytopes at 0 are added
(see ``delaunay``); they are needed whenever some Delaunay polytope is not
a simplex but every coset is simple, as for E6*.
"""

import os
from dataclasses import dataclass, field

from . import exact
from .core import (
    SymVector,
    require_positive_definite,
    sym_coords,
    sym_dim,
    sym_pairs,
    sym_uncoords,
)
from .delaunay import EchelonBasis, delaunay_constraint_rows
from .errors import DimensionError
from .minvec import all_coset_min_vectors

CRITERIA = ("delaunay", "coset")


@dataclass(frozen=True)
class ConstraintRow:
    row: tuple
    label: tuple = None
    u: tuple = None
    v: tuple = None

    def __call__(self, g):
        return exact.dot(self.row, sym_coords(g).coeffs)


@dataclass(frozen=True)
class NrdResult:
    n: int
    nrd: int
    rank: int
    constraint_count: int
    span_basis: tuple
    criterion: str = "delaunay"
    coset_rank: int = 0
    delaunay_polytopes: int = 0
    cosets: tuple = field(default=(), repr=False, compare=False)

    @property
    def N(self):
        return sym_dim(self.n)

    def to_json(self, lattice=""):
        return {"lattice": lattice, "n": self.n, "N": self.N, "rank": self.rank,
                "nrd": self.nrd, "criterion": self.criterion,
                "span_basis": [sym_uncoords(SymVector(self.n, b)).to_json()
                               for b in self.span_basis]}


def norm_constraint(u, v, label=None):
    """Row l with l . sym_coords(X) = v^T X v - u^T X u.

    Off-diagonal slots carry the factor 2 because a_ij appears twice in
    the quadratic form.
    """
    if len(u) != len(v):
        raise DimensionError("vectors of different length")
    n = len(u)
    row = []
    for i, j in sym_pairs(n):
        c = v[i] * v[j] - u[i] * u[j]
        row.append(c if i == j else 2 * c)
    return ConstraintRow(tuple(row), label, tuple(u), tuple(v))


def constraint_rows(cosets, all_pairs=False):
    """Norm equalities within each coset.

    Default is a star: the first minimal vector against each of the others.
    ``all_pairs`` emits every pair instead; the rank is the same.
    """
    out = []
    for cs in cosets:
        vs = cs.vectors
        if all_pairs:
            pairs = [(vs[i], vs[j]) for i in range(len(vs)) for j in range(i + 1, len(vs))]
        else:
            pairs = [(vs[0], w) for w in vs[1:]]
        for u, v in pairs:
            c = norm_constraint(u, v, cs.label)
            if any(c.row):
                out.append(c)
    return out


def default_threads():
    try:
        return max(1, int(os.environ.get("LATNRD_THREADS", "1")))
    except ValueError:
        return 1


def nrd(g, all_pairs=False, threads=None, backend=None, criterion="delaunay"):
    """Non-rigidity degree of the positive definite form ``g``.

    ``criterion="coset"`` uses the within-coset equalities only;
    the default also adds Delaunay relations whenever the coset system
    leaves more than one degree of freedom.
    """
    if criterion not in CRITERIA:
        raise ValueError(f"criterion must be one of {CRITERIA}")
    require_positive_definite(g)
    if threads is None:
        threads = default_threads()
    cosets = all_coset_min_vectors(g, threads=threads, backend=backend)
    rows = constraint_rows(cosets, all_pairs=all_pairs)
    N = sym_dim(g.n)
    distinct = sorted({c.row for c in rows})
    coset_rank = exact.rank(distinct)
    r = coset_rank
    count = len(rows)
    polytopes = 0
    if criterion == "delaunay" and N - coset_rank > 1:
        basis = EchelonBasis(N)
        for row in distinct:
            basis.add(row)
        basis, polytopes, extra = delaunay_constraint_rows(g, cosets, basis, stop_rank=N - 1)
        count += extra
        distinct = [exact.clear_denominators(b) for b in basis.basis()]
        r = exact.rank(distinct)
    kernel = exact.kernel_basis(distinct, N) if distinct else exact.kernel_basis([[0] * N], N)
    if len(kernel) != N - r:
        raise AssertionError("rank and kernel dimension disagree")
    return NrdResult(g.n, N - r, r, count, tuple(kernel), criterion, coset_rank,
                     polytopes, tuple(cosets))


def ldomain_span(g, **kwargs):
    """Basis of the linear span of the L-domain closure, as symmetric matrices."""
    res = nrd(g, **kwargs)
    return [sym_uncoords(SymVector(g.n, b)) for b in res.span_basis]

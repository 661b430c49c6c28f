"""Delaunay polytopes around the origin and the norm relations they impose.

A vertex c of the Voronoi cell of 0 is the centre of a Delaunay polytope
whose vertices are the lattice points v with f(v - c) = f(c). Every such
vertex is a minimal vector of its coset of 2L, so the candidates are the
coset minima already computed for the nrd system.

A form X keeps that polytope inscribed in an X-ellipsoid only if v -> X[v]
is affine on its vertices. Since 0 is a vertex, that means
sum lambda_v X[v] = 0 for every linear dependency sum lambda_v v = 0 among
the nonzero vertices. These relations, together with the within-coset
equalities, cut out the linear span of the L-domain.
"""

from fractions import Fraction

from . import exact
from .cone import ConeHRep, double_description
from .core import sym_pairs
from .minvec import enumeration_plan


def relevant_vectors(cosets):
    """Voronoi-relevant vectors up to sign: minima of the simple cosets."""
    return [c.vectors[0] for c in cosets if len(c.vectors) == 1]


def voronoi_cell_hrep(g, cosets):
    """Homogenised H-rep of the Voronoi cell of 0 in lattice coordinates.

    Coordinates are (x, t); a vertex x of the cell is the ray (x, 1).
    Each relevant v gives 2 x^T G v <= f(v) t and its mirror image.
    The rows use the integer rescaling of G, which leaves the cell unchanged.
    """
    gram = enumeration_plan(g).gram
    n = g.n
    rows = []
    for v in relevant_vectors(cosets):
        gv = [exact.dot(gram[i], v) for i in range(n)]
        f = exact.dot(gv, v)
        for s in (1, -1):
            rows.append([2 * s * x for x in gv] + [-f])
    rows.append([0] * n + [-1])
    return ConeHRep(n + 1, (), rows)


def _voronoi_rays(g, cosets):
    rays, lin = double_description(voronoi_cell_hrep(g, cosets))
    if lin or any(r[-1] <= 0 for r in rays):
        raise AssertionError("Voronoi cell of a positive definite form is bounded")
    return sorted(rays)


def voronoi_cell_vertices(g, cosets):
    return [tuple(Fraction(x, r[-1]) for x in r[:-1]) for r in _voronoi_rays(g, cosets)]


def delaunay_star(g, cosets):
    """Nonzero vertex sets of the Delaunay polytopes that have 0 as a vertex.

    Returns ``(centre, vertices)`` pairs, one per Voronoi vertex.
    """
    gram = enumeration_plan(g).gram
    n = g.n
    cands = []
    for c in cosets:
        for v in c.vectors:
            f = exact.dot([exact.dot(gram[i], v) for i in range(n)], v)
            cands.append((v, f))
            cands.append((tuple(-x for x in v), f))
    stars = []
    for r in _voronoi_rays(g, cosets):
        t = r[-1]
        gr = [exact.dot(gram[i], r[:-1]) for i in range(n)]
        # f(v - c) = f(c)  <=>  f(v) = 2 v.G c, with c = r/t
        verts = [v for v, f in cands if f * t == 2 * exact.dot(v, gr)]
        stars.append((tuple(Fraction(x, t) for x in r[:-1]), verts))
    return stars


def _norm_row(v):
    return [v[i] * v[j] * (1 if i == j else 2) for i, j in sym_pairs(len(v))]


def affine_relations(verts):
    """Rows sum_v lambda_v * sym_row(v) for a basis of linear dependencies."""
    if len(verts) <= len(verts[0]) and exact.rank(verts) == len(verts):
        return []
    deps = exact.kernel_basis(exact.transpose(verts), len(verts))
    rows = []
    norm_rows = [_norm_row(v) for v in verts]
    for lam in deps:
        row = [0] * len(norm_rows[0])
        for coef, nr in zip(lam, norm_rows):
            if coef:
                for k, x in enumerate(nr):
                    row[k] += coef * x
        if any(row):
            rows.append(canonical_relation(row))
    return rows


def canonical_relation(row):
    row = exact.primitive(row)
    lead = next(x for x in row if x)
    return row if lead > 0 else tuple(-x for x in row)


class EchelonBasis:
    """Incrementally maintained row space over Q."""

    def __init__(self, ncols):
        self.ncols = ncols
        self.rows = {}

    @property
    def rank(self):
        return len(self.rows)

    def add(self, row):
        r = [Fraction(x) for x in row]
        for c in range(self.ncols):
            if r[c] == 0:
                continue
            piv = self.rows.get(c)
            if piv is None:
                inv = 1 / r[c]
                self.rows[c] = [x * inv for x in r]
                return True
            f = r[c]
            r = [x - f * y for x, y in zip(r, piv)]
        return False

    def basis(self):
        return [self.rows[c] for c in sorted(self.rows)]


def delaunay_constraint_rows(g, cosets, basis=None, stop_rank=None):
    """Add Delaunay affine relations to ``basis`` until it stops growing.

    Returns ``(basis, polytope_count, relation_count)``. Stops early once the
    rank reaches ``stop_rank``.
    """
    if basis is None:
        basis = EchelonBasis(len(_norm_row([0] * g.n)))
    stars = delaunay_star(g, cosets)
    count = 0
    seen = set()
    for _, verts in stars:
        if stop_rank is not None and basis.rank >= stop_rank:
            break
        for row in affine_relations(verts):
            count += 1
            if row not in seen:
                seen.add(row)
                basis.add(row)
    return basis, len(stars), count

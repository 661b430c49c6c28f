"""The lattice family L(gamma) containing D_n*, its cones and Voronoi polytope.

Indices are 0-based throughout: coordinate ``n - 1`` is the b-coordinate of
the lattice basis (e_1, ..., e_{n-1}, b) and, in the orthogonal e-basis used
for Voronoi vertices, the coordinate of e_n. Subsets are sorted tuples.
m = n // 2 for both parities.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product

from . import exact
from .cone import ConeHRep
from .core import GramMatrix, rational_to_json, sym_coords, sym_dim, sym_index
from .errors import DimensionError, GammaDomainError


@dataclass(frozen=True)
class GammaVector:
    """Half-norms gamma_i of the orthogonal vectors e_i (|e_i|^2 = 2 gamma_i)."""

    gamma: tuple

    def __post_init__(self):
        g = tuple(exact.as_fraction(x) for x in self.gamma)
        if len(g) < 2:
            raise DimensionError("gamma needs at least two entries")
        if any(x < 0 for x in g):
            raise GammaDomainError("gamma entries must be nonnegative")
        object.__setattr__(self, "gamma", g)

    @classmethod
    def parse(cls, text):
        """``"1,1,3/2"`` -> GammaVector."""
        try:
            vals = [Fraction(t.strip()) for t in text.split(",") if t.strip()]
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"cannot parse gamma {text!r}") from exc
        return cls(vals)

    @classmethod
    def ones(cls, n):
        return cls([1] * n)

    @property
    def n(self):
        return len(self.gamma)

    @property
    def m(self):
        return self.n // 2

    @property
    def alpha(self):
        return sum(self.gamma) / 2

    def gamma_of(self, S):
        return sum((self.gamma[i] for i in S), Fraction(0))

    def tight_subsets(self):
        """m-subsets S with gamma(S) = alpha."""
        a = self.alpha
        return [S for S in combinations(range(self.n), self.m) if self.gamma_of(S) == a]

    def in_closure(self):
        a = self.alpha
        return all(self.gamma_of(S) <= a for S in combinations(range(self.n), self.m))

    def is_interior(self):
        """Strictly inside G_n (only possible for odd n)."""
        a = self.alpha
        return (self.n % 2 == 1 and all(x > 0 for x in self.gamma)
                and all(self.gamma_of(S) < a for S in combinations(range(self.n), self.m)))


def _as_gamma(gv):
    return gv if isinstance(gv, GammaVector) else GammaVector(gv)


def _form_entries(gv):
    n = gv.n
    m = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n - 1):
        m[i][i] = 2 * gv.gamma[i]
        m[i][n - 1] = m[n - 1][i] = gv.gamma[i]
    m[n - 1][n - 1] = gv.alpha
    return m


def gamma_form(gv):
    """Gram matrix of L(gamma) in the basis (e_1, ..., e_{n-1}, b)."""
    gv = _as_gamma(gv)
    if any(x <= 0 for x in gv.gamma):
        raise GammaDomainError("gamma_form needs every gamma_i > 0")
    return GramMatrix(_form_entries(gv))


def embed_gamma(gv):
    """Symmetric coordinates of the form of gamma; boundary gamma (zeros) allowed."""
    gv = _as_gamma(gv)
    return sym_coords(GramMatrix(_form_entries(gv)))


# -- the cone G_n ---------------------------------------------------------

def _subset_row(n, S):
    return [1 if i in S else -1 for i in range(n)]


def gn_hrep(n):
    """Closure of G_n: gamma(S) - gamma(complement) <= 0 for every m-subset S.

    For even n those rows only cut out the line of constant gamma, so the
    rows -gamma_i <= 0 are appended to keep the closure a ray. The labels
    tell the two kinds apart.
    """
    if n < 3:
        raise DimensionError("G_n needs n >= 3")
    m = n // 2
    rows, labels = [], []
    for S in combinations(range(n), m):
        rows.append(_subset_row(n, S))
        labels.append(("subset", S))
    if n % 2 == 0:
        for i in range(n):
            rows.append([-1 if j == i else 0 for j in range(n)])
            labels.append(("nonneg", i))
    return ConeHRep(n, (), rows, tuple(labels))


def gn_ray(n, k, q):
    """gamma_q^k: ones everywhere except gamma_k = 2q."""
    return tuple(2 * q if i == k else 1 for i in range(n))


def gn_extreme_rays_closed_form(n):
    if n < 4:
        raise DimensionError("closed-form rays need n >= 4")
    if n % 2 == 0:
        return [(1,) * n]
    return sorted(gn_ray(n, k, q) for k in range(n) for q in (0, 1))


def facet_split(n, S):
    """Rays on the facet gamma(S) = alpha and the ray shared by its two subcones.

    Returns ``(zeros, ones, common)``: gamma_0^k for k outside S, gamma_1^k
    for k in S, and the ray with m + 1 on S and m off S.
    """
    m = n // 2
    zeros = [gn_ray(n, k, 0) for k in range(n) if k not in S]
    ones = [gn_ray(n, k, 1) for k in S]
    common = tuple(m + 1 if i in S else m for i in range(n))
    return zeros, ones, common


# -- the L-domain D_n in form space ---------------------------------------

def dn_ldomain_hrep(n):
    """Closure of D_n in symmetric coordinates (row-major upper triangle).

    Equalities: a_ij = 0 for i < j < n-1 and 2 a_{i,n-1} - a_ii = 0; for even
    n also 2 a_{n-1,n-1} - m a_ii = 0. Inequalities: sum_S a_ii - 2 a_nn <= 0
    (|S| = m) and 2 a_nn - sum_T a_ii <= 0 (|T| = m + 1), S, T inside the
    first n - 1 indices.
    """
    if n < 4:
        raise DimensionError("D_n needs n >= 4")
    N = sym_dim(n)
    m = n // 2
    last = n - 1

    def row(coefs):
        r = [0] * N
        for (i, j), c in coefs.items():
            r[sym_index(n, i, j)] += c
        return r

    eqs = []
    for i, j in combinations(range(last), 2):
        eqs.append(row({(i, j): 1}))
    for i in range(last):
        eqs.append(row({(i, last): 2, (i, i): -1}))
    if n % 2 == 0:
        for i in range(last):
            eqs.append(row({(last, last): 2, (i, i): -m}))
    ineqs, labels = [], []
    for S in combinations(range(last), m):
        c = {(i, i): 1 for i in S}
        c[(last, last)] = -2
        ineqs.append(row(c))
        labels.append(("S", S))
    for T in combinations(range(last), m + 1):
        c = {(i, i): -1 for i in T}
        c[(last, last)] = 2
        ineqs.append(row(c))
        labels.append(("T", T))
    return ConeHRep(N, eqs, ineqs, tuple(labels))


def ldomain_row_subsets(n):
    """For each inequality of ``dn_ldomain_hrep(n)``, the m-subset of G_n it becomes.

    An S-row keeps S (b-index not in it); a T-row becomes the complement of
    T, which contains the b-index. Both evaluate to 2 (gamma(S') - alpha).
    """
    h = dn_ldomain_hrep(n)
    out = []
    for kind, idx in h.labels:
        out.append(idx if kind == "S" else tuple(i for i in range(n) if i not in idx))
    return out


def extreme_form(n, k, q):
    """f_q^k, the form of the ray gamma_q^k."""
    return GramMatrix(_form_entries(GammaVector(gn_ray(n, k, q))))


def extreme_form_ranks(n):
    """{(k, q): rank of f_q^k} for odd n."""
    return {(k, q): extreme_form(n, k, q).rank() for k in range(n) for q in (0, 1)}


# -- Voronoi polytope -----------------------------------------------------

@dataclass(frozen=True)
class VoronoiVertex:
    """Vertex x(k; S) in the orthogonal e-basis.

    ``signs`` has length n with entries +-1 on S and k and 0 elsewhere.
    """

    coords: tuple
    k: int
    S: tuple
    signs: tuple = field(compare=False)

    def to_json(self):
        return {"coords": [rational_to_json(x) for x in self.coords],
                "k": self.k, "S": list(self.S), "signs": list(self.signs)}


def voronoi_hrep(gv):
    """Rows ``(a, b, label)`` meaning a . x <= b: the box and the cross rows.

    2n box rows +-x_i <= 1/2 and 2^n cross rows sum gamma_i eps_i x_i <= alpha/2.
    """
    gv = _as_gamma(gv)
    n = gv.n
    half = Fraction(1, 2)
    rows = []
    for i in range(n):
        for s in (1, -1):
            rows.append(([s if j == i else 0 for j in range(n)], half, ("box", i, s)))
    for eps in product((1, -1), repeat=n):
        rows.append(([e * g for e, g in zip(eps, gv.gamma)], gv.alpha / 2, ("cross", eps)))
    return rows


def check_vertex(gv, x, rows=None):
    """Raise AssertionError unless ``x`` is a vertex of the polytope of ``gv``.

    Besides feasibility and n independent tight rows, every tight cross row
    must have eps_i x_i > 0 wherever x_i != 0.
    """
    gv = _as_gamma(gv)
    rows = rows if rows is not None else voronoi_hrep(gv)
    tight = []
    for a, b, label in rows:
        v = exact.dot(a, x)
        if v > b:
            raise AssertionError(f"{x} violates {label}")
        if v == b:
            tight.append(a)
            if label[0] == "cross":
                eps = label[1]
                if any(xi and e * xi <= 0 for e, xi in zip(eps, x)):
                    raise AssertionError(f"tight cross row {eps} has a wrong sign at {x}")
    if not tight or exact.rank(tight) < gv.n:
        raise AssertionError(f"{x} has fewer than {gv.n} independent tight rows")
    return len(tight)


def _formula_vertices(gv):
    n, m, a = gv.n, gv.m, gv.alpha
    out = []
    for S in combinations(range(n), m):
        rest = a - gv.gamma_of(S)
        for k in range(n):
            if k in S:
                continue
            if rest == 0:
                xk = Fraction(0)
            elif gv.gamma[k] == 0:
                raise GammaDomainError(f"gamma_{k} = 0 with gamma(S) != alpha")
            else:
                xk = rest / (2 * gv.gamma[k])
            support = S + (k,)
            for eps in product((1, -1), repeat=m + 1):
                signs = [0] * n
                x = [Fraction(0)] * n
                for i, e in zip(support, eps):
                    signs[i] = e
                    x[i] = e * (xk if i == k else Fraction(1, 2))
                out.append(VoronoiVertex(tuple(x), k, S, tuple(signs)))
    return out


def voronoi_vertices(gv, validate=True):
    """All vertices x(k; S) for gamma strictly inside G_n, n odd."""
    gv = _as_gamma(gv)
    if gv.n % 2 == 0:
        raise GammaDomainError("G_n has empty interior for even n; use glue_vertices")
    if not gv.is_interior():
        raise GammaDomainError("gamma is not strictly inside G_n; use glue_vertices")
    verts = _formula_vertices(gv)
    if len({v.coords for v in verts}) != len(verts):
        raise AssertionError("interior gamma produced coincident vertices")
    if validate:
        rows = voronoi_hrep(gv)
        for v in verts:
            check_vertex(gv, v.coords, rows)
    return sorted(verts, key=lambda v: v.coords)


@dataclass(frozen=True)
class GlueReport:
    tight_subsets: tuple
    merged_groups: tuple
    vertices: tuple

    @property
    def vertex_count(self):
        return len(self.vertices)

    def to_json(self):
        return {"tight_subsets": [list(S) for S in self.tight_subsets],
                "vertex_count": self.vertex_count,
                "merged_groups": [
                    {"coords": [rational_to_json(x) for x in g["coords"]],
                     "members": [{"k": k, "S": list(S), "sign": e}
                                 for k, S, e in g["members"]]}
                    for g in self.merged_groups],
                "vertices": [[rational_to_json(x) for x in v] for v in self.vertices]}


def glue_vertices(gv, validate=True):
    """Formula vertices on the boundary of G_n, with coincident ones merged.

    A group collects the labels (k, S, eps_k) whose vertices share
    coordinates. For a tight S0 these are x(k; S0) for every k outside S0
    and both signs of eps_k, since x_k vanishes. The complement T of S0 is
    tight from the other side, so the x(k; T - {k}) with k in T coincide
    as well (x_k = 1/2).
    """
    gv = _as_gamma(gv)
    if any(x <= 0 for x in gv.gamma):
        raise GammaDomainError("glue_vertices needs every gamma_i > 0")
    if not gv.in_closure():
        raise GammaDomainError("gamma is outside the closure of G_n")
    tight = gv.tight_subsets()
    if not tight:
        raise GammaDomainError("gamma is interior, nothing to glue")
    groups = {}
    for v in _formula_vertices(gv):
        groups.setdefault(v.coords, []).append(v)
    merged = []
    for coords, members in sorted(groups.items()):
        if len(members) > 1:
            merged.append({"coords": coords,
                           "members": sorted((v.k, v.S, v.signs[v.k]) for v in members)})
    vertices = tuple(sorted(groups))
    if validate:
        rows = voronoi_hrep(gv)
        for x in vertices:
            check_vertex(gv, x, rows)
    return GlueReport(tuple(tight), tuple(merged), vertices)


def off_dump(vertices):
    """nOFF-style text: header, dimension, counts, then one vertex per line."""
    coords = [v.coords if isinstance(v, VoronoiVertex) else tuple(v) for v in vertices]
    n = len(coords[0]) if coords else 0
    lines = ["nOFF", str(n), f"{len(coords)} 0 0"]
    for c in coords:
        lines.append(" ".join(f"{x.numerator}/{x.denominator}" for x in map(Fraction, c)))
    return "\n".join(lines) + "\n"

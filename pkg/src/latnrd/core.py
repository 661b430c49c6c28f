"""Gram matrices, root lattices and the symmetric-coordinate embedding.

Basis conventions
-----------------
``A``      Cartan matrix of A_n (simple roots e_i - e_{i+1}); entries 2, -1.
``Astar``  exact inverse of the A_n Cartan matrix (dual basis of A_n*).
``D``      Cartan matrix of D_n on e_1-e_2, ..., e_{n-1}-e_n, e_{n-1}+e_n.
``Dstar``  the b / e_i basis of D_n* scaled so that |e_i|^2 = 2:
           a_ii = 2, a_in = 1, a_nn = n/2 (identical to ``gamma_form(1,...,1)``).
``E6``, ``E7``, ``E8``  Cartan matrices in Bourbaki numbering
           (node 2 attached to node 4).
``E6star``, ``E7star``  exact inverses of those Cartan matrices.

Duals keep their rational entries; nothing is rescaled.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from . import exact
from .errors import DimensionError, InvalidLatticeError, NotPositiveDefiniteError

FAMILIES = ("A", "Astar", "D", "Dstar", "E6", "E6star", "E7", "E7star", "E8")


@dataclass(frozen=True)
class GramMatrix:
    """Symmetric rational matrix of a quadratic form.

    Construction checks symmetry only; positive definiteness is checked by
    the operations that need it (kernel elements of the nrd system are
    symmetric but indefinite, and share this type).
    """

    entries: tuple

    def __post_init__(self):
        rows = tuple(tuple(exact.as_fraction(x) for x in r) for r in self.entries)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise DimensionError("Gram matrix must be square and non-empty")
        for i in range(n):
            for j in range(i + 1, n):
                if rows[i][j] != rows[j][i]:
                    raise ValueError(f"Gram matrix is not symmetric at ({i}, {j})")
        object.__setattr__(self, "entries", rows)

    @property
    def n(self):
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def scaled(self, factor):
        factor = exact.as_fraction(factor)
        return GramMatrix([[factor * x for x in r] for r in self.entries])

    def conjugate(self, u):
        """Gram matrix of the basis given by the columns of ``u``: u^T g u."""
        ut = exact.transpose(u)
        return GramMatrix(exact.matmul(exact.matmul(ut, self.entries), u))

    def leading_minors(self):
        return [exact.det([r[:k] for r in self.entries[:k]]) for k in range(1, self.n + 1)]

    @cached_property
    def is_positive_definite(self):
        return all(m > 0 for m in self.leading_minors())

    def det(self):
        return exact.det(self.entries)

    def rank(self):
        return exact.rank(self.entries)

    def to_json(self):
        return {"n": self.n,
                "entries": [rational_to_json(x) for r in self.entries for x in r]}

    @classmethod
    def from_json(cls, obj):
        n = int(obj["n"])
        flat = obj["entries"]
        # nested rows (of pairs or plain numbers) are accepted too
        if len(flat) == n and all(isinstance(r, list) and len(r) == n for r in flat):
            flat = [x for r in flat for x in r]
        if len(flat) != n * n:
            raise DimensionError(f"expected {n * n} entries, got {len(flat)}")
        vals = [rational_from_json(x) for x in flat]
        return cls([vals[i * n:(i + 1) * n] for i in range(n)])


def require_positive_definite(g):
    if not g.is_positive_definite:
        raise NotPositiveDefiniteError("Gram matrix is not positive definite")


def rational_to_json(x):
    x = exact.as_fraction(x)
    return [x.numerator, x.denominator]


def rational_from_json(obj):
    if isinstance(obj, list):
        if len(obj) != 2 or obj[1] == 0:
            raise ValueError(f"bad rational {obj!r}")
        return Fraction(int(obj[0]), int(obj[1]))
    if isinstance(obj, (int, str)) and not isinstance(obj, bool):
        return Fraction(obj)
    raise ValueError(f"bad rational {obj!r}")


def qform_eval(g, v):
    """Norm v^T g v of an integer coordinate vector."""
    if len(v) != g.n:
        raise DimensionError(f"vector of length {len(v)} against {g.n}x{g.n} Gram")
    e = g.entries
    n = g.n
    total = Fraction(0)
    for i in range(n):
        if v[i] == 0:
            continue
        row = e[i]
        s = row[i] * v[i]
        for j in range(i + 1, n):
            if v[j]:
                s += 2 * row[j] * v[j]
        total += s * v[i]
    return total


# -- symmetric coordinates ------------------------------------------------

def sym_dim(n):
    return n * (n + 1) // 2


def sym_index(n, i, j):
    """Position of a_ij (0-based, any order) in the row-major upper triangle."""
    if i > j:
        i, j = j, i
    return i * n - i * (i - 1) // 2 + (j - i)


def sym_pairs(n):
    return [(i, j) for i in range(n) for j in range(i, n)]


@dataclass(frozen=True)
class SymVector:
    n: int
    coeffs: tuple

    def __post_init__(self):
        coeffs = tuple(exact.as_fraction(x) for x in self.coeffs)
        if len(coeffs) != sym_dim(self.n):
            raise DimensionError(f"need {sym_dim(self.n)} coefficients for n={self.n}")
        object.__setattr__(self, "coeffs", coeffs)


def sym_coords(g):
    return SymVector(g.n, [g.entries[i][j] for i, j in sym_pairs(g.n)])


def sym_uncoords(s):
    if not isinstance(s, SymVector):
        n = sym_order(len(s))
        s = SymVector(n, s)
    n = s.n
    m = [[Fraction(0)] * n for _ in range(n)]
    for (i, j), x in zip(sym_pairs(n), s.coeffs):
        m[i][j] = m[j][i] = x
    return GramMatrix(m)


def sym_order(N):
    """Inverse of ``sym_dim``."""
    n = 0
    while sym_dim(n) < N:
        n += 1
    if sym_dim(n) != N:
        raise DimensionError(f"{N} is not a triangular number")
    return n


# -- root lattices --------------------------------------------------------

def _cartan_from_edges(n, edges):
    m = [[0] * n for _ in range(n)]
    for i in range(n):
        m[i][i] = 2
    for i, j in edges:
        m[i][j] = m[j][i] = -1
    return m


def _a_cartan(n):
    return _cartan_from_edges(n, [(i, i + 1) for i in range(n - 1)])


def _d_cartan(n):
    edges = [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    return _cartan_from_edges(n, edges)


def _e_cartan(n):
    # Bourbaki: chain 1-3-4-5-6-7-8 with 2 hanging off 4 (0-based below)
    edges = [(0, 2), (2, 3), (3, 4), (1, 3)] + [(k, k + 1) for k in range(4, n - 1)]
    return _cartan_from_edges(n, edges)


def dstar_gram(n):
    m = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n - 1):
        m[i][i] = Fraction(2)
        m[i][n - 1] = m[n - 1][i] = Fraction(1)
    m[n - 1][n - 1] = Fraction(n, 2)
    return m


_E_RANKS = {"E6": 6, "E6star": 6, "E7": 7, "E7star": 7, "E8": 8}


def root_lattice(family, n=None):
    """Gram matrix of a root lattice or its dual in the fixed basis above."""
    if family not in FAMILIES:
        raise InvalidLatticeError(f"unknown family {family!r}")
    if family in _E_RANKS:
        rank = _E_RANKS[family]
        if n is not None and n != rank:
            raise InvalidLatticeError(f"{family} has rank {rank}, not {n}")
        cartan = _e_cartan(rank)
        if family.endswith("star"):
            return GramMatrix(exact.inverse(cartan))
        return GramMatrix(cartan)
    if n is None or not isinstance(n, int) or isinstance(n, bool):
        raise InvalidLatticeError(f"{family} needs an integer rank")
    if family in ("A", "Astar"):
        if n < 1:
            raise InvalidLatticeError("A_n needs n >= 1")
        cartan = _a_cartan(n)
        return GramMatrix(exact.inverse(cartan) if family == "Astar" else cartan)
    if n < 3:
        raise InvalidLatticeError(f"{family} needs n >= 3")
    if family == "D":
        return GramMatrix(_d_cartan(n))
    return GramMatrix(dstar_gram(n))


def lattice_name(family, n=None):
    star = "*" if family.endswith("star") else ""
    stem = family[:-4] if star else family
    if stem.startswith("E"):
        return stem + star
    return f"{stem}{n}{star}"

"""Minimal vectors of the cosets of 2L in L."""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from itertools import product
from math import lcm

from . import exact, kernels
from .core import rational_to_json, require_positive_definite
from .errors import DimensionError


@dataclass(frozen=True)
class CosetMinSet:
    """Shortest vectors of one class of L/2L, one per +/- pair."""

    label: tuple
    min_norm: Fraction
    vectors: tuple

    def to_json(self):
        return {"label": list(self.label),
                "min_norm": rational_to_json(self.min_norm),
                "vectors": [list(v) for v in self.vectors]}


def coset_labels(n):
    """The 2^n - 1 nonzero 0/1 labels of L/2L in lexicographic order."""
    if n < 1:
        raise DimensionError("n must be >= 1")
    return [bits for bits in product((0, 1), repeat=n) if any(bits)]


def sign_canonical(v):
    """The one of v, -v whose first nonzero coordinate is positive."""
    for c in v:
        if c:
            return tuple(v) if c > 0 else tuple(-x for x in v)
    return tuple(v)


@dataclass(frozen=True)
class EnumerationPlan:
    scale: int
    gram: tuple
    dets: tuple
    rows: tuple
    inv_diag_bound: Fraction


@lru_cache(maxsize=256)
def enumeration_plan(g):
    """Integer rescaling and Bareiss data shared by every coset of ``g``."""
    require_positive_definite(g)
    scale = reduce(lcm, (x.denominator for r in g.entries for x in r), 1)
    gram = tuple(tuple(int(x * scale) for x in r) for r in g.entries)
    dets, rows = exact.bareiss_schur(gram)
    inv = exact.inverse(gram)
    inv_diag = max(inv[i][i] for i in range(g.n))
    return EnumerationPlan(scale, gram, tuple(dets), tuple(rows), inv_diag)


def _int_norm(gram, v):
    n = len(v)
    return sum(gram[i][j] * v[i] * v[j] for i in range(n) for j in range(n))


def coset_min_vectors(g, label, backend=None):
    """Complete set of minimal vectors of the coset ``label`` of 2L in L.

    The 0/1 representative's norm seeds the search bound, which then shrinks
    to the coset minimum as shorter members turn up. Vectors are returned
    sign-deduplicated (first nonzero coordinate positive) in lexicographic
    order.
    """
    label = tuple(int(b) for b in label)
    if len(label) != g.n:
        raise DimensionError(f"label of length {len(label)} for dimension {g.n}")
    if any(b not in (0, 1) for b in label):
        raise ValueError("coset label entries must be 0 or 1")
    if not any(label):
        raise ValueError("the trivial coset 2L has no role in the nrd system")
    plan = enumeration_plan(g)
    bound = _int_norm(plan.gram, label)
    best, found = kernels.enumerate_coset(plan.dets, plan.rows, label, bound,
                                          plan.inv_diag_bound, backend=backend)
    vectors = tuple(sorted({sign_canonical(v) for v in found}))
    return CosetMinSet(label, Fraction(best, plan.scale), vectors)


def all_coset_min_vectors(g, threads=1, backend=None):
    """``coset_min_vectors`` for every nonzero label, in label order."""
    labels = coset_labels(g.n)
    enumeration_plan(g)
    if threads and threads > 1:
        from concurrent.futures import ThreadPoolExecutor
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(lambda lab: coset_min_vectors(g, lab, backend), labels))
    return [coset_min_vectors(g, lab, backend) for lab in labels]


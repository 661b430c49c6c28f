"""Exact polyhedral cones {x : E x = 0, C x <= 0} via double description.

Rays are primitive integer vectors. Tight sets are kept as int bitmasks
over the inequalities processed so far, which makes the combinatorial
adjacency test a couple of integer ops per ray.
"""

from dataclasses import dataclass, field

from . import exact
from .core import rational_to_json, rational_from_json
from .errors import DimensionError, NonPointedConeError

# above this many current rays the algebraic adjacency test is cheaper
_COMBINATORIAL_MAX_RAYS = 400


@dataclass(frozen=True)
class ConeHRep:
    """Rows r of ``inequalities`` mean r . x <= 0; ``equalities`` mean r . x = 0."""

    dim: int
    equalities: tuple = ()
    inequalities: tuple = ()
    labels: tuple = field(default=(), compare=False)

    def __post_init__(self):
        eqs = tuple(tuple(exact.as_fraction(x) for x in r) for r in self.equalities)
        ineqs = tuple(tuple(exact.as_fraction(x) for x in r) for r in self.inequalities)
        for r in eqs + ineqs:
            if len(r) != self.dim:
                raise DimensionError(f"row of length {len(r)} in a cone of dimension {self.dim}")
        object.__setattr__(self, "equalities", eqs)
        object.__setattr__(self, "inequalities", ineqs)

    def contains(self, x):
        return (all(exact.dot(r, x) == 0 for r in self.equalities)
                and all(exact.dot(r, x) <= 0 for r in self.inequalities))

    def to_json(self):
        return {"dim": self.dim,
                "equalities": [[rational_to_json(x) for x in r] for r in self.equalities],
                "inequalities": [[rational_to_json(x) for x in r] for r in self.inequalities]}

    @classmethod
    def from_json(cls, obj):
        return cls(int(obj["dim"]),
                   [[rational_from_json(x) for x in r] for r in obj.get("equalities", [])],
                   [[rational_from_json(x) for x in r] for r in obj.get("inequalities", [])])


def canonical_ray(v):
    """Primitive integer representative of the ray through ``v``.

    Only positive rescaling is allowed, so the direction is preserved.
    """
    return exact.primitive(exact.integer_row(v))


def _insertion_order(rows):
    return sorted(range(len(rows)), key=lambda i: (sum(1 for x in rows[i] if x), rows[i]))


def double_description(h, adjacency="auto"):
    """Return ``(rays, lineality)`` of the cone, both as integer vectors.

    ``rays`` are extreme rays of the cone modulo its lineality space.
    ``adjacency`` is ``"combinatorial"``, ``"algebraic"`` or ``"auto"``.
    """
    d = h.dim
    eqs = [exact.integer_row(r) for r in h.equalities]
    ineqs = [exact.integer_row(r) for r in h.inequalities]
    eq_rank = exact.rank(eqs) if eqs else 0
    lin = [tuple(v) for v in exact.kernel_basis(eqs, d)] if eqs else [
        tuple(int(i == j) for j in range(d)) for i in range(d)]
    rays = []
    masks = []
    processed = []
    for step, idx in enumerate(_insertion_order(ineqs)):
        a = ineqs[idx]
        if not any(a):
            processed.append(a)
            masks = [m | (1 << step) for m in masks]
            continue
        bit = 1 << step
        piv = next((l for l in lin if exact.dot(a, l) != 0), None)
        if piv is not None:
            s = exact.dot(a, piv)
            if s > 0:
                piv = tuple(-x for x in piv)
                s = -s
            new_lin = []
            for l in lin:
                if l is piv or l == tuple(-x for x in piv):
                    continue
                t = exact.dot(a, l)
                new_lin.append(l if t == 0 else
                               exact.primitive([-s * x + t * y for x, y in zip(l, piv)]))
            new_rays = []
            for r in rays:
                t = exact.dot(a, r)
                new_rays.append(r if t == 0 else
                                exact.primitive([-s * x + t * y for x, y in zip(r, piv)]))
            rays = new_rays + [exact.primitive(piv)]
            masks = [m | bit for m in masks] + [bit - 1]
            lin = new_lin
            processed.append(a)
            continue

        vals = [exact.dot(a, r) for r in rays]
        need = d - eq_rank - len(lin) - 2
        use_comb = adjacency == "combinatorial" or (
            adjacency == "auto" and len(rays) <= _COMBINATORIAL_MAX_RAYS)
        pos = [i for i, v in enumerate(vals) if v > 0]
        neg = [i for i, v in enumerate(vals) if v < 0]
        new_rays = []
        new_masks = []
        for i, v in enumerate(vals):
            if v <= 0:
                new_rays.append(rays[i])
                new_masks.append(masks[i] | bit if v == 0 else masks[i])
        for i in pos:
            mp = masks[i]
            for j in neg:
                z = mp & masks[j]
                if z.bit_count() < need:
                    continue
                if use_comb:
                    hits = 0
                    for m in masks:
                        if m & z == z:
                            hits += 1
                            if hits > 2:
                                break
                    if hits > 2:
                        continue
                else:
                    tight = [processed[k] for k in range(step) if z >> k & 1]
                    if exact.rank(eqs + tight) - eq_rank != need:
                        continue
                vp, vq = vals[i], vals[j]
                new_rays.append(exact.primitive(
                    [vp * y - vq * x for x, y in zip(rays[i], rays[j])]))
                new_masks.append(z | bit)
        rays, masks = new_rays, new_masks
        processed.append(a)
    return rays, lin


def extreme_rays(h, adjacency="auto"):
    """Canonical extreme rays of a pointed cone, sorted lexicographically."""
    rays, lin = double_description(h, adjacency)
    if lin:
        raise NonPointedConeError("cone contains a line", lin[0])
    return sorted({canonical_ray(r) for r in rays})


def cone_dim(h):
    """Dimension of the linear hull of the cone."""
    rays, lin = double_description(h)
    vecs = list(rays) + list(lin) + [tuple(-x for x in l) for l in lin]
    return exact.rank(vecs) if vecs else 0


def incidence(h, rays):
    """Boolean matrix: entry (i, j) says inequality i is tight at ray j."""
    for r in rays:
        if not h.contains(r):
            raise ValueError(f"ray {tuple(r)} is outside the cone")
    return [[exact.dot(row, r) == 0 for r in rays] for row in h.inequalities]


def tight_rank(h, ray):
    """Rank of all rows (equalities and tight inequalities) vanishing at ``ray``."""
    rows = list(h.equalities) + [r for r in h.inequalities if exact.dot(r, ray) == 0]
    return exact.rank(rows) if rows else 0

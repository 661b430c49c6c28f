"""Non-rigidity degrees of lattices and the L-domain of D_n*, in exact arithmetic."""

from .core import GramMatrix, SymVector, qform_eval, root_lattice, sym_coords, sym_uncoords
from .kernels import BACKEND
from .minvec import CosetMinSet, coset_labels, coset_min_vectors
from .nrd import NrdResult, ldomain_span, norm_constraint, nrd

__all__ = [
    "BACKEND",
    "CosetMinSet",
    "GramMatrix",
    "NrdResult",
    "SymVector",
    "coset_labels",
    "coset_min_vectors",
    "ldomain_span",
    "norm_constraint",
    "nrd",
    "qform_eval",
    "root_lattice",
    "sym_coords",
    "sym_uncoords",
]

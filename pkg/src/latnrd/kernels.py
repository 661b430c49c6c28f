"""Backend selection for the hot kernels.

The compiled module ``_ckernels`` is used when it imports and the inputs
fit its int64 arithmetic; otherwise the Python-int implementation in
``_pykernels`` runs. Set ``LATNRD_PURE=1`` to force the fallback.
"""

import os
from math import isqrt

from . import _pykernels

try:
    if os.environ.get("LATNRD_PURE", "") not in ("", "0"):
        raise ImportError("compiled kernels disabled by LATNRD_PURE")
    from . import _ckernels
except ImportError:
    _ckernels = None

BACKEND = "cython" if _ckernels is not None else "python"

# headroom below 2**63 for the sums of two products in the inner loops
_LIMIT = 2 ** 60


def available_backends():
    return ["python"] + (["cython"] if _ckernels is not None else [])


def enumeration_fits_int64(dets, rows, bound, inv_diag_bound):
    """Conservative bound on every intermediate of ``enumerate_coset``.

    ``inv_diag_bound`` bounds max_j (G^-1)_jj, which caps |x_j| through
    x_j^2 <= bound * (G^-1)_jj.
    """
    dmax = max(dets)
    mmax = max(abs(v) for r in rows for v in r)
    n = len(rows)
    xmax = isqrt(int(bound * inv_diag_bound) + 1) + 3
    pmax = n * mmax * xmax
    ymax = dmax * (xmax + 2) + pmax
    return (dmax * dmax * (bound + 1) < _LIMIT
            and ymax * ymax < _LIMIT
            and dmax * ymax < _LIMIT)


def enumerate_coset(dets, rows, parity, bound, inv_diag_bound, backend=None):
    backend = backend or BACKEND
    if backend == "cython":
        if _ckernels is None:
            raise RuntimeError("compiled kernels are not available")
        if enumeration_fits_int64(dets, rows, bound, inv_diag_bound):
            return _ckernels.enumerate_coset(dets, rows, parity, bound)
    return _pykernels.enumerate_coset(dets, rows, parity, bound)


def solve_fits_int64(a, b):
    n = len(a[0])
    # Hadamard bound on every minor of [a | b], squared once more for products
    row_norms = sorted((sum(v * v for v in r) + bi * bi for r, bi in zip(a, b)),
                       reverse=True)
    h = 1
    for v in row_norms[:n + 1]:
        h *= v
    h = isqrt(h) + 1
    amax = max(abs(v) for r in a for v in r)
    bmax = max(abs(v) for v in b)
    return h * h < _LIMIT and n * amax * h < _LIMIT and bmax * h < _LIMIT


def facet_subset_vertices(a, b, backend=None):
    backend = backend or BACKEND
    if backend == "cython":
        if _ckernels is None:
            raise RuntimeError("compiled kernels are not available")
        if solve_fits_int64(a, b):
            return _ckernels.facet_subset_vertices(a, b)
    return _pykernels.facet_subset_vertices(a, b)

from fractions import Fraction
from itertools import combinations, product
from math import isqrt

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from latnrd import GramMatrix, coset_labels, coset_min_vectors, qform_eval, root_lattice
from latnrd import exact, kernels, oracles
from latnrd.dnstar import GammaVector, gamma_form
from latnrd.minvec import all_coset_min_vectors

SMALL = [("A", 1), ("A", 2), ("A", 3), ("A", 4), ("Astar", 2), ("Astar", 3), ("Astar", 4),
         ("D", 3), ("D", 4), ("Dstar", 3), ("Dstar", 4)]


def test_coset_labels():
    assert coset_labels(2) == [(0, 1), (1, 0), (1, 1)]
    assert len(coset_labels(8)) == 255
    assert (1, 1, 1, 1, 1) in coset_labels(5)
    assert coset_labels(4) == sorted(coset_labels(4))


def test_orthogonal_example():
    g = GramMatrix([[2, 0, 0], [0, 2, 0], [0, 0, 2]])
    cs = coset_min_vectors(g, (1, 1, 0))
    assert cs.min_norm == 4
    assert cs.vectors == ((1, -1, 0), (1, 1, 0))


def test_d4_class_of_2e1():
    # 2e_1 = 2a_1 + 2a_2 + a_3 + a_4 in the Cartan basis
    g = root_lattice("D", 4)
    assert qform_eval(g, (2, 2, 1, 1)) == 4
    cs = coset_min_vectors(g, (0, 0, 1, 1))
    best, brute = oracles.box_min_vectors(g, (0, 0, 1, 1), box=3)
    assert cs.min_norm == best == 4
    assert list(cs.vectors) == brute
    # frozen from the box search above: the four vectors 2e_i up to sign
    assert cs.vectors == ((0, 0, 1, -1), (0, 0, 1, 1), (0, 2, 1, 1), (2, 2, 1, 1))


def test_dstar5_odd_b_coset_is_simple():
    # class of b - e_1: one +- pair, b - e_1 itself
    g = root_lattice("Dstar", 5)
    cs = coset_min_vectors(g, (1, 0, 0, 0, 1))
    assert cs.min_norm == Fraction(5, 2)
    assert cs.vectors == ((1, 0, 0, 0, -1),)
    best, brute = oracles.box_min_vectors(g, (1, 0, 0, 0, 1), box=3)
    assert (best, brute) == (cs.min_norm, list(cs.vectors))


@pytest.mark.parametrize("n", [5, 7])
def test_dstar_census(n):
    """Odd-b classes have one pair of norm alpha; even classes with 1 < |S| <= m have 2^(|S|-1)."""
    gv = GammaVector.ones(n)
    g = gamma_form(gv)
    m = n // 2
    for cs in all_coset_min_vectors(g):
        S = [i for i in range(n - 1) if cs.label[i]]
        if cs.label[-1] == 1:
            assert cs.min_norm == gv.alpha and len(cs.vectors) == 1
        elif 1 < len(S) <= m:
            assert cs.min_norm == 2 * len(S) and len(cs.vectors) == 2 ** (len(S) - 1)


@pytest.mark.parametrize("family,n", SMALL)
def test_completeness_against_box(family, n):
    g = root_lattice(family, n)
    for lab in coset_labels(n):
        cs = coset_min_vectors(g, lab)
        best, brute = oracles.box_min_vectors(g, lab, box=4)
        assert cs.min_norm == best
        assert list(cs.vectors) == brute


def _invariants(g, cs):
    full = list(cs.vectors) + [tuple(-x for x in v) for v in cs.vectors]
    assert len(set(full)) == len(full) and len(full) % 2 == 0
    for v in cs.vectors:
        assert all((x - b) % 2 == 0 for x, b in zip(v, cs.label))
        assert qform_eval(g, v) == cs.min_norm
        assert next(x for x in v if x) > 0
    assert list(cs.vectors) == sorted(cs.vectors)


@st.composite
def reduced_forms(draw, max_n=4):
    n = draw(st.integers(1, max_n))
    b = draw(st.lists(st.lists(st.integers(-2, 2), min_size=n, max_size=n),
                      min_size=n, max_size=n))
    g = [[exact.dot([r[i] for r in b], [r[j] for r in b]) + 2 * (i == j) for j in range(n)]
         for i in range(n)]
    return GramMatrix(g)


@given(reduced_forms(), st.data())
def test_random_forms_against_box(g, data):
    lab = data.draw(st.sampled_from(coset_labels(g.n)))
    cs = coset_min_vectors(g, lab)
    _invariants(g, cs)
    # every class member of norm <= bound has |x_j|^2 <= bound * (G^-1)_jj
    inv = exact.inverse(g.entries)
    bound = qform_eval(g, lab)
    box = max(isqrt(int(bound * inv[j][j])) + 1 for j in range(g.n))
    assume(box <= 4)
    best, brute = oracles.box_min_vectors(g, lab, box=box)
    assert (cs.min_norm, list(cs.vectors)) == (best, brute)


@pytest.mark.parametrize("n", [5, 7])
def test_interior_gamma_nonsimple_cosets(n):
    """For |S| <= m, z = 0 the minimal vectors are exactly the sign choices on S."""
    m = n // 2
    gv = GammaVector([3] + [2] * (n - 2) + [2]) if n == 5 else GammaVector([2] * n)
    assert gv.is_interior()
    g = gamma_form(gv)
    for size in range(1, m + 1):
        for S in combinations(range(n - 1), size):
            lab = tuple(int(i in S) for i in range(n))
            cs = coset_min_vectors(g, lab)
            want = set()
            for eps in product((1, -1), repeat=size):
                v = [0] * n
                for i, e in zip(S, eps):
                    v[i] = e
                want.add(tuple(v) if v[S[0]] > 0 else tuple(-x for x in v))
            assert set(cs.vectors) == want
            assert cs.min_norm == 2 * gv.gamma_of(S)


@pytest.mark.parametrize("backend", kernels.available_backends())
@pytest.mark.parametrize("family,n", [("E8", None), ("Astar", 5), ("Dstar", 6)])
def test_backends_agree(backend, family, n):
    g = root_lattice(family, n)
    ref = all_coset_min_vectors(g, backend="python")
    assert all_coset_min_vectors(g, backend=backend) == ref


def test_threads_do_not_change_results():
    g = root_lattice("E7", None)
    assert all_coset_min_vectors(g, threads=4) == all_coset_min_vectors(g, threads=1)


def test_label_validation():
    g = root_lattice("A", 3)
    with pytest.raises(ValueError):
        coset_min_vectors(g, (0, 0, 0))
    with pytest.raises(ValueError):
        coset_min_vectors(g, (0, 2, 0))
    with pytest.raises(ValueError):
        coset_min_vectors(g, (1, 0))


def test_coset_json():
    cs = coset_min_vectors(root_lattice("Dstar", 5), (1, 0, 0, 0, 1))
    assert cs.to_json() == {"label": [1, 0, 0, 0, 1], "min_norm": [5, 2],
                            "vectors": [[1, 0, 0, 0, -1]]}

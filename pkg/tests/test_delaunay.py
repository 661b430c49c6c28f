from fractions import Fraction

import pytest

from latnrd import GramMatrix, root_lattice
from latnrd.delaunay import (
    EchelonBasis,
    affine_relations,
    delaunay_star,
    relevant_vectors,
    voronoi_cell_vertices,
)
from latnrd.minvec import all_coset_min_vectors


def _cosets(g):
    return all_coset_min_vectors(g)


def test_square_lattice_cell():
    g = GramMatrix([[1, 0], [0, 1]])
    verts = voronoi_cell_vertices(g, _cosets(g))
    h = Fraction(1, 2)
    assert sorted(verts) == sorted((s * h, t * h) for s in (1, -1) for t in (1, -1))


def test_hexagonal_cell_and_triangles():
    g = root_lattice("A", 2)
    cosets = _cosets(g)
    assert len(relevant_vectors(cosets)) == 3
    stars = delaunay_star(g, cosets)
    assert len(stars) == 6
    for _, verts in stars:
        assert len(verts) == 2
        assert affine_relations(verts) == []


def test_square_lattice_relation():
    # the unit square at 0 has vertices e1, e2, e1 + e2: X[e1+e2] = X[e1] + X[e2]
    g = GramMatrix([[1, 0], [0, 1]])
    stars = delaunay_star(g, _cosets(g))
    centre, verts = next(s for s in stars if s[0] == (Fraction(1, 2), Fraction(1, 2)))
    assert sorted(verts) == [(0, 1), (1, 0), (1, 1)]
    assert affine_relations(verts) == [(0, 1, 0)]


@pytest.mark.parametrize("family,n,count", [("Dstar", 5, 240), ("E6star", None, 720),
                                            ("A", 3, 14)])
def test_cell_vertex_counts(family, n, count):
    g = root_lattice(family, n)
    assert len(voronoi_cell_vertices(g, _cosets(g))) == count


def test_echelon_basis():
    b = EchelonBasis(3)
    assert b.add([1, 2, 3])
    assert not b.add([2, 4, 6])
    assert b.add([0, 1, 1])
    assert b.rank == 2
    assert not b.add([1, 3, 4])

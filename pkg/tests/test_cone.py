import random

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from latnrd import exact, oracles
from latnrd.cone import (
    ConeHRep,
    cone_dim,
    double_description,
    extreme_rays,
    incidence,
    tight_rank,
)
from latnrd.dnstar import dn_ldomain_hrep, gn_hrep
from latnrd.errors import DimensionError, NonPointedConeError

QUADRANT = ConeHRep(2, (), [(-1, 0), (0, -1)])


def test_quadrant():
    assert extreme_rays(QUADRANT) == [(0, 1), (1, 0)]
    assert cone_dim(QUADRANT) == 2
    assert incidence(QUADRANT, [(1, 0), (0, 1)]) == [[False, True], [True, False]]


def test_gn_examples():
    assert len(extreme_rays(gn_hrep(5))) == 10
    assert extreme_rays(gn_hrep(4)) == [(1, 1, 1, 1)]
    assert cone_dim(gn_hrep(5)) == 5
    assert cone_dim(gn_hrep(6)) == 1


def test_non_pointed_cone_has_witness():
    h = ConeHRep(3, (), [(-1, 0, 0), (0, -1, 0)])
    with pytest.raises(NonPointedConeError) as info:
        extreme_rays(h)
    w = info.value.witness
    assert h.contains(w) and h.contains(tuple(-x for x in w))


def test_incidence_rejects_outside_ray():
    with pytest.raises(ValueError):
        incidence(QUADRANT, [(-1, 0)])


def test_row_length_checked():
    with pytest.raises(DimensionError):
        ConeHRep(2, (), [(1, 2, 3)])


def test_equalities_and_json():
    h = ConeHRep(3, [(1, -1, 0)], [(-1, 0, 0), (0, 0, -1)])
    assert extreme_rays(h) == [(0, 0, 1), (1, 1, 0)]
    assert ConeHRep.from_json(h.to_json()) == h


def test_direction_is_kept():
    # the only ray points into negative coordinates
    h = ConeHRep(2, [(1, 1)], [(1, 0)])
    assert extreme_rays(h) == [(-1, 1)]


@st.composite
def hreps(draw, max_d=4, max_rows=8):
    d = draw(st.integers(2, max_d))
    k = draw(st.integers(d, max_rows))
    rows = draw(st.lists(st.lists(st.integers(-3, 3), min_size=d, max_size=d),
                         min_size=k, max_size=k))
    ne = draw(st.integers(0, 1))
    eqs = draw(st.lists(st.lists(st.integers(-2, 2), min_size=d, max_size=d),
                        min_size=ne, max_size=ne))
    return ConeHRep(d, eqs, rows)


def _pointed(h):
    _, lin = double_description(h)
    return not lin


@given(hreps())
def test_soundness_and_extremality(h):
    assume(_pointed(h))
    rays = extreme_rays(h)
    for r in rays:
        assert h.contains(r)
        assert exact.primitive(r) == tuple(r)
        # pointed cone: extreme means the vanishing rows have rank d - 1
        assert tight_rank(h, r) == h.dim - 1
    assert len(set(rays)) == len(rays)


@given(hreps(max_d=5, max_rows=8))
def test_brute_force_completeness(h):
    assume(_pointed(h))
    assert extreme_rays(h) == oracles.brute_force_rays(h)


@given(hreps(), st.randoms(use_true_random=False))
def test_order_independence(h, rnd):
    assume(_pointed(h))
    rows = list(h.inequalities)
    rnd.shuffle(rows)
    assert extreme_rays(ConeHRep(h.dim, h.equalities, rows)) == extreme_rays(h)


@given(hreps())
def test_adjacency_modes_agree(h):
    assume(_pointed(h))
    assert extreme_rays(h, "combinatorial") == extreme_rays(h, "algebraic")


@pytest.mark.parametrize("n", [4, 5, 6, 7])
def test_gn_dn_cones_both_adjacency_modes(n):
    for h in (gn_hrep(n), dn_ldomain_hrep(n)):
        assert extreme_rays(h, "combinatorial") == extreme_rays(h, "algebraic")


@pytest.mark.parametrize("n", [5, 7])
def test_gn_order_independence(n):
    h = gn_hrep(n)
    rows = list(h.inequalities)
    random.Random(n).shuffle(rows)
    assert extreme_rays(ConeHRep(n, (), rows)) == extreme_rays(h)


def test_brute_force_on_gn5():
    assert oracles.brute_force_rays(gn_hrep(5)) == extreme_rays(gn_hrep(5))

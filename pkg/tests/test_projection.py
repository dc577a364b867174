import numpy as np
import pytest
from hypothesis import given, strategies as st

from conftest import OMEGA, W, Z, cusp, shifted_cusp
from curvelab.errors import DegenerateSlice, NonSquareFree, ProbeTooLarge
from curvelab.polycalc import Disk, eval_bivar
from curvelab.projection import (
    Crossing,
    Fiber,
    Polydisk,
    check_good,
    classify_crossing,
    discriminant,
    fiber,
)

BASE = Disk(0, 0.9)


def close_multiset(a, b, tol=1e-9):
    a, b = list(a), list(b)
    for x in a:
        k = int(np.argmin([abs(x - y) for y in b]))
        if abs(x - b[k]) > tol:
            return False
        b.pop(k)
    return not b


# -- good neighborhoods -----------------------------------------------------


def test_check_good_cusp():
    res = check_good(cusp(), Polydisk(Disk(0, 0.5), Disk(0, 1)))
    assert res.good
    assert res.max_distance == pytest.approx(0.5 ** (2 / 3), abs=1e-12)  # analytic max |z|^(2/3)


def test_check_good_bad_with_witness():
    res = check_good(cusp(), Polydisk(Disk(0, 1), Disk(0, 0.5)))
    assert not res.good
    z, w = res.witness
    assert abs(z) == pytest.approx(1.0) and abs(w) == pytest.approx(1.0)


def test_check_good_graph():
    assert check_good(W - Z, Polydisk(Disk(0, 1), Disk(0, 2)))


def test_check_good_degenerate_leading_coefficient():
    res = check_good(Z * W**2 - 1, Polydisk(Disk(0, 0.5), Disk(0, 1)))
    assert not res.good and "degenerate" in res.reason


# -- fibers -----------------------------------------------------------------


def test_fiber_examples():
    assert close_multiset(fiber(cusp(), 1).points, [1, OMEGA, OMEGA**2])
    assert fiber(cusp(), 0).points == (0j, 0j, 0j)
    assert close_multiset(fiber(W**2 - Z**3 + 0.01, 0).points, [0.1j, -0.1j])


def test_fiber_canonical_order():
    pts = fiber(cusp(), 0.3 + 0.2j).points
    assert list(pts) == sorted(pts, key=lambda x: (x.real, x.imag))


def test_fiber_degenerate_slice():
    with pytest.raises(DegenerateSlice):
        fiber(Z * W**2 + W - 1, 0)


def test_fiber_distinct_groups():
    assert Fiber(0, [0, 0, 1]).distinct() == [(0j, 2), (1 + 0j, 1)]


# -- discriminant -----------------------------------------------------------


def test_discriminant_cusp():
    rep = discriminant(cusp(), BASE)
    assert rep.sheet_count == 3
    assert len(rep.points) == 1
    p = rep.points[0]
    assert abs(p.location) < 1e-7 and p.crossing is Crossing.NON_NORMAL


def test_discriminant_cusp_minus_constant():
    rep = discriminant(cusp() - 0.01, BASE)
    assert rep.sheet_count == 3
    assert sorted(p.location.real for p in rep.points) == pytest.approx([-0.1, 0.1], abs=1e-7)
    assert all(p.crossing is Crossing.NON_NORMAL for p in rep.points)


def test_discriminant_normal_crossing():
    rep = discriminant(W**2 - Z**2, BASE)
    assert rep.sheet_count == 2 and len(rep.points) == 1
    assert abs(rep.points[0].location) < 1e-9 and rep.points[0].crossing is Crossing.NORMAL


def test_discriminant_close_pair():
    # two cusps 2e-5 apart, each still non-normal
    G = shifted_cusp(0.01, 0.01) - 0.01**5
    rep = discriminant(G, BASE)
    locs = sorted(p.location.real for p in rep.points)
    assert len(locs) == 2 and locs[1] - locs[0] == pytest.approx(2e-5, rel=1e-3)
    assert all(p.crossing is Crossing.NON_NORMAL for p in rep.points)


def test_discriminant_non_square_free():
    with pytest.raises(NonSquareFree):
        discriminant((W - Z) ** 2, BASE)


def test_classify_crossing_examples():
    assert classify_crossing(W**2 - Z**2, 0, 0.3) is Crossing.NORMAL
    assert classify_crossing(cusp(), 0, 0.3) is Crossing.NON_NORMAL
    assert classify_crossing(W**2 - Z**3, 0, 0.3) is Crossing.NON_NORMAL


def test_classify_crossing_probe_too_large():
    with pytest.raises(ProbeTooLarge):
        classify_crossing(cusp() - 0.01, 0.1, 0.5, others=[0.1, -0.1])


def test_locations_inside_base():
    rep = discriminant(cusp() - 0.25, Disk(0, 0.4))  # points at +-0.5 lie outside
    assert rep.points == []


# -- properties -------------------------------------------------------------

coef = st.floats(-0.5, 0.5)


@given(st.lists(st.tuples(coef, coef), min_size=2, max_size=3, unique=True))
def test_product_of_graphs_is_normal_crossing(ab):
    F = 1
    for a, b in ab:
        F = (W - (a + 0.7) * Z - b) * F
    slopes = [a for a, _ in ab]
    if min(abs(x - y) for i, x in enumerate(slopes) for y in slopes[i + 1:]) < 0.05:
        return
    rep = discriminant(F, Disk(0, 2))
    assert all(p.crossing is Crossing.NORMAL for p in rep.points)


@given(st.complex_numbers(max_magnitude=0.3, allow_nan=False, allow_infinity=False))
def test_shift_equivariance(s):
    a = discriminant(cusp() - 0.04, Disk(0, 0.9)).locations
    b = discriminant(cusp().translate(-s, 0) - 0.04, Disk(s, 0.9)).locations
    assert close_multiset([x + s for x in a], b, tol=1e-7)


@given(st.complex_numbers(max_magnitude=0.85, allow_nan=False, allow_infinity=False))
def test_fiber_size_and_residual(z0):
    F = cusp() - 0.01 + Z * W
    fib = fiber(F, z0)
    assert len(fib) == F.w_degree
    for w in fib.points:
        assert abs(eval_bivar(F, z0, w)) <= 1e-10


@given(st.complex_numbers(max_magnitude=0.85, allow_nan=False, allow_infinity=False))
def test_generic_fiber_distinct(z0):
    F = cusp() - 0.01
    locs = discriminant(F, BASE).locations
    if min(abs(z0 - q) for q in locs) < 1e-3:
        return
    assert len(fiber(F, z0).distinct(tol=1e-9)) == 3

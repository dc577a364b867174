from fractions import Fraction

import numpy as np
import pytest
from hypothesis import assume, given, strategies as st

from conftest import W, Z, cusp
from curvelab.errors import NonSquareFree, TrivialPolygon, VerticalComponent
from curvelab.puiseux import PuiseuxParam, newton_polygon, param_residual, puiseux_expand


def series(*pairs, n=16):
    g = [0j] * n
    for k, c in pairs:
        g[k] = c
    return g


# -- Newton polygon ---------------------------------------------------------


def test_newton_polygon_examples():
    (e,) = newton_polygon(cusp())
    assert e.slope == Fraction(-2, 3) and e.exponent == Fraction(2, 3)
    assert {m for m in e.monomials} == {(2, 0), (0, 3)}
    (e,) = newton_polygon(W**2 - Z**2)
    assert e.exponent == 1
    (e,) = newton_polygon(W**2 - Z**3)
    assert e.exponent == Fraction(3, 2)


def test_newton_polygon_two_edges():
    edges = newton_polygon((W - Z) * (W**2 - Z**3))
    assert [e.exponent for e in edges] == [1, Fraction(3, 2)]


def test_newton_polygon_errors():
    with pytest.raises(TrivialPolygon):
        newton_polygon(Z**2 * W)
    with pytest.raises(ValueError):
        newton_polygon(cusp() + 1)
    with pytest.raises(ValueError):
        newton_polygon(Z * (W - Z))


# -- expansions -------------------------------------------------------------


def test_cusp_expansion():
    (p,) = puiseux_expand(cusp(), order=8)
    assert p.ramification == 3 and p.exact
    assert np.allclose(p.series, series((2, 1), n=8), atol=1e-12)


def test_two_smooth_branches():
    ps = puiseux_expand(W**2 - Z**2, order=4)
    assert [p.ramification for p in ps] == [1, 1]
    assert sorted(p.series[1].real for p in ps) == pytest.approx([-1, 1])


def test_w2_z3():
    (p,) = puiseux_expand(W**2 - Z**3, order=8)
    assert p.ramification == 2
    assert abs(abs(p.series[3]) - 1) < 1e-12
    assert np.allclose(np.delete(np.array(p.series), 3), 0, atol=1e-12)


def test_infinite_series_matches_binomial_oracle():
    # w^2 = z^3 + z^4 with z = t^2: w = t^3 sqrt(1 + t^2); sympy series coefficients
    ref = [0, 0, 0, 1, 0, 1 / 2, 0, -1 / 8, 0, 1 / 16, 0, -5 / 128, 0, 7 / 256, 0, -21 / 1024]
    (p,) = puiseux_expand(W**2 - Z**3 - Z**4, order=16)
    sign = np.sign(p.series[3].real)
    assert np.allclose(np.array(p.series) * sign, ref, atol=1e-12)
    assert not p.exact


def test_param_residual_examples():
    exact = PuiseuxParam(3, tuple(series((2, 1))), 16)
    assert param_residual(exact, cusp(), radius=0.3) < 1e-16  # exact identity up to rounding
    tail = PuiseuxParam(3, tuple(series((2, 1), (9, 1))), 16)
    r = param_residual(tail, cusp(), radius=0.3)
    # (t^2 + t^9)^3 - t^6 = 3 t^13 + 3 t^20 + t^27, maximal at real t
    assert r == pytest.approx(3 * 0.3**13 + 3 * 0.3**20 + 0.3**27, rel=1e-9)
    (p,) = puiseux_expand(W**2 - Z**3 - Z**4, order=12)
    assert param_residual(p, W**2 - Z**3 - Z**4, radius=0.1) <= 1e-10


def test_shifted_center():
    F = (Z - 0.2) ** 2 - (W + 0.1) ** 3
    (p,) = puiseux_expand(F, center=(0.2, -0.1))
    assert p.ramification == 3 and p.base_shift == (0.2 + 0j, -0.1 + 0j)
    assert param_residual(p, F) < 1e-14


def test_axis_factor_and_vertical_component():
    ps = puiseux_expand(W * (W - Z**2))
    assert len(ps) == 2 and all(p.ramification == 1 for p in ps)
    with pytest.raises(VerticalComponent):
        puiseux_expand(Z * (W**2 - Z) + Z**2 * W)


def test_errors():
    with pytest.raises(NonSquareFree):
        puiseux_expand((W**2 - Z**3) ** 2)
    with pytest.raises(ValueError):
        puiseux_expand(cusp(), center=(1, 0))


def test_smooth_point_matches_implicit_iteration():
    # w^3 + w - z near (0, 0): w = z - z^3 + 3 z^5 - 12 z^7 + ...
    (p,) = puiseux_expand(W**3 + W - Z, order=10)
    assert p.ramification == 1
    assert np.allclose(p.series[:9], [0, 1, 0, -1, 0, 3, 0, -12, 0], atol=1e-12)


# -- properties -------------------------------------------------------------

small = st.floats(-1, 1).filter(lambda x: abs(x) > 0.1)


@given(small, small, st.integers(2, 4), st.integers(3, 5))
def test_ramification_sum_equals_local_multiplicity(a, b, n, m):
    # w - b z divides w^n - a z^m iff n == m and b^n == a (F not square-free)
    assume(not (n == m and abs(b**n - a) < 1e-3))
    F = (W**n - a * Z**m) * (W - b * Z)
    ps = puiseux_expand(F)
    local = min(j for (i, j) in F.terms if i == 0)  # order of F(0, w) at w = 0
    assert sum(p.ramification for p in ps) == local
    for p in ps:
        assert param_residual(p, F, radius=0.2) < 1e-12


@given(st.integers(0, 2))
def test_reparametrization_invariance(k):
    (p,) = puiseux_expand(W**2 - Z**3 - Z**4, order=16)
    zeta = np.exp(2j * np.pi * k / p.ramification)
    t = 0.2 * np.exp(2j * np.pi * np.arange(64) / 64)
    z1, w1 = p(t)
    z2, w2 = p(zeta * t)
    for a, b in zip(z1, w1):
        assert np.min(np.abs(z2 - a) + np.abs(w2 - b)) < 1e-12

import pytest
from hypothesis import given, strategies as st

from conftest import W, Z, cusp, shifted_cusp
from curvelab.errors import DegenerateSlice, OnDiscriminant
from curvelab.monodromy import LoopSpec, branch_count, cycle_lengths, locate_nnc, track
from curvelab.polycalc import Disk
from curvelab.puiseux import puiseux_expand

BASE = Disk(0, 0.9)


def test_cusp_one_turn_is_three_cycle():
    res = track(cusp(), LoopSpec(0, 0.5, 1))
    assert res.cycles == [3] and res.order == 3
    assert sorted(res.permutation) == [0, 1, 2]


def test_cusp_three_turns_identity():
    assert track(cusp(), LoopSpec(0, 0.5, 3)).is_identity()


def test_loop_not_enclosing_discriminant():
    assert track(cusp(), LoopSpec(0.5, 0.1, 1)).is_identity()


def test_power_of_order_is_identity():
    res = track(W**2 - Z**3, LoopSpec(0, 0.4))
    assert res.power(res.order) == tuple(range(2))
    assert track(W**2 - Z**3, LoopSpec(0, 0.4, res.order)).is_identity()


def test_loop_validation():
    with pytest.raises(ValueError):
        LoopSpec(0, 0.5, steps_per_turn=8)
    with pytest.raises(ValueError):
        LoopSpec(0, -1)


def test_start_on_discriminant():
    with pytest.raises(OnDiscriminant):
        track(cusp(), LoopSpec(-0.3, 0.3))  # starts at z = 0


def test_degenerate_leading_coefficient_on_loop():
    with pytest.raises(DegenerateSlice):
        track((Z - 0.5) * W**2 - 1, LoopSpec(0, 0.5))


def test_branch_count_examples():
    assert branch_count(cusp(), Disk(0, 0.5)) == [3]
    assert branch_count(W**2 - Z**2, Disk(0, 0.5)) == [1, 1]
    assert branch_count(cusp() * (W - 0.8), Disk(0, 0.5)) == [3, 1]


def test_locate_nnc_examples():
    assert [abs(q) < 1e-7 for q in locate_nnc(cusp(), BASE)] == [True]
    assert locate_nnc(W**2 - Z**2, BASE) == []
    got = locate_nnc(shifted_cusp(0.01, 0.01), BASE)
    assert len(got) == 1 and abs(got[0] - 0.01) < 1e-9


def test_cycle_lengths():
    assert cycle_lengths((1, 0, 2, 4, 3)) == [2, 2, 1]


@pytest.mark.parametrize("F", [cusp(), W**2 - Z**3, W**2 - Z**2, (W**2 - Z**3) * (W - Z)])
def test_cycles_match_puiseux_ramification(F):
    ram = sorted((p.ramification for p in puiseux_expand(F)), reverse=True)
    assert branch_count(F, Disk(0, 0.3)) == ram


@given(st.floats(0.05, 0.85), st.floats(0.5, 3.0))
def test_conjugation_invariance(r, scale):
    F = cusp() - 0.0025  # discriminant at +-0.05
    if r < 0.06:
        r = 0.06
    a = track(F, LoopSpec(0, r)).cycles
    b = track(F, LoopSpec(0, min(0.9, r * scale) if r * scale > 0.06 else 0.07)).cycles
    assert a == b


@given(st.complex_numbers(max_magnitude=0.8, allow_nan=False, allow_infinity=False), st.floats(0.01, 0.3))
def test_homotopy_triviality(c, r):
    if abs(c) <= r * 1.05:
        return
    assert track(cusp(), LoopSpec(c, r)).is_identity()


@given(st.floats(-0.05, 0.05), st.floats(-0.05, 0.05))
def test_branch_count_multiplicativity(e1, e2):
    # each component of W's count is a multiple of a component of V's
    v = branch_count(cusp(), Disk(0, 0.5))
    w = branch_count(shifted_cusp(e1, e2), Disk(0, 0.5))
    assert sum(w) == sum(v)
    assert all(any(c % k == 0 for k in v) for c in w)

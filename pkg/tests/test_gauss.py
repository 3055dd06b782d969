"""Triangular decomposition, current images, mode extraction, twists."""

import pytest

from yangian_sl3.gauss import (
    CurrentSystem,
    gauss_decompose,
    scalar_twist,
    verify_cw_match,
    verify_gauss_product,
)
from yangian_sl3.linalg import OpMatrix, mat_eq
from yangian_sl3.rtt import build_eval_rep, build_trivial_rep, tensor_rep
from yangian_sl3.scalars import (
    HALF,
    P_ONE,
    P_ZERO,
    PoleAtExpansionPoint,
    Q,
    RationalFunction,
    u_minus,
)

A = Q(1, 3)


def unit(r, c, den):
    num = [[P_ZERO] * 3 for _ in range(3)]
    num[r][c] = P_ONE
    return OpMatrix(num, den)


@pytest.fixture(scope="module")
def cs():
    return CurrentSystem(build_eval_rep(A))


def test_factorization_reassembles():
    assert verify_gauss_product(build_eval_rep(A))


def test_factorization_reassembles_trivial():
    assert verify_gauss_product(build_trivial_rep())


def test_current_images_on_eval_rep(cs):
    wa = u_minus(A)
    wah = u_minus(A - HALF)
    eye = OpMatrix.identity(3)
    expected = {
        "e1": unit(1, 0, wa),
        "f1": unit(0, 1, wa),
        "e2": unit(2, 1, wah),
        "f2": unit(1, 2, wah),
        "e3": unit(2, 0, wa),
        "f3": unit(0, 2, wa),
        "h1": eye + unit(1, 1, wa) - unit(0, 0, wa),
        "h2": eye + unit(2, 2, wah) - unit(1, 1, wah),
        "h3": eye + unit(2, 2, wa) - unit(0, 0, wa),
    }
    for name, exp in expected.items():
        assert cs.current(name) == exp, name


def test_diagonal_factor_images(cs):
    wa = u_minus(A)
    eye = OpMatrix.identity(3)
    assert cs.gf.k2 == eye + unit(1, 1, wa) - unit(0, 0, wa * wa)
    assert cs.gf.k3 == eye + unit(2, 2, wa) - (unit(0, 0, wa * wa) + unit(1, 1, wa * wa))


def test_commutator_routes_match_triangular_factors(cs):
    for name, ok in verify_cw_match(cs):
        assert ok, name


def test_commutator_routes_match_on_tensor_rep():
    tens = tensor_rep(build_eval_rep(0), build_eval_rep(1))
    assert verify_gauss_product(tens)
    for name, ok in verify_cw_match(CurrentSystem(tens)):
        assert ok, name


@pytest.mark.parametrize("k", range(-3, 4))
def test_raising_modes_are_powers_of_eval_point(cs, k):
    m = cs.mode("e1", k)
    exp = [[A**k if (r, c) == (1, 0) else Q(0) for c in range(3)] for r in range(3)]
    assert mat_eq(m, exp)


@pytest.mark.parametrize("k", range(-2, 3))
def test_second_root_modes_carry_half_shift(cs, k):
    m = cs.mode("e2", k)
    exp = [
        [(A - HALF) ** k if (r, c) == (2, 1) else Q(0) for c in range(3)]
        for r in range(3)
    ]
    assert mat_eq(m, exp)


def test_diagonal_mode_zero_is_weight_difference(cs):
    m = cs.mode("h3", 0)
    exp = [[Q(0)] * 3 for _ in range(3)]
    exp[0][0], exp[2][2] = Q(-1), Q(1)
    assert mat_eq(m, exp)


def test_negative_mode_at_zero_eval_point_raises():
    cs0 = CurrentSystem(build_eval_rep(0))
    with pytest.raises(PoleAtExpansionPoint):
        cs0.mode("e1", -1)


def test_scalar_twist_leaves_currents_invariant():
    rep = build_eval_rep(A)
    cs1 = CurrentSystem(rep)
    tw = scalar_twist(rep, u_minus(-2), u_minus(5))
    cs2 = CurrentSystem(tw)
    for name in ("e1", "e2", "e3", "f1", "f2", "f3", "h1", "h2", "h3"):
        assert cs2.current(name) == cs1.current(name), name
    assert cs2.gf.k1 == cs1.gf.k1 * RationalFunction(u_minus(-2), u_minus(5))


def test_mode_caching_is_stable(cs):
    first = cs.mode("e1", 2)
    again = cs.mode("e1", 2)
    assert first is again

"""Exact scalar layer: polynomials, rational functions, truncated series."""

import pytest
from hypothesis import given, settings, strategies as st

from yangian_sl3.scalars import (
    AT_INFINITY,
    AT_ZERO,
    EvaluationAtPole,
    P_ONE,
    P_ZERO,
    PoleAtExpansionPoint,
    Polynomial,
    Q,
    RationalFunction,
    TruncatedSeries,
    ZeroDenominator,
    binomial,
    parse_q,
    poly_gcd,
    qstr,
    u_minus,
)

rationals = st.builds(Q, st.integers(-30, 30), st.integers(1, 12))
polys = st.lists(rationals, max_size=4).map(Polynomial)


def test_qstr_roundtrip():
    for s in ["3", "-4", "0", "7/2", "-9/13"]:
        assert qstr(parse_q(s)) == s
    assert parse_q(" 6/4 ") == Q(3, 2)
    with pytest.raises(ZeroDenominator):
        parse_q("1/0")


def test_binomial_values():
    assert binomial(5, 2) == 10
    assert binomial(4, 0) == 1
    assert binomial(3, 5) == 0
    assert binomial(3, -1) == 0


def test_polynomial_basics():
    p = Polynomial([1, 2, 3])
    assert p.degree == 2
    assert p[0] == 1 and p[5] == 0
    assert p.evaluate(2) == 1 + 4 + 12
    assert Polynomial([0, 0]).is_zero()
    assert (p - p).is_zero()
    assert str(P_ZERO) == "0"


def test_polynomial_shift_matches_evaluation():
    p = Polynomial([1, 2, 3])
    q = p.shift(Q(1, 2))
    for x in [0, 1, Q(-3, 7)]:
        assert q.evaluate(x) == p.evaluate(Q(x) + Q(1, 2))


@settings(derandomize=True, max_examples=60)
@given(polys, polys)
def test_polynomial_divmod_identity(a, b):
    if b.is_zero():
        with pytest.raises(ZeroDenominator):
            a.divmod(b)
        return
    q, r = a.divmod(b)
    assert q * b + r == a
    assert r.degree < b.degree


@settings(derandomize=True, max_examples=40)
@given(polys, polys, polys)
def test_poly_gcd_divides(a, b, c):
    g = poly_gcd(a * c, b * c)
    if not c.is_zero():
        # common factor c must divide the gcd
        assert g.divmod(c.monic())[1].is_zero() or (a.is_zero() and b.is_zero())


def test_rational_function_normalization():
    f = RationalFunction(u_minus(1) * u_minus(2) * Polynomial.const(6), u_minus(2) * u_minus(3))
    assert f.den == u_minus(3)
    assert f.num == u_minus(1) * Polynomial.const(6)
    assert f.den.leading() == 1
    with pytest.raises(ZeroDenominator):
        RationalFunction(P_ONE, P_ZERO)


def test_rational_function_field_ops():
    f = RationalFunction(P_ONE, u_minus(1))
    g = RationalFunction(u_minus(0), u_minus(2))
    h = (f + g) * (f - g)
    assert h == f * f - g * g
    assert (f / f) == RationalFunction(P_ONE)
    assert f.evaluate(3) == Q(1, 2)
    with pytest.raises(EvaluationAtPole):
        f.evaluate(1)
    with pytest.raises(ZeroDenominator):
        RationalFunction(P_ZERO).inv()


def test_rational_function_shift():
    f = RationalFunction(P_ONE, u_minus(1))
    g = f.shift(Q(1, 2))
    assert g.evaluate(Q(3, 2)) == f.evaluate(2)


def test_series_at_infinity_geometric():
    f = RationalFunction(P_ONE, u_minus(1))
    s = f.series_at_infinity(3)
    assert s.at == AT_INFINITY
    assert [s.coeff(m) for m in range(4)] == [0, 1, 1, 1]


def test_series_at_zero_geometric():
    f = RationalFunction(P_ONE, u_minus(1))
    s = f.series_at_zero(2)
    assert s.at == AT_ZERO
    assert [s.coeff(m) for m in range(3)] == [-1, -1, -1]


def test_series_pole_at_zero_raises():
    f = RationalFunction(P_ONE, u_minus(0))
    with pytest.raises(PoleAtExpansionPoint):
        f.series_at_zero(2)


def test_series_coeff_out_of_window():
    s = RationalFunction(P_ONE, u_minus(1)).series_at_infinity(2)
    with pytest.raises(IndexError):
        s.coeff(3)


@settings(derandomize=True, max_examples=40)
@given(polys, polys)
def test_series_multiplicativity_at_infinity(a, b):
    da = u_minus(1) * u_minus(-2) * (a if not a.is_zero() else P_ONE)
    db = u_minus(3) * (b if not b.is_zero() else P_ONE)
    f = RationalFunction(P_ONE, da)
    g = RationalFunction(u_minus(0), db)
    k = 6
    prod = (f * g).series_at_infinity(k)
    assert prod.agrees_with(f.series_at_infinity(k) * g.series_at_infinity(k))


def test_series_shift_consistency():
    # expanding f(u+1) agrees with re-expanding the shifted function
    f = RationalFunction(P_ONE, u_minus(2))
    lhs = f.shift(1).series_at_infinity(5)
    # 1/(u-1): geometric
    rhs = RationalFunction(P_ONE, u_minus(1)).series_at_infinity(5)
    assert lhs == rhs


def test_series_arithmetic_and_equality():
    f = RationalFunction(P_ONE, u_minus(1))
    s = f.series_at_infinity(4)
    z = s - s
    assert z.is_zero()
    t = s + (-s)
    assert t == z
    assert (2 * s).coeff(2) == 2
    with pytest.raises(ValueError):
        s + f.series_at_zero(4)


def test_series_agrees_with_window():
    f = RationalFunction(P_ONE, u_minus(1))
    assert f.series_at_infinity(2).agrees_with(f.series_at_infinity(5))

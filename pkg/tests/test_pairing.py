"""Hopf pairing between the nonnegative and negative mode halves.

The closed-form generator table is checked against an independent
oracle that expands the defining rational kernels as series in the
region |u| > |v|.  Word-level values are checked against hand
computations and against the two coproduct splitting identities.
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from yangian_sl3.modes import ModeAlgebra, NCPoly, WindowExhausted
from yangian_sl3.pairing import (
    HopfPairing,
    TensorPoly,
    _GEN_LETTERS,
    _word_cap,
    oracle_pair_value,
    run_pairing_suite,
)
from yangian_sl3.scalars import ONE, Q, ZERO


@pytest.fixture(scope="module")
def alg():
    return ModeAlgebra(window=4)


@pytest.fixture(scope="module")
def hp(alg):
    return HopfPairing(alg)


# frozen generator pairings, hand-checked against the kernel expansions
SPOT_VALUES = [
    (("e", 1, 0), ("f", 1, -1), Q(-1)),
    (("f", 2, 1), ("e", 2, -2), Q(-1)),
    (("e", 1, 0), ("f", 1, -2), Q(0)),
    (("e", 1, 0), ("f", 2, -1), Q(0)),
    (("e", 3, 2), ("f", 3, -3), Q(-1)),
    (("h", 1, 0), ("h", 1, -1), Q(-2)),
    (("h", 1, 0), ("h", 2, -1), Q(1)),
    (("h", 1, 1), ("h", 1, -1), Q(-2)),
    (("h", 1, 1), ("h", 1, -2), Q(-2)),
    (("h", 2, 2), ("h", 1, -2), Q(-1)),
    (("h", 1, 0), ("h", 1, -2), Q(0)),
    (("e", 1, 0), ("e", 1, -1), Q(0)),
    (("h", 1, 0), ("f", 1, -1), Q(0)),
]


def test_oracle_spot_values():
    for gx, gy, want in SPOT_VALUES:
        assert oracle_pair_value(gx, gy) == want, (gx, gy)


def test_base_table_spot_values(hp):
    for gx, gy, want in SPOT_VALUES:
        assert hp.base_pair(gx, gy) == want, (gx, gy)


def test_table_matches_oracle_across_window(alg, hp):
    checked = 0
    for fx, rx in _GEN_LETTERS:
        for kx in range(0, alg.window + 1):
            for fy, ry in _GEN_LETTERS:
                for ky in range(-alg.window - 1, 0):
                    gx, gy = (fx, rx, kx), (fy, ry, ky)
                    want = oracle_pair_value(gx, gy)
                    assert hp.base_pair(gx, gy) == want, (gx, gy)
                    assert hp.pair(NCPoly.gen(gx), NCPoly.gen(gy)) == want, (gx, gy)
                    checked += 1
    assert checked == 40 * 40


@settings(max_examples=200, deadline=None)
@given(
    ix=st.integers(0, 7),
    iy=st.integers(0, 7),
    kx=st.integers(0, 8),
    ky=st.integers(-9, -1),
)
def test_table_matches_oracle_beyond_window(ix, iy, kx, ky):
    # both routes are closed under arbitrary modes, not just window ones
    alg = ModeAlgebra(window=4)
    hp = HopfPairing(alg)
    fx, rx = _GEN_LETTERS[ix]
    fy, ry = _GEN_LETTERS[iy]
    gx, gy = (fx, rx, kx), (fy, ry, ky)
    assert hp.base_pair(gx, gy) == oracle_pair_value(gx, gy)


def test_pair_rejects_wrong_sign_modes(hp):
    with pytest.raises(ValueError):
        hp.pair(NCPoly.gen(("e", 1, -1)), NCPoly.gen(("f", 1, -1)))
    with pytest.raises(ValueError):
        hp.pair(NCPoly.gen(("e", 1, 0)), NCPoly.gen(("f", 1, 0)))


def _tp(pairs) -> TensorPoly:
    out = TensorPoly.zero(2)
    for l1, l2, c in pairs:
        t = TensorPoly(2, {(tuple(l1), tuple(l2)): Q(c)})
        out = out + t
    return out


def test_coproduct_anchors(hp):
    cop = hp.cop
    e10 = ("e", 1, 0)
    assert cop.of_gen(e10) == _tp([
        ([e10], [], 1),
        ([], [e10], 1),
    ])
    e11 = ("e", 1, 1)
    assert cop.of_gen(e11) == _tp([
        ([e11], [], 1),
        ([], [e11], 1),
        ([("h", 1, 0)], [("e", 1, 0)], 1),
        ([("f", 2, 0)], [("e", 3, 0)], 1),
    ])
    f11 = ("f", 1, 1)
    assert cop.of_gen(f11) == _tp([
        ([f11], [], 1),
        ([], [f11], 1),
        ([("f", 1, 0)], [("h", 1, 0)], 1),
        ([("f", 3, 0)], [("e", 2, 0)], 1),
    ])
    e21 = ("e", 2, 1)
    assert cop.of_gen(e21) == _tp([
        ([e21], [], 1),
        ([], [e21], 1),
        ([("h", 2, 0)], [("e", 2, 0)], 1),
        ([("f", 1, 0)], [("e", 3, 0)], -1),
    ])
    h11 = ("h", 1, 1)
    assert cop.of_gen(h11) == _tp([
        ([h11], [], 1),
        ([], [h11], 1),
        ([("h", 1, 0)], [("h", 1, 0)], 1),
        ([("f", 1, 0)], [("e", 1, 0)], -2),
        ([("f", 2, 0)], [("e", 2, 0)], 1),
        ([("f", 3, 0)], [("e", 3, 0)], -1),
    ])
    h21 = ("h", 2, 1)
    assert cop.of_gen(h21) == _tp([
        ([h21], [], 1),
        ([], [h21], 1),
        ([("h", 2, 0)], [("h", 2, 0)], 1),
        ([("f", 1, 0)], [("e", 1, 0)], 1),
        ([("f", 2, 0)], [("e", 2, 0)], -2),
        ([("f", 3, 0)], [("e", 3, 0)], -1),
    ])


def test_negative_diagonal_coproduct_raises(hp):
    with pytest.raises(WindowExhausted):
        hp.cop.of_gen(("h", 1, -1))


# word pairings computed by hand through the splitting identities
WORD_VALUES = [
    (((("e", 1, 1),), (("e", 2, -1), ("f", 3, -1))), Q(1)),
    (((("h", 1, 0), ("h", 1, 0)), (("h", 1, -1),)), Q(-4)),
    (((("e", 1, 0), ("f", 1, 0)), (("h", 1, -1),)), Q(0)),
    (((("f", 1, 0), ("e", 1, 0)), (("h", 1, -1),)), Q(2)),
    (((("h", 1, 1),), (("f", 1, -1), ("e", 1, -1))), Q(0)),
    (((("h", 1, 1),), (("e", 1, -1), ("f", 1, -1))), Q(-2)),
]


def test_word_pairings_hand_values(hp):
    for (wx, wy), want in WORD_VALUES:
        assert hp._pair_words(wx, wy) == want, (wx, wy)


def test_word_pairing_support_bound(hp):
    # a word consumes at most sum(mode+1) letters
    wx = (("e", 1, 0),)
    assert _word_cap(wx) == 1
    for wy in [
        (("f", 1, -1), ("f", 1, -1)),
        (("e", 1, -1), ("h", 1, -2), ("f", 2, -1)),
    ]:
        assert hp._pair_words(wx, wy) == ZERO


def test_right_split_identity(alg, hp):
    # <x, y1 y2> agrees with pairing the coproduct legs of x
    xs = [("e", 1, 1), ("f", 2, 1), ("h", 1, 1), ("e", 3, 0)]
    ys = [("e", 1, -1), ("f", 1, -1), ("f", 3, -1), ("h", 2, -1)]
    for x in xs:
        dx = hp.cop.of_gen(x)
        for y1 in ys:
            for y2 in ys:
                lhs = hp._pair_words((x,), (y1, y2))
                rhs = ZERO
                for (a, b), c in dx.terms.items():
                    rhs += c * hp._pair_words(a, (y1,)) * hp._pair_words(b, (y2,))
                assert lhs == rhs, (x, y1, y2)


def test_left_split_identity(alg, hp):
    # <x1 x2, y> agrees with pairing x2 (x) x1 against the legs of y
    xs = [("e", 1, 0), ("e", 1, 1), ("f", 2, 0), ("h", 1, 1), ("e", 2, 0)]
    ys = [("e", 1, -1), ("e", 2, -2), ("f", 1, -1), ("f", 3, -2)]
    for x1 in xs:
        for x2 in xs:
            prod = alg.straighten(NCPoly.word((x1, x2)))
            for y in ys:
                lhs = hp.pair(prod, NCPoly.gen(y))
                dy = hp.cop.of_gen(y, length_cap=(x2[2] + 1, x1[2] + 1))
                rhs = ZERO
                for (a, b), c in dy.terms.items():
                    rhs += c * hp._pair_words((x2,), a) * hp._pair_words((x1,), b)
                assert lhs == rhs, (x1, x2, y)


def test_pairing_suite_green():
    rep = run_pairing_suite(window=4)
    assert rep.passed, rep.format_text()
    names = [r.name for r in rep.results]
    assert "pairing.table_vs_series_oracle" in names
    assert "pairing.hopf_compatibility_right_split" in names
    assert "pairing.hopf_compatibility_left_split" in names
    assert "pairing.support_finiteness" in names

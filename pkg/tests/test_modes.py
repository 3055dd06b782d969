"""Mode algebra: bracket rules, normal ordering, consistency checks.

The bracket rule system is cross-checked against commutators of mode
matrices in two representations; normal ordering is checked for
confluence between the two rewriting strategies and for preservation of
representation images.
"""

import itertools
import random

import pytest

from yangian_sl3.gauss import CurrentSystem
from yangian_sl3.linalg import mat_eq, mat_mul, mat_sub
from yangian_sl3.modes import (
    ModeAlgebra,
    NCPoly,
    WindowExhausted,
    gen_image,
    gen_key,
    rep_image,
)
from yangian_sl3.rtt import build_eval_rep, tensor_rep
from yangian_sl3.scalars import HALF, ONE, Q

FAMS_ROOTS = [
    ("e", 1), ("e", 2), ("e", 3),
    ("f", 1), ("f", 2), ("f", 3),
    ("h", 1), ("h", 2),
]


@pytest.fixture(scope="module")
def alg():
    return ModeAlgebra(window=4)


@pytest.fixture(scope="module")
def systems():
    r1 = build_eval_rep(Q(2))
    rt = tensor_rep(build_eval_rep(Q(3)), build_eval_rep(Q(11, 2)))
    return [CurrentSystem(r1), CurrentSystem(rt)]


def comm(A, B):
    return mat_sub(mat_mul(A, B), mat_mul(B, A))


class TestNCPoly:
    def test_arithmetic(self):
        a = NCPoly.word((("e", 1, 0),), 2)
        b = NCPoly.word((("f", 1, 0),), 3)
        p = a + b
        assert len(p) == 2
        assert (p - a) == b
        q = a * b
        assert q.terms == {(("e", 1, 0), ("f", 1, 0)): Q(6)}
        assert a.scale(0).is_zero()
        assert (a - a).is_zero()

    def test_anticommutator(self):
        a = NCPoly.gen(("e", 1, 0))
        b = NCPoly.gen(("e", 1, 1))
        s = a.anticommutator(b)
        assert s.terms == {
            (("e", 1, 0), ("e", 1, 1)): ONE,
            (("e", 1, 1), ("e", 1, 0)): ONE,
        }

    def test_one_is_empty_word(self):
        one = NCPoly.one()
        a = NCPoly.gen(("h", 1, 0))
        assert one * a == a
        assert a * one == a


class TestGeneratorPlumbing:
    def test_diagonal_root_3_rejected(self, alg):
        with pytest.raises(ValueError):
            alg.gen("h", 3, 0)

    def test_bad_family_rejected(self, alg):
        with pytest.raises(ValueError):
            alg.gen("x", 1, 0)

    def test_window_bounds(self, alg):
        alg.gen("e", 1, 4)
        alg.gen("e", 1, -5)
        with pytest.raises(WindowExhausted):
            alg.gen("e", 1, 5)
        with pytest.raises(WindowExhausted):
            alg.gen("e", 1, -6)

    def test_pbw_key_order(self):
        word = (
            ("e", 1, 0), ("e", 3, 0), ("e", 2, 0),
            ("h", 1, 0), ("h", 2, 0),
            ("f", 2, 0), ("f", 3, 0), ("f", 1, 0),
        )
        keys = [gen_key(g) for g in word]
        assert keys == sorted(keys)


class TestBracketRules:
    def test_same_generator_zero(self, alg):
        assert alg.bracket(("e", 1, 2), ("e", 1, 2)).is_zero()

    def test_antisymmetry(self, alg):
        a, b = ("e", 1, 2), ("e", 1, 0)
        assert alg.bracket(b, a) == -alg.bracket(a, b)

    def test_same_root_square_case(self, alg):
        # [e1[1], e1[0]] = e1[0]^2
        br = alg.bracket(("e", 1, 1), ("e", 1, 0))
        assert br.terms == {(("e", 1, 0), ("e", 1, 0)): ONE}

    def test_same_root_anticommutator_case(self, alg):
        # [e1[2], e1[0]] = {e1[1], e1[0]}
        br = alg.bracket(("e", 1, 2), ("e", 1, 0))
        g1, g0 = ("e", 1, 1), ("e", 1, 0)
        assert br.terms == {(g1, g0): ONE, (g0, g1): ONE}

    def test_same_root_lowering_negated(self, alg):
        bre = alg.bracket(("e", 2, 1), ("e", 2, 0))
        brf = alg.bracket(("f", 2, 1), ("f", 2, 0))
        assert brf == -NCPoly(
            {tuple(("f", r, m) for _, r, m in w): c for w, c in bre.terms.items()}
        )

    def test_same_root_negative_modes(self, alg):
        # [e1[0], e1[-1]] = e1[-1]^2
        br = alg.bracket(("e", 1, 0), ("e", 1, -1))
        assert br.terms == {(("e", 1, -1), ("e", 1, -1)): ONE}

    def test_cross_12_base(self, alg):
        for k in range(-3, 4):
            assert alg.bracket(("e", 1, k), ("e", 2, 0)) == -alg.poly_gen("e", 3, k)
            assert alg.bracket(("f", 1, k), ("f", 2, 0)) == alg.poly_gen("f", 3, k)

    def test_ef_diagonal(self, alg):
        assert alg.bracket(("e", 1, 2), ("f", 1, -1)) == alg.poly_gen("h", 1, 1)
        assert alg.bracket(("e", 2, 0), ("f", 2, 0)) == alg.poly_gen("h", 2, 0)
        assert alg.bracket(("e", 1, 0), ("f", 2, 3)).is_zero()
        assert alg.bracket(("e", 2, 1), ("f", 1, 0)).is_zero()

    def test_long_root_ef_mode_zero(self, alg):
        # [e3[0], f3[0]] = h1[0] + h2[0]
        br = alg.bracket(("e", 3, 0), ("f", 3, 0))
        assert br == alg.poly_gen("h", 1, 0) + alg.poly_gen("h", 2, 0)

    def test_long_root_ef_matches_composite(self, alg):
        for k, l in [(1, 0), (0, 1), (2, -1), (-1, 0), (-2, -1), (1, 1)]:
            assert alg.bracket(("e", 3, k), ("f", 3, l)) == alg.h3_tilde(k + l)

    def test_h3_tilde_mode_minus_one_literal(self, alg):
        h1, h2 = ("h", 1, -1), ("h", 2, -1)
        e2, f2 = ("e", 2, -1), ("f", 2, -1)
        expected = (
            NCPoly.gen(h1)
            + NCPoly.gen(h2)
            - NCPoly.word((h1, h2))
            - NCPoly.gen(e2).anticommutator(NCPoly.gen(f2)).scale(HALF)
            + (
                NCPoly.gen(h1).anticommutator(NCPoly.gen(e2))
            ).anticommutator(NCPoly.gen(f2)).scale(Q(1, 4))
        )
        assert alg.h3_tilde(-1) == expected

    def test_diagonal_zero_mode_action(self, alg):
        assert alg.bracket(("h", 1, 0), ("e", 1, 2)) == alg.poly_gen("e", 1, 2).scale(2)
        assert alg.bracket(("h", 1, 0), ("e", 2, 2)) == alg.poly_gen("e", 2, 2).scale(-1)
        assert alg.bracket(("h", 2, 0), ("e", 3, -1)) == alg.poly_gen("e", 3, -1)
        assert alg.bracket(("h", 1, 0), ("f", 1, 0)) == alg.poly_gen("f", 1, 0).scale(-2)
        assert alg.bracket(("h", 2, 0), ("f", 3, 1)) == alg.poly_gen("f", 3, 1).scale(-1)

    def test_diagonal_diagonal_zero(self, alg):
        for ra, rb in itertools.product((1, 2), repeat=2):
            assert alg.bracket(("h", ra, 2), ("h", rb, -1)).is_zero()

    def test_diagonal_minus_one_boundary_literal(self, alg):
        # [h1[-1], e1[-1]] = 2 e1[-2] - {h1[-1], e1[-2]}
        br = alg.bracket(("h", 1, -1), ("e", 1, -1))
        e = NCPoly.gen(("e", 1, -2))
        h = NCPoly.gen(("h", 1, -1))
        assert br == e.scale(2) - h.anticommutator(e)

    def test_companion_mode_zero(self, alg):
        assert alg.companion_mode("e", 0) == -alg.poly_gen("e", 3, 0)

    def test_companion_mode_one(self, alg):
        e10, e20 = NCPoly.gen(("e", 1, 0)), NCPoly.gen(("e", 2, 0))
        expected = e10.anticommutator(e20).scale(HALF) - alg.poly_gen("e", 3, 1)
        assert alg.companion_mode("e", 1) == expected


class TestBracketsAgainstRepresentations:
    def test_all_pairs_in_window(self, alg, systems):
        failures = []
        checked = exhausted = 0
        for (fa, ra), (fb, rb) in itertools.product(FAMS_ROOTS, repeat=2):
            for ka in range(-3, 4):
                for kb in range(-3, 4):
                    a, b = (fa, ra, ka), (fb, rb, kb)
                    try:
                        br = alg.bracket(a, b)
                    except WindowExhausted:
                        exhausted += 1
                        continue
                    checked += 1
                    for cs in systems:
                        lhs = comm(gen_image(a, cs), gen_image(b, cs))
                        if not mat_eq(lhs, rep_image(br, cs)):
                            failures.append((a, b, cs.rep.label))
        assert not failures, failures[:10]
        assert checked == 2456
        assert exhausted == 680

    def test_composite_diagonal_matches_current_modes(self, alg, systems):
        for cs in systems:
            for m in range(-3, 4):
                assert mat_eq(rep_image(alg.h3_tilde(m), cs), cs.mode("h3", m))

    def test_companion_matches_current_modes(self, alg, systems):
        for cs in systems:
            for m in range(-3, 4):
                assert mat_eq(
                    rep_image(alg.companion_mode("e", m), cs), cs.mode("e3p", m)
                )
                assert mat_eq(
                    rep_image(alg.companion_mode("f", m), cs), cs.mode("f3p", m)
                )


class TestWindowBoundaries:
    def test_negative_diagonal_against_nonnegative_exhausts(self, alg):
        with pytest.raises(WindowExhausted):
            alg.bracket(("h", 1, -1), ("e", 1, 0))
        with pytest.raises(WindowExhausted):
            alg.bracket(("f", 2, 3), ("h", 2, -2))

    def test_mode_growth_exhausts(self, alg):
        # the cross recursion walks the first mode up past the window
        with pytest.raises(WindowExhausted):
            alg.bracket(("e", 1, 2), ("e", 2, 3))

    def test_mode_sum_exhausts(self, alg):
        with pytest.raises(WindowExhausted):
            alg.bracket(("e", 1, -3), ("f", 1, -3))

    def test_exhaustion_census(self, alg):
        hneg = xneg = other = 0
        for (fa, ra), (fb, rb) in itertools.product(FAMS_ROOTS, repeat=2):
            for ka in range(-3, 4):
                for kb in range(-3, 4):
                    try:
                        alg.bracket((fa, ra, ka), (fb, rb, kb))
                    except WindowExhausted:
                        if fa == "h" and ka < 0 and fb in "ef" and kb >= 0:
                            hneg += 1
                        elif fb == "h" and kb < 0 and fa in "ef" and ka >= 0:
                            xneg += 1
                        else:
                            other += 1
        assert (hneg, xneg, other) == (144, 144, 392)


class TestStraightening:
    def test_identity_on_normal_word(self, alg):
        w = (("e", 1, 0), ("h", 1, 1), ("f", 2, 0))
        p = NCPoly.word(w, Q(5, 3))
        assert alg.straighten(p) == p

    def test_single_swap(self, alg):
        # f1[0] e1[0] -> e1[0] f1[0] + [f1[0], e1[0]] = e1[0] f1[0] - h1[0]
        p = NCPoly.word((("f", 1, 0), ("e", 1, 0)))
        nf = alg.straighten(p)
        expected = NCPoly.word((("e", 1, 0), ("f", 1, 0))) - NCPoly.gen(("h", 1, 0))
        assert nf == expected

    def test_idempotent(self, alg):
        p = NCPoly.word((("f", 2, 1), ("e", 1, 0), ("h", 1, 0)))
        nf = alg.straighten(p)
        assert alg.straighten(nf) == nf

    def test_confluence_and_images(self, alg, systems):
        rng = random.Random(7)
        genpool = [(f, r, m) for f, r in FAMS_ROOTS for m in range(0, 3)]
        words = []
        while len(words) < 200:
            length = rng.randint(2, 4)
            w = tuple(rng.choice(genpool) for _ in range(length))
            if sum(g[2] for g in w) > alg.window:
                continue
            words.append(w)
        for w in words:
            p = NCPoly.word(w)
            left = alg.straighten(p, "leftmost")
            right = alg.straighten(p, "rightmost")
            assert left == right, w
            for word in left.terms:
                assert alg.is_normal(word), (w, word)
            for cs in systems:
                assert mat_eq(rep_image(p, cs), rep_image(left, cs)), w

    def test_unknown_strategy_rejected(self, alg):
        with pytest.raises(ValueError):
            alg.straighten(NCPoly.one(), "middle")

    def test_exhausting_word_is_loud(self, alg):
        # a diagonal mode walking past the window during rewriting
        p = NCPoly.word((("e", 2, 2), ("e", 2, 2), ("e", 3, 2)))
        with pytest.raises(WindowExhausted):
            alg.straighten(p)

    def test_negative_diagonal_word_is_loud(self, alg):
        p = NCPoly.word((("h", 1, -1), ("e", 1, 0)))
        with pytest.raises(WindowExhausted):
            alg.straighten(p)

    def test_ordered_pair_vs_long_mode_independent(self, alg):
        # e1[l] e2[0] in normal form stays distinct from e3[l]
        p = NCPoly.word((("e", 1, 1), ("e", 2, 0)))
        nf = alg.straighten(p)
        assert nf == p
        assert nf != -alg.poly_gen("e", 3, 1)


class TestConsistency:
    def test_serre_all_low_modes(self, alg):
        for fam in ("e", "f"):
            for modes in itertools.product((0, 1), repeat=3):
                assert alg.serre_check(modes, fam).is_zero(), (fam, modes)

    def test_jacobi_sampled_triples(self, alg):
        rng = random.Random(13)
        pool = [(f, r, m) for f, r in FAMS_ROOTS for m in range(-1, 3)]
        trials = 0
        while trials < 50:
            a, b, c = (rng.choice(pool) for _ in range(3))
            try:
                val = alg.jacobi_check(a, b, c)
            except WindowExhausted:
                continue
            trials += 1
            assert val.is_zero(), (a, b, c)

"""Generator matrix representations and the defining exchange relation."""

import pytest

from yangian_sl3.linalg import OpMatrix, mat_is_zero, mat_mul, mat_sub
from yangian_sl3.rtt import (
    PoleCollision,
    antipode_T,
    build_eval_rep,
    build_trivial_rep,
    check_rtt,
    check_rtt_at,
    is_scalar_operator,
    quantum_det,
    rep_as_big_matrix,
    sample_pairs,
    tensor_rep,
)
from yangian_sl3.scalars import Q, RationalFunction, u_minus


@pytest.mark.parametrize("a", [0, Q(1, 2), 1])
def test_eval_rep_satisfies_exchange_relation(a):
    n, failures = check_rtt(build_eval_rep(a), n_pairs=5)
    assert n == 5
    assert failures == []


def test_untransposed_unit_convention_fails():
    # The naive matrix-unit placement does not satisfy the relation;
    # this pins the transposed convention against regressions.
    bad = build_eval_rep(0, convention="untransposed")
    _, failures = check_rtt(bad, n_pairs=2)
    assert failures


def test_trivial_rep_satisfies_exchange_relation():
    _, failures = check_rtt(build_trivial_rep(), n_pairs=3)
    assert failures == []


def test_tensor_rep_satisfies_exchange_relation():
    tens = tensor_rep(build_eval_rep(0), build_eval_rep(1))
    assert tens.dim == 9
    _, failures = check_rtt(tens, n_pairs=5)
    assert failures == []


def test_sample_pairs_deterministic_and_pole_free():
    rep = build_eval_rep(0)
    p1 = sample_pairs(rep, 25)
    p2 = sample_pairs(rep, 25)
    assert p1 == p2
    assert len(p1) == 25
    for u, v in p1:
        assert u != v
        assert u not in rep.poles and v not in rep.poles


def test_diagonal_sample_raises():
    with pytest.raises(PoleCollision):
        check_rtt_at(build_eval_rep(0), Q(1, 3), Q(1, 3))


def test_evaluate_at_pole_raises():
    with pytest.raises(PoleCollision):
        build_eval_rep(Q(1, 2)).evaluate(Q(1, 2))


def test_quantum_det_scalar_and_value():
    a = Q(1, 3)
    rep = build_eval_rep(a)
    qd = quantum_det(rep)
    assert is_scalar_operator(qd)
    # (u - a + 2) / (u - a + 1)
    expected = RationalFunction(u_minus(a - 2), u_minus(a - 1))
    assert qd.entry(0, 0) == expected


def test_quantum_det_central():
    rep = build_eval_rep(Q(1, 3))
    qd = quantum_det(rep)
    for u, v in [(Q(5, 7), Q(9, 4)), (Q(-3, 2), Q(8, 3))]:
        qdu = qd.evaluate(u)
        Tv = rep.evaluate(v)
        for k in range(3):
            for l in range(3):
                comm = mat_sub(mat_mul(qdu, Tv[k][l]), mat_mul(Tv[k][l], qdu))
                assert mat_is_zero(comm)


def test_quantum_det_reversed_ladder_not_central():
    rep = build_eval_rep(Q(1, 3))
    qd = quantum_det(rep, shifts=(1, 0, -1))
    assert not is_scalar_operator(qd)


def test_quantum_det_trivial_rep_is_one():
    qd = quantum_det(build_trivial_rep())
    assert qd == OpMatrix.identity(1)


def test_quantum_det_multiplicative_on_tensor():
    a, b = 0, Q(3, 2)
    tens = tensor_rep(build_eval_rep(a), build_eval_rep(b))
    qd = quantum_det(tens)
    assert is_scalar_operator(qd)
    expected = RationalFunction(u_minus(a - 2), u_minus(a - 1)) * RationalFunction(
        u_minus(b - 2), u_minus(b - 1)
    )
    assert qd.entry(0, 0) == expected


def test_antipode_is_two_sided_inverse():
    rep = build_eval_rep(Q(1, 3))
    s = antipode_T(rep)
    big = rep_as_big_matrix(rep)
    sbig = rep_as_big_matrix(s)
    eye = OpMatrix.identity(9)
    assert big * sbig == eye
    assert sbig * big == eye


def test_antipode_trivial_rep_is_identity():
    s = antipode_T(build_trivial_rep())
    assert rep_as_big_matrix(s) == OpMatrix.identity(3)


def test_antipode_pole_shifted():
    a = Q(1, 3)
    s = antipode_T(build_eval_rep(a))
    # inverse entries pick up a pole shifted by one
    assert a + 1 in s.poles or a - 1 in s.poles

"""Closed coproduct formulas against tensor-product currents."""

import pytest

from yangian_sl3.coproducts import (
    coproduct_formula,
    mode_anchor_checks,
    run_coproduct_suite,
    verify_coproduct_current,
)
from yangian_sl3.gauss import CurrentSystem
from yangian_sl3.linalg import mat_eq, mat_kron, mat_eye, mat_add
from yangian_sl3.rtt import build_eval_rep, tensor_rep
from yangian_sl3.scalars import Q

CURRENTS = ("e1", "e2", "e3", "f1", "f2", "f3")


@pytest.fixture(scope="module")
def systems():
    repA, repB = build_eval_rep(1), build_eval_rep(3)
    return (
        CurrentSystem(repA),
        CurrentSystem(repB),
        CurrentSystem(tensor_rep(repA, repB)),
    )


@pytest.mark.parametrize("name", CURRENTS)
def test_closed_formula_matches_tensor_current(systems, name):
    A, B, T = systems
    assert verify_coproduct_current(name, A, B, T)


def test_all_mode_anchors(systems):
    A, B, T = systems
    for name, ok in mode_anchor_checks(A, B, T):
        assert ok, name


def test_first_raising_mode_is_primitive(systems):
    A, B, T = systems
    lhs = T.mode("e1", 0)
    rhs = mat_add(
        mat_kron(A.mode("e1", 0), mat_eye(3)), mat_kron(mat_eye(3), B.mode("e1", 0))
    )
    assert mat_eq(lhs, rhs)


@pytest.fixture(scope="module")
def nested_systems():
    # the sum terms only survive when the right factor is itself a tensor
    # module: on a single evaluation module every right-leg product dies
    repA = build_eval_rep(4)
    repB = tensor_rep(build_eval_rep(0), build_eval_rep(Q(3, 2)))
    A, B = CurrentSystem(repA), CurrentSystem(repB)
    T = CurrentSystem(tensor_rep(repA, repB))
    return A, B, T


def test_formula_wrong_shift_fails(nested_systems):
    # dropping the unit shift on the lowering legs must break the identity
    A, B, T = nested_systems
    from yangian_sl3.coproducts import _alternating_sum
    from yangian_sl3.linalg import OpMatrix
    from yangian_sl3.scalars import HALF

    S = _alternating_sum(
        A.current("f1"), A.current("f3"), B.current("e1"), B.current("e3"), 6
    )
    tail = A.current("h1").kron(B.current("e1")) + (
        A.current("h1").anticommutator(A.current("f2")).kron(B.current("e3")) * HALF
    )
    wrong = A.current("e1").kron(OpMatrix.identity(9)) + S * tail
    assert not (T.current("e1") == wrong)


def test_nested_tensor_exercises_higher_sum_terms(nested_systems):
    A, B, T = nested_systems
    e1B = B.current("e1")
    assert not (e1B * e1B).is_zero()
    for name in ("e1", "f1"):
        assert verify_coproduct_current(name, A, B, T), name


def test_suite_runs_green():
    report = run_coproduct_suite(1, 3)
    assert report.passed
    assert report.counts == (13, 13)


def test_unknown_current_rejected(systems):
    A, B, _ = systems
    with pytest.raises(KeyError):
        coproduct_formula("h1", A, B)

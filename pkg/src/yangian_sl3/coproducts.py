"""Coproduct verification on tensor products of evaluation modules.

The left side of every check is a current of the tensor-product
representation, where the coproduct is already wired into the generator
matrix.  The right side assembles the closed coproduct formula from the
currents of the two factors.  Both sides are exact operator matrices in u,
so equality is an identity, not a sampling statement.

The closed formulas share one shape.  For a raising current x with
companion pair (p, q) of lowering currents and (r, s) of raising ones,

    D(x(u)) = x(u) (x) 1 + S * tail

with S the alternating binomial double sum over p(u+1)^i q(u+1)^j (x)
r(u)^i s(u)^j, and a two-term tail specific to the current.  Lowering
currents mirror this with the sum on the right and the unit shift moved
to the raising legs.  On evaluation modules the currents are nilpotent,
so the double sum truncates on its own.
"""

from __future__ import annotations

from .gauss import CurrentSystem
from .linalg import (
    OpMatrix,
    mat_add,
    mat_eq,
    mat_eye,
    mat_kron,
    mat_mul,
    mat_scale,
    mat_sub,
)
from .reporting import SuiteReport
from .rtt import build_eval_rep, tensor_rep
from .scalars import HALF, ONE, Q, binomial


def _powers(m: OpMatrix, cap: int) -> list[OpMatrix]:
    """[m^0, m^1, ...] stopping at the first zero power or at cap."""
    out = [OpMatrix.identity(m.n)]
    for _ in range(cap):
        nxt = out[-1] * m
        if nxt.is_zero():
            break
        out.append(nxt)
    return out


def _alternating_sum(
    left1: OpMatrix, left2: OpMatrix, right1: OpMatrix, right2: OpMatrix, cap: int
) -> OpMatrix:
    """sum_(i,j) (-1)^(i+j) C(i+j, i) left1^i left2^j (x) right1^i right2^j."""
    L1, L2 = _powers(left1, cap), _powers(left2, cap)
    R1, R2 = _powers(right1, cap), _powers(right2, cap)
    acc = None
    for i in range(min(len(L1), len(R1))):
        for j in range(min(len(L2), len(R2))):
            c = binomial(i + j, i)
            if (i + j) % 2:
                c = -c
            term = (L1[i] * L2[j]).kron(R1[i] * R2[j]) * c
            acc = term if acc is None else acc + term
    return acc


# companion data per current: lowering pair, raising pair, tail builder
def _delta_raising(name: str, A: CurrentSystem, B: CurrentSystem, cap: int) -> OpMatrix:
    pair = {
        "e1": ("f1", "f3", "e1", "e3"),
        "e2": ("f2", "f3p", "e2", "e3p"),
        "e3": ("f1", "f3", "e1", "e3"),
    }[name]
    p, q, r, s = pair
    S = _alternating_sum(
        A.current(p).shift(1), A.current(q).shift(1), B.current(r), B.current(s), cap
    )
    if name == "e1":
        tail = A.current("h1").kron(B.current("e1")) + (
            A.current("h1").anticommutator(A.current("f2")).kron(B.current("e3")) * HALF
        )
    elif name == "e2":
        tail = A.current("h2").kron(B.current("e2")) + (
            A.current("h2").anticommutator(A.current("f1")).kron(B.current("e3p")) * HALF
        )
    else:  # e3
        tail = A.current("h3").kron(B.current("e3")) + (
            A.current("h1").anticommutator(A.current("e2")).kron(B.current("e1")) * HALF
        )
    return A.current(name).kron(OpMatrix.identity(B.rep.dim)) + S * tail


def _delta_lowering(name: str, A: CurrentSystem, B: CurrentSystem, cap: int) -> OpMatrix:
    pair = {
        "f1": ("f1", "f3", "e1", "e3"),
        "f2": ("f2", "f3p", "e2", "e3p"),
        "f3": ("f1", "f3", "e1", "e3"),
    }[name]
    p, q, r, s = pair
    S = _alternating_sum(
        A.current(p), A.current(q), B.current(r).shift(1), B.current(s).shift(1), cap
    )
    if name == "f1":
        head = A.current("f1").kron(B.current("h1")) + (
            A.current("f3").kron(B.current("h1").anticommutator(B.current("e2"))) * HALF
        )
    elif name == "f2":
        head = A.current("f2").kron(B.current("h2")) + (
            A.current("f3p").kron(B.current("h2").anticommutator(B.current("e1"))) * HALF
        )
    else:  # f3
        head = A.current("f3").kron(B.current("h3")) + (
            A.current("f1").kron(B.current("h1").anticommutator(B.current("f2"))) * HALF
        )
    return OpMatrix.identity(A.rep.dim).kron(B.current(name)) + head * S


def coproduct_formula(name: str, A: CurrentSystem, B: CurrentSystem, cap: int = 6) -> OpMatrix:
    if name.startswith("e"):
        return _delta_raising(name, A, B, cap)
    if name.startswith("f"):
        return _delta_lowering(name, A, B, cap)
    raise KeyError(name)


def verify_coproduct_current(
    name: str, A: CurrentSystem, B: CurrentSystem, T: CurrentSystem, cap: int = 6
) -> bool:
    """Tensor-representation current against the closed formula."""
    return T.current(name) == coproduct_formula(name, A, B, cap)


def _kron_mode(A: CurrentSystem, B: CurrentSystem, left, right):
    """left (x) right where either side is a (name, k) mode or the unit."""

    def side(cs, spec):
        if spec == 1:
            return mat_eye(cs.rep.dim)
        name, k = spec
        return cs.mode(name, k)

    return mat_kron(side(A, left), side(B, right))


def mode_anchor_checks(A: CurrentSystem, B: CurrentSystem, T: CurrentSystem):
    """Low-order coefficient identities for the coproduct, as named checks.

    Includes the diagonal-current subtlety: the plain second mode picks up
    an extra h (x) h term; recentering by half the squared zeroth mode
    removes it.  Both the correct forms and the form that drops the
    h (x) h term without recentering are checked, the latter as a
    recorded failure.
    """
    K = lambda l, r: _kron_mode(A, B, l, r)  # noqa: E731
    checks = []

    delta_e10 = mat_add(K(("e1", 0), 1), K(1, ("e1", 0)))
    checks.append(("delta(e1 mode 0) primitive", mat_eq(T.mode("e1", 0), delta_e10)))

    delta_e11 = mat_add(
        mat_add(K(("e1", 1), 1), K(1, ("e1", 1))),
        mat_add(K(("h1", 0), ("e1", 0)), K(("f2", 0), ("e3", 0))),
    )
    checks.append(("delta(e1 mode 1) anchor", mat_eq(T.mode("e1", 1), delta_e11)))

    delta_f11 = mat_add(
        mat_add(K(("f1", 1), 1), K(1, ("f1", 1))),
        mat_add(K(("f1", 0), ("h1", 0)), K(("f3", 0), ("e2", 0))),
    )
    checks.append(("delta(f1 mode 1) anchor", mat_eq(T.mode("f1", 1), delta_f11)))

    grouplike = mat_add(
        mat_add(K(("h1", 1), 1), K(1, ("h1", 1))), K(("h1", 0), ("h1", 0))
    )
    mixed = mat_add(
        mat_scale(K(("f1", 0), ("e1", 0)), -2),
        mat_sub(K(("f2", 0), ("e2", 0)), K(("f3", 0), ("e3", 0))),
    )
    delta_h11 = mat_add(grouplike, mixed)
    checks.append(("delta(h1 mode 1) anchor", mat_eq(T.mode("h1", 1), delta_h11)))

    # without recentering, dropping the h (x) h term must not match
    bare = mat_add(mat_add(K(("h1", 1), 1), K(1, ("h1", 1))), mixed)
    checks.append(
        ("delta(h1 mode 1) needs the h(x)h term", not mat_eq(T.mode("h1", 1), bare))
    )

    # recentered second diagonal mode: h'1 = h_1 - (h_0)^2 / 2
    def recentered(cs):
        h0 = cs.mode("h1", 0)
        return mat_sub(cs.mode("h1", 1), mat_scale(mat_mul(h0, h0), HALF))

    lhs = recentered(T)
    rhs = mat_add(
        mat_add(mat_kron(recentered(A), mat_eye(B.rep.dim)), mat_kron(mat_eye(A.rep.dim), recentered(B))),
        mixed,
    )
    checks.append(("recentered delta(h1 mode 1) drops h(x)h", mat_eq(lhs, rhs)))

    delta_e21 = mat_add(
        mat_add(K(("e2", 1), 1), K(1, ("e2", 1))),
        mat_add(K(("h2", 0), ("e2", 0)), K(("f1", 0), ("e3p", 0))),
    )
    checks.append(("delta(e2 mode 1) anchor", mat_eq(T.mode("e2", 1), delta_e21)))

    return checks


def run_coproduct_suite(a=1, b=3) -> SuiteReport:
    repA, repB = build_eval_rep(Q(a)), build_eval_rep(Q(b))
    A, B = CurrentSystem(repA), CurrentSystem(repB)
    T = CurrentSystem(tensor_rep(repA, repB))
    report = SuiteReport("coproducts", config={"a": str(a), "b": str(b)})
    for name in ("e1", "e2", "e3", "f1", "f2", "f3"):
        ok = verify_coproduct_current(name, A, B, T)
        report.add(f"delta({name}(u)) closed formula", ok)
    for name, ok in mode_anchor_checks(A, B, T):
        report.add(name, ok)
    return report

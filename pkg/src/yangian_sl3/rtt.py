"""Evaluation representations of the generator matrix and the defining check.

A representation here is a concrete 3x3 array of operator matrices t[i][j]
acting on C^d, each an OpMatrix in the spectral variable u.  The defining
exchange relation, the coproduct-built tensor product, the quantum
determinant and the antipode all live at this level.
"""

from __future__ import annotations

from .linalg import (
    OpMatrix,
    mat_eq,
    mat_is_zero,
    mat_mul,
    mat_scale,
    mat_sub,
)
from .scalars import ONE, P_ONE, P_ZERO, Polynomial, Q, QLike, ZERO, u_minus


class PoleCollision(Exception):
    """A sample point hit a pole of the representation or u = v."""


class Representation:
    """A 3x3 matrix of exact operator entries over C^dim.

    t[i][j] is the operator-valued entry in row i, column j (0-indexed
    internally; the algebraic indices run 1..3).  'poles' collects every
    rational point where some entry denominator vanishes, so sample grids
    can steer around them.
    """

    def __init__(self, label: str, dim: int, t, poles=frozenset()):
        self.label = label
        self.dim = dim
        self.t = t
        self.poles = frozenset(Q(p) for p in poles)

    def entry(self, i: int, j: int) -> OpMatrix:
        return self.t[i][j]

    def evaluate(self, x: QLike):
        """All nine entries at u = x, as plain Q matrices."""
        x = Q(x)
        if x in self.poles:
            raise PoleCollision(f"u = {x} is a pole of {self.label}")
        return [[self.t[i][j].evaluate(x) for j in range(3)] for i in range(3)]

    def __repr__(self) -> str:
        return f"Representation({self.label}, dim={self.dim})"


def _matrix_unit(d: int, r: int, c: int, top: Polynomial) -> list:
    out = [[P_ZERO] * d for _ in range(d)]
    out[r][c] = top
    return out


def build_eval_rep(a: QLike, convention: str = "transposed") -> Representation:
    """Evaluation representation on C^3 with parameter a.

    Entry (i, j) of the generator matrix acts as delta_ij + E[j][i]/(u - a);
    the transposed matrix unit is what makes the exchange relation hold.
    convention="untransposed" builds the naive E[i][j]/(u - a) variant,
    kept only so tests can pin down that it fails.
    """
    a = Q(a)
    den = u_minus(a)
    t = []
    for i in range(3):
        row = []
        for j in range(3):
            r, c = (j, i) if convention == "transposed" else (i, j)
            num = _matrix_unit(3, r, c, P_ONE)
            if i == j:
                for k in range(3):
                    num[k][k] = num[k][k] + den
            row.append(OpMatrix(num, den))
        t.append(row)
    return Representation(f"eval(a={a})", 3, t, poles={a})


def build_trivial_rep() -> Representation:
    one = OpMatrix.identity(1)
    zero = OpMatrix.zeros(1)
    t = [[one if i == j else zero for j in range(3)] for i in range(3)]
    return Representation("trivial", 1, t)


def tensor_rep(r1: Representation, r2: Representation) -> Representation:
    """Tensor product along the coproduct: entry (i,j) is sum_k t_kj x t_ik."""
    d = r1.dim * r2.dim
    t = []
    for i in range(3):
        row = []
        for j in range(3):
            acc = OpMatrix.zeros(d)
            for k in range(3):
                acc = acc + r1.t[k][j].kron(r2.t[i][k])
            row.append(acc)
        t.append(row)
    return Representation(
        f"({r1.label}) (x) ({r2.label})", d, t, r1.poles | r2.poles
    )


def check_rtt_at(rep: Representation, u: QLike, v: QLike) -> list[str]:
    """All 81 component identities of the exchange relation at (u, v).

    [t_ij(u), t_kl(v)] + (t_kj(u) t_il(v) - t_kj(v) t_il(u)) / (u - v) = 0.
    Returns the list of failing (i,j,k,l) descriptions, empty on success.
    """
    u, v = Q(u), Q(v)
    if u == v:
        raise PoleCollision("u = v")
    Tu = rep.evaluate(u)
    Tv = rep.evaluate(v)
    winv = ONE / (u - v)
    failures = []
    for i in range(3):
        for j in range(3):
            for k in range(3):
                for l in range(3):
                    lhs = mat_sub(
                        mat_mul(Tu[i][j], Tv[k][l]), mat_mul(Tv[k][l], Tu[i][j])
                    )
                    rhs = mat_scale(
                        mat_sub(
                            mat_mul(Tu[k][j], Tv[i][l]),
                            mat_mul(Tv[k][j], Tu[i][l]),
                        ),
                        -winv,
                    )
                    if not mat_eq(lhs, rhs):
                        failures.append(f"(i,j,k,l)=({i+1},{j+1},{k+1},{l+1})")
    return failures


def sample_pairs(rep: Representation, count: int) -> list[tuple]:
    """Deterministic rational (u, v) grid avoiding poles and the diagonal.

    u walks a step-1/7 ladder, v a step-3/11 ladder; incommensurate steps
    keep the pairs spread out and rarely colliding.
    """
    pairs = []
    n = 0
    while len(pairs) < count:
        u = Q(n, 7) - 2
        v = Q(3 * n + 1, 11) - 1
        n += 1
        if u == v or u in rep.poles or v in rep.poles:
            continue
        pairs.append((u, v))
    return pairs


def check_rtt(rep: Representation, n_pairs: int = 25) -> tuple[int, list[str]]:
    """Run the exchange check over the sample grid.

    Returns (pairs checked, failure descriptions)."""
    failures = []
    pairs = sample_pairs(rep, n_pairs)
    for u, v in pairs:
        for f in check_rtt_at(rep, u, v):
            failures.append(f"u={u} v={v} {f}")
    return len(pairs), failures


_S3 = [
    ((0, 1, 2), 1),
    ((1, 0, 2), -1),
    ((0, 2, 1), -1),
    ((2, 1, 0), -1),
    ((1, 2, 0), 1),
    ((2, 0, 1), 1),
]


def quantum_det(rep: Representation, shifts=(-1, 0, 1)) -> OpMatrix:
    """Signed 6-term sum of shifted entry products, column c taking u + shifts[c].

    The default shift ladder is the one that makes the result central and
    scalar; tests pin the exact scalar value on evaluation representations
    and show the reversed ladder loses centrality.
    """
    acc = OpMatrix.zeros(rep.dim)
    for perm, sign in _S3:
        term = None
        for col in range(3):
            factor = rep.t[perm[col]][col].shift(shifts[col])
            term = factor if term is None else term * factor
        acc = acc + (term * sign if sign == -1 else term)
    return acc


def rep_as_big_matrix(rep: Representation) -> OpMatrix:
    """Flatten the 3x3 of d x d entries into one 3d x 3d OpMatrix.

    Block (i, j) of the result is entry t[i][j]; row index (i, alpha),
    column index (j, beta).
    """
    d = rep.dim
    den = P_ONE
    for i in range(3):
        for j in range(3):
            den = den * rep.t[i][j].den
    big = [[P_ZERO] * (3 * d) for _ in range(3 * d)]
    for i in range(3):
        for j in range(3):
            e = rep.t[i][j]
            mult = den.divmod(e.den)[0]
            for r in range(d):
                for c in range(d):
                    p = e.num[r][c]
                    if not p.is_zero():
                        big[i * d + r][j * d + c] = p * mult
    return OpMatrix(big, den)


def antipode_T(rep: Representation) -> Representation:
    """Antipode on a representation: entrywise blocks of the big inverse."""
    d = rep.dim
    inv = rep_as_big_matrix(rep).inverse()
    t = []
    for i in range(3):
        row = []
        for j in range(3):
            num = [
                [inv.num[i * d + r][j * d + c] for c in range(d)] for r in range(d)
            ]
            row.append(OpMatrix(num, inv.den))
        t.append(row)
    # Poles of the inverse are roots of the new denominator; collect the
    # rational ones by scanning candidate shifts of the old poles.
    cands = set()
    for p in rep.poles:
        for s in (-2, -1, 0, 1, 2):
            cands.add(p + s)
        for s in (Q(-3, 2), Q(-1, 2), Q(1, 2), Q(3, 2)):
            cands.add(p + s)
    poles = {c for c in cands if inv.den.evaluate(c) == 0}
    return Representation(f"S({rep.label})", d, t, poles)


def is_scalar_operator(m: OpMatrix) -> bool:
    """True when m is f(u) times the identity for a single rational f."""
    d = m.n
    e00 = m.num[0][0]
    for r in range(d):
        for c in range(d):
            if r == c:
                if m.num[r][c] != e00:
                    return False
            elif not m.num[r][c].is_zero():
                return False
    return True

"""Exact linear algebra: rational matrices and matrices of rational functions.

Plain matrices over Q are lists of lists of scalars, manipulated by the
module-level functions.  OpMatrix is the operator-valued workhorse: a square
matrix whose entries are rational functions of one variable u, stored as a
polynomial numerator matrix over one shared monic denominator.  That layout
keeps addition and multiplication cheap and makes equality a cross
multiplication rather than 81 gcd reductions.
"""

from __future__ import annotations

from typing import Callable, Sequence

from .scalars import (
    ONE,
    P_ONE,
    P_ZERO,
    Polynomial,
    Q,
    QLike,
    RationalFunction,
    TruncatedSeries,
    ZERO,
    ZeroDenominator,
    poly_gcd,
    qstr,
)

MatrixQ = list  # list[list[Q]], used purely as documentation


def mat_eye(n: int) -> MatrixQ:
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def mat_zeros(n: int, m: int | None = None) -> MatrixQ:
    m = n if m is None else m
    return [[ZERO] * m for _ in range(n)]


def mat_add(a: MatrixQ, b: MatrixQ) -> MatrixQ:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a: MatrixQ, b: MatrixQ) -> MatrixQ:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_neg(a: MatrixQ) -> MatrixQ:
    return [[-x for x in row] for row in a]


def mat_scale(a: MatrixQ, c) -> MatrixQ:
    c = Q(c)
    return [[c * x for x in row] for row in a]


def mat_mul(a: MatrixQ, b: MatrixQ) -> MatrixQ:
    n, k, m = len(a), len(b), len(b[0])
    bt = [[b[r][c] for r in range(k)] for c in range(m)]
    out = []
    for i in range(n):
        ra = a[i]
        row = []
        for c in range(m):
            bc = bt[c]
            acc = ZERO
            for r in range(k):
                x = ra[r]
                if x:
                    acc = acc + x * bc[r]
            row.append(acc)
        out.append(row)
    return out


def mat_commutator(a: MatrixQ, b: MatrixQ) -> MatrixQ:
    return mat_sub(mat_mul(a, b), mat_mul(b, a))


def mat_kron(a: MatrixQ, b: MatrixQ) -> MatrixQ:
    na, nb = len(a), len(b)
    ma, mb = len(a[0]), len(b[0])
    out = mat_zeros(na * nb, ma * mb)
    for i in range(na):
        for j in range(ma):
            c = a[i][j]
            if not c:
                continue
            for k in range(nb):
                for l in range(mb):
                    out[i * nb + k][j * mb + l] = c * b[k][l]
    return out


def mat_eq(a: MatrixQ, b: MatrixQ) -> bool:
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def mat_is_zero(a: MatrixQ) -> bool:
    return all(x == 0 for row in a for x in row)


def mat_str(a: MatrixQ) -> str:
    return "\n".join("  ".join(qstr(x) for x in row) for row in a)


def mat_inverse(a: MatrixQ) -> MatrixQ:
    """Exact inverse by Gauss-Jordan elimination with nonzero pivoting."""
    n = len(a)
    aug = [list(row) + ident for row, ident in zip(a, mat_eye(n))]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise ZeroDenominator("singular matrix")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = ONE / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def nullspace(a: MatrixQ) -> list[list]:
    """Basis of the right nullspace of a rectangular Q matrix."""
    if not a:
        return []
    rows = [list(r) for r in a]
    n, m = len(rows), len(rows[0])
    pivots: list[int] = []
    r = 0
    for c in range(m):
        piv = next((i for i in range(r, n) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = ONE / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(n):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == n:
            break
    free = [c for c in range(m) if c not in pivots]
    basis = []
    for fc in free:
        vec = [ZERO] * m
        vec[fc] = ONE
        for ri, pc in enumerate(pivots):
            vec[pc] = -rows[ri][fc]
        basis.append(vec)
    return basis


class OpMatrix:
    """Square matrix of rational functions of u over a shared denominator.

    Invariants: den is monic, and no nontrivial polynomial divides den
    together with every numerator entry.  All arithmetic restores them.
    """

    __slots__ = ("n", "num", "den")

    def __init__(self, num: Sequence[Sequence[Polynomial]], den: Polynomial = P_ONE, *, _normalized: bool = False):
        self.n = len(num)
        if den.is_zero():
            raise ZeroDenominator("operator matrix with zero denominator")
        self.num = [list(row) for row in num]
        self.den = den
        if not _normalized:
            self._normalize()

    def _normalize(self) -> None:
        den = self.den
        if den.degree == 0:
            c = den.leading()
            if c != 1:
                inv = ONE / c
                self.num = [[p * inv for p in row] for row in self.num]
                self.den = P_ONE
            return
        g = den
        for row in self.num:
            for p in row:
                if not p.is_zero():
                    g = poly_gcd(g, p)
                    if g.degree == 0:
                        break
            if g.degree == 0:
                break
        if g.degree > 0:
            self.num = [[p.divmod(g)[0] for p in row] for row in self.num]
            den = den.divmod(g)[0]
        lc = den.leading()
        if lc != 1:
            inv = ONE / lc
            self.num = [[p * inv for p in row] for row in self.num]
            den = den * inv
        self.den = den

    @staticmethod
    def identity(n: int) -> "OpMatrix":
        return OpMatrix(
            [[P_ONE if i == j else P_ZERO for j in range(n)] for i in range(n)],
            _normalized=True,
        )

    @staticmethod
    def zeros(n: int) -> "OpMatrix":
        return OpMatrix([[P_ZERO] * n for _ in range(n)], _normalized=True)

    @staticmethod
    def from_scalar(mat: MatrixQ) -> "OpMatrix":
        return OpMatrix(
            [[Polynomial.const(x) if x else P_ZERO for x in row] for row in mat],
            _normalized=True,
        )

    @staticmethod
    def from_rational_entries(entries: Sequence[Sequence[RationalFunction]]) -> "OpMatrix":
        n = len(entries)
        den = P_ONE
        for row in entries:
            for rf in row:
                g = poly_gcd(den, rf.den)
                den = den.divmod(g)[0] * rf.den
        num = []
        for row in entries:
            nrow = []
            for rf in row:
                nrow.append(rf.num * den.divmod(rf.den)[0])
            num.append(nrow)
        return OpMatrix(num, den)

    def entry(self, i: int, j: int) -> RationalFunction:
        return RationalFunction(self.num[i][j], self.den)

    def is_zero(self) -> bool:
        return all(p.is_zero() for row in self.num for p in row)

    def __eq__(self, other) -> bool:
        if not isinstance(other, OpMatrix):
            return NotImplemented
        if self.n != other.n:
            return False
        if self.den == other.den:
            return all(
                p == q for ra, rb in zip(self.num, other.num) for p, q in zip(ra, rb)
            )
        return all(
            self.num[i][j] * other.den == other.num[i][j] * self.den
            for i in range(self.n)
            for j in range(self.n)
        )

    def __add__(self, other: "OpMatrix") -> "OpMatrix":
        if self.den == other.den:
            num = [
                [p + q for p, q in zip(ra, rb)]
                for ra, rb in zip(self.num, other.num)
            ]
            return OpMatrix(num, self.den)
        num = [
            [p * other.den + q * self.den for p, q in zip(ra, rb)]
            for ra, rb in zip(self.num, other.num)
        ]
        return OpMatrix(num, self.den * other.den)

    def __sub__(self, other: "OpMatrix") -> "OpMatrix":
        return self + (-other)

    def __neg__(self) -> "OpMatrix":
        return OpMatrix([[-p for p in row] for row in self.num], self.den, _normalized=True)

    def __mul__(self, other) -> "OpMatrix":
        if isinstance(other, OpMatrix):
            n = self.n
            bt = [[other.num[r][c] for r in range(n)] for c in range(n)]
            num = []
            for i in range(n):
                ra = self.num[i]
                row = []
                for c in range(n):
                    bc = bt[c]
                    acc = P_ZERO
                    for r in range(n):
                        p = ra[r]
                        if p:
                            acc = acc + p * bc[r]
                    row.append(acc)
                num.append(row)
            return OpMatrix(num, self.den * other.den)
        if isinstance(other, RationalFunction):
            num = [[p * other.num for p in row] for row in self.num]
            return OpMatrix(num, self.den * other.den)
        if isinstance(other, Polynomial):
            return OpMatrix([[p * other for p in row] for row in self.num], self.den)
        c = Q(other)
        if c == 0:
            return OpMatrix.zeros(self.n)
        return OpMatrix([[p * c for p in row] for row in self.num], self.den, _normalized=True)

    def __rmul__(self, other) -> "OpMatrix":
        # Scalar kinds commute with everything; OpMatrix*OpMatrix never lands here.
        return self.__mul__(other)

    def div_poly(self, p: Polynomial) -> "OpMatrix":
        return OpMatrix(self.num, self.den * p)

    def commutator(self, other: "OpMatrix") -> "OpMatrix":
        return self * other - other * self

    def anticommutator(self, other: "OpMatrix") -> "OpMatrix":
        return self * other + other * self

    def shift(self, c: QLike) -> "OpMatrix":
        """Substitution u -> u + c in every entry."""
        c = Q(c)
        if c == 0:
            return self
        num = [[p.shift(c) for p in row] for row in self.num]
        return OpMatrix(num, self.den.shift(c), _normalized=True)

    def evaluate(self, x: QLike) -> MatrixQ:
        d = self.den.evaluate(x)
        if d == 0:
            raise ZeroDenominator(f"denominator vanishes at u = {qstr(Q(x))}")
        inv = ONE / d
        return [[p.evaluate(x) * inv for p in row] for row in self.num]

    def kron(self, other: "OpMatrix") -> "OpMatrix":
        na, nb = self.n, other.n
        num = [[P_ZERO] * (na * nb) for _ in range(na * nb)]
        for i in range(na):
            for j in range(na):
                p = self.num[i][j]
                if p.is_zero():
                    continue
                for k in range(nb):
                    for l in range(nb):
                        q = other.num[k][l]
                        if not q.is_zero():
                            num[i * nb + k][j * nb + l] = p * q
        return OpMatrix(num, self.den * other.den)

    def inverse(self) -> "OpMatrix":
        """Inverse over the rational function field, Gauss-Jordan."""
        n = self.n
        aug: list[list[RationalFunction]] = []
        for i in range(n):
            row = [self.entry(i, j) for j in range(n)]
            row += [
                RationalFunction(P_ONE) if i == j else RationalFunction(P_ZERO)
                for j in range(n)
            ]
            aug.append(row)
        for col in range(n):
            piv = next((r for r in range(col, n) if not aug[r][col].is_zero()), None)
            if piv is None:
                raise ZeroDenominator("operator matrix is singular")
            aug[col], aug[piv] = aug[piv], aug[col]
            inv = aug[col][col].inv()
            aug[col] = [x * inv for x in aug[col]]
            for r in range(n):
                if r != col and not aug[r][col].is_zero():
                    f = aug[r][col]
                    aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
        return OpMatrix.from_rational_entries([row[n:] for row in aug])

    def series_coeff_at_infinity(self, m: int) -> MatrixQ:
        """Q matrix of coefficients of u^-m across all entries."""
        out = []
        for i in range(self.n):
            row = []
            for j in range(self.n):
                p = self.num[i][j]
                if p.is_zero():
                    row.append(ZERO)
                else:
                    s = RationalFunction(p, self.den).series_at_infinity(m)
                    row.append(s.coeff(m))
            out.append(row)
        return out

    def series_coeff_at_zero(self, m: int) -> MatrixQ:
        out = []
        for i in range(self.n):
            row = []
            for j in range(self.n):
                p = self.num[i][j]
                if p.is_zero():
                    row.append(ZERO)
                else:
                    s = RationalFunction(p, self.den).series_at_zero(m)
                    row.append(s.coeff(m))
            out.append(row)
        return out

    def __str__(self) -> str:
        rows = []
        for i in range(self.n):
            rows.append("  ".join(str(self.entry(i, j)) for j in range(self.n)))
        return "\n".join(rows)

    __repr__ = __str__

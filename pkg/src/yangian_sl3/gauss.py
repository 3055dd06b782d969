"""Triangular decomposition of the generator matrix and Cartan-Weyl currents.

The generator matrix factors as T = F K E with F lower unitriangular, K
diagonal and E upper unitriangular, all entries operator-valued.  Simple
root currents come from the off-diagonal factor entries after recentering
the second root by a half step; the third root currents are commutator
combinations of the simple ones, and the decomposition supplies an
independent route to the same operators.
"""

from __future__ import annotations

from dataclasses import dataclass

from .linalg import MatrixQ, OpMatrix, mat_neg
from .scalars import HALF, Q, ZERO


@dataclass
class GaussFactors:
    """Entries of the three triangular factors: t = F K E."""

    k1: OpMatrix
    k2: OpMatrix
    k3: OpMatrix
    e1t: OpMatrix  # E entry (1,2)
    e2t: OpMatrix  # E entry (2,3)
    e3t: OpMatrix  # E entry (1,3)
    f1t: OpMatrix  # F entry (2,1)
    f2t: OpMatrix  # F entry (3,2)
    f3t: OpMatrix  # F entry (3,1)


def gauss_decompose(rep) -> GaussFactors:
    t = rep.t
    t11_inv = t[0][0].inverse()
    k1 = t[0][0]
    k2 = t[1][1] - t[1][0] * t11_inv * t[0][1]
    k2_inv = k2.inverse()
    e1t = t11_inv * t[0][1]
    f1t = t[1][0] * t11_inv
    e3t = t11_inv * t[0][2]
    f3t = t[2][0] * t11_inv
    e2t = k2_inv * (t[1][2] - t[1][0] * t11_inv * t[0][2])
    f2t = (t[2][1] - t[2][0] * t11_inv * t[0][1]) * k2_inv
    k3 = t[2][2] - f3t * k1 * e3t - f2t * k2 * e2t
    return GaussFactors(k1, k2, k3, e1t, e2t, e3t, f1t, f2t, f3t)


def verify_gauss_product(rep, gf: GaussFactors | None = None) -> bool:
    """Reassemble F K E and compare with T, block by block."""
    gf = gf or gauss_decompose(rep)
    d = rep.dim
    one = OpMatrix.identity(d)
    zero = OpMatrix.zeros(d)
    F = [[one, zero, zero], [gf.f1t, one, zero], [gf.f3t, gf.f2t, one]]
    K = [[gf.k1, zero, zero], [zero, gf.k2, zero], [zero, zero, gf.k3]]
    E = [[one, gf.e1t, gf.e3t], [zero, one, gf.e2t], [zero, zero, one]]

    def blockmul(A, B):
        return [
            [
                A[i][0] * B[0][j] + A[i][1] * B[1][j] + A[i][2] * B[2][j]
                for j in range(3)
            ]
            for i in range(3)
        ]

    prod = blockmul(blockmul(F, K), E)
    return all(prod[i][j] == rep.t[i][j] for i in range(3) for j in range(3))


CURRENT_NAMES = ("e1", "e2", "e3", "f1", "f2", "f3", "h1", "h2", "h3", "e3p", "f3p")


class CurrentSystem:
    """Cartan-Weyl currents of one representation, with mode extraction.

    Currents for the second root absorb the half-step recentering, so all
    exchange relations downstream are stated in the common variable.  The
    third-root currents are taken from the triangular factors; the
    commutator definitions are checked against them separately.
    """

    def __init__(self, rep):
        self.rep = rep
        self.gf = gauss_decompose(rep)
        self._currents: dict = {}
        self._modes: dict = {}

    def current(self, name: str) -> OpMatrix:
        if name in self._currents:
            return self._currents[name]
        gf = self.gf
        if name == "e1":
            cur = gf.e1t
        elif name == "f1":
            cur = gf.f1t
        elif name == "e2":
            cur = gf.e2t.shift(HALF)
        elif name == "f2":
            cur = gf.f2t.shift(HALF)
        elif name == "e3":
            cur = gf.e3t
        elif name == "f3":
            cur = gf.f3t
        elif name == "h1":
            cur = gf.k1.inverse() * gf.k2
        elif name == "h2":
            cur = (gf.k2.inverse() * gf.k3).shift(HALF)
        elif name == "h3":
            cur = self._h3_from_definition()
        elif name == "e3p":
            # half the anticommutator of the simple pair, minus the long root
            cur = self.current("e1").anticommutator(self.current("e2")) * HALF - self.current("e3")
        elif name == "f3p":
            cur = self.current("f1").anticommutator(self.current("f2")) * HALF - self.current("f3")
        else:
            raise KeyError(name)
        self._currents[name] = cur
        return cur

    def _h3_from_definition(self) -> OpMatrix:
        h1, h2 = self.current("h1"), self.current("h2")
        e2, f2 = self.current("e2"), self.current("f2")
        quarter = Q(1, 4)
        return h1 * h2 + h1.anticommutator(e2).anticommutator(f2) * quarter

    def e3_from_commutator(self) -> OpMatrix:
        """Long root raising current as -[e1(u), e2 mode 0]."""
        e20 = OpMatrix.from_scalar(self.mode("e2", 0))
        return -self.current("e1").commutator(e20)

    def f3_from_commutator(self) -> OpMatrix:
        f20 = OpMatrix.from_scalar(self.mode("f2", 0))
        return self.current("f1").commutator(f20)

    def e3p_from_commutator(self) -> OpMatrix:
        """Companion long root current as [e1 mode 0, e2(u)]."""
        e10 = OpMatrix.from_scalar(self.mode("e1", 0))
        return e10.commutator(self.current("e2"))

    def f3p_from_commutator(self) -> OpMatrix:
        f10 = OpMatrix.from_scalar(self.mode("f1", 0))
        return -f10.commutator(self.current("f2"))

    def h3_from_t_entries(self) -> OpMatrix:
        """Direct route: t11^-1 (t33 - t31 t11^-1 t13)."""
        t = self.rep.t
        t11_inv = t[0][0].inverse()
        return t11_inv * (t[2][2] - t[2][0] * t11_inv * t[0][2])

    def mode(self, name: str, k: int) -> MatrixQ:
        """Graded component of a current.

        Nonnegative k reads the expansion at infinity, negative k the
        expansion at zero with a sign flip; diagonal currents drop their
        unit term first.
        """
        key = (name, k)
        if key in self._modes:
            return self._modes[key]
        cur = self.current(name)
        if name.startswith("h"):
            cur = cur - OpMatrix.identity(cur.n)
        if k >= 0:
            out = cur.series_coeff_at_infinity(k + 1)
        else:
            out = mat_neg(cur.series_coeff_at_zero(-k - 1))
        self._modes[key] = out
        return out


def verify_cw_match(cs: CurrentSystem) -> list[tuple[str, bool]]:
    """Dual-route identities tying commutator currents to triangular factors."""
    checks = [
        ("e3 commutator route", cs.e3_from_commutator() == cs.current("e3")),
        ("f3 commutator route", cs.f3_from_commutator() == cs.current("f3")),
        ("h3 entry route", cs.h3_from_t_entries() == cs.current("h3")),
        ("e3 companion route", cs.e3p_from_commutator() == cs.current("e3p")),
        ("f3 companion route", cs.f3p_from_commutator() == cs.current("f3p")),
    ]
    return checks


def scalar_twist(rep, phi_num, phi_den):
    """Multiply every generator entry by the scalar phi(u) = phi_num/phi_den."""
    from .rtt import Representation
    from .scalars import RationalFunction

    phi = RationalFunction(phi_num, phi_den)
    t = [[rep.t[i][j] * phi for j in range(3)] for i in range(3)]
    poles = set(rep.poles)
    return Representation(f"twist({rep.label})", rep.dim, t, poles)

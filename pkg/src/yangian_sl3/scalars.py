"""Exact scalar arithmetic: rationals, polynomials, rational functions, series.

Everything downstream computes over the field Q of rational numbers.  The
backend is gmpy2.mpq when available (about 8x faster than fractions.Fraction
on the dense linear algebra this package does), with a transparent fallback
to the standard library.  All public containers in this module are immutable
and hashable so they can serve as cache keys.
"""

from __future__ import annotations

from typing import Iterable, Sequence, Union

try:
    from gmpy2 import mpq as Q

    _QTYPES = None  # set below after fallback resolution
    HAVE_GMPY2 = True
except ImportError:  # pragma: no cover
    from fractions import Fraction as Q

    HAVE_GMPY2 = False

QLike = Union[int, "Q"]

ZERO = Q(0)
ONE = Q(1)
HALF = Q(1, 2)


class ZeroDenominator(ZeroDivisionError):
    """Construction of a rational object with a vanishing denominator."""


class EvaluationAtPole(ZeroDivisionError):
    """Numeric evaluation of a rational function at one of its poles."""


class PoleAtExpansionPoint(ZeroDivisionError):
    """Series expansion requested at a point where the function has a pole."""


def qstr(x) -> str:
    """Render a rational as 'p' or 'p/q'.  Stable across scalar backends."""
    x = Q(x)
    n, d = x.numerator, x.denominator
    return str(n) if d == 1 else f"{n}/{d}"


def parse_q(s: str):
    """Inverse of qstr.  Accepts 'p' and 'p/q' with optional sign."""
    s = s.strip()
    if "/" in s:
        n, d = s.split("/")
        if int(d) == 0:
            raise ZeroDenominator(s)
        return Q(int(n), int(d))
    return Q(int(s))


def binomial(n: int, k: int):
    """Exact binomial coefficient, zero outside 0 <= k <= n."""
    if k < 0 or k > n:
        return ZERO
    out = ONE
    for i in range(k):
        out = out * (n - i) / (i + 1)
    return out


class Polynomial:
    """Dense univariate polynomial over Q, coefficients in ascending order.

    The zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable[QLike] = ()):
        cs = [Q(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)
        self._hash = None

    @staticmethod
    def const(c: QLike) -> "Polynomial":
        return Polynomial((Q(c),))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __getitem__(self, k: int):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return ZERO

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.coeffs)
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Polynomial(out)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self.coeffs))

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            a, b = self.coeffs, other.coeffs
            if not a or not b:
                return Polynomial()
            out = [ZERO] * (len(a) + len(b) - 1)
            for i, ai in enumerate(a):
                if ai == 0:
                    continue
                for j, bj in enumerate(b):
                    out[i + j] = out[i + j] + ai * bj
            return Polynomial(out)
        c = Q(other)
        return Polynomial(tuple(c * x for x in self.coeffs))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = Polynomial((ONE,))
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def scale(self, c: QLike) -> "Polynomial":
        return self * c

    def monic(self) -> "Polynomial":
        if not self.coeffs:
            return self
        lc = self.coeffs[-1]
        if lc == 1:
            return self
        return self * (ONE / lc)

    def evaluate(self, x: QLike):
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def shift(self, c: QLike) -> "Polynomial":
        """Composition p(u + c), by Horner in the shifted variable."""
        c = Q(c)
        if c == 0 or not self.coeffs:
            return self
        out: list = [ZERO]
        for coeff in reversed(self.coeffs):
            nxt = [ZERO] * (len(out) + 1)
            for i, oc in enumerate(out):
                nxt[i + 1] = nxt[i + 1] + oc
                nxt[i] = nxt[i] + c * oc
            nxt[0] = nxt[0] + coeff
            out = nxt
        return Polynomial(out)

    def divmod(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        if other.is_zero():
            raise ZeroDenominator("polynomial division by zero")
        if self.degree < other.degree:
            return Polynomial(), self
        rem = list(self.coeffs)
        dlead = other.leading()
        dd = other.degree
        quot = [ZERO] * (len(rem) - dd)
        for i in range(len(rem) - 1, dd - 1, -1):
            f = rem[i] / dlead
            if f != 0:
                quot[i - dd] = f
                for j, c in enumerate(other.coeffs):
                    rem[i - dd + j] = rem[i - dd + j] - f * c
        return Polynomial(quot), Polynomial(rem)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                parts.append(qstr(c))
            elif k == 1:
                parts.append(f"{qstr(c)}*u" if c != 1 else "u")
            else:
                parts.append(f"{qstr(c)}*u^{k}" if c != 1 else f"u^{k}")
        return " + ".join(parts)

    __repr__ = __str__


P_ZERO = Polynomial()
P_ONE = Polynomial((ONE,))
U = Polynomial((ZERO, ONE))


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd over Q via the Euclidean algorithm."""
    while not b.is_zero():
        a, b = b, a.divmod(b)[1]
    return a.monic() if not a.is_zero() else a


def u_minus(c: QLike) -> Polynomial:
    """The linear polynomial u - c."""
    return Polynomial((-Q(c), ONE))


class RationalFunction:
    """Quotient of polynomials over Q, stored with a monic denominator.

    Always fully reduced: gcd(num, den) = 1 and den is monic.  Supports
    exact arithmetic, evaluation away from poles, and series expansion at
    infinity or at zero.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: Polynomial, den: Polynomial = P_ONE):
        if den.is_zero():
            raise ZeroDenominator("rational function with zero denominator")
        if num.is_zero():
            self.num, self.den = P_ZERO, P_ONE
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = num.divmod(g)[0]
                den = den.divmod(g)[0]
            lc = den.leading()
            if lc != 1:
                inv = ONE / lc
                num = num * inv
                den = den * inv
            self.num, self.den = num, den
        self._hash = None

    @staticmethod
    def const(c: QLike) -> "RationalFunction":
        return RationalFunction(Polynomial.const(c))

    @staticmethod
    def from_poly(p: Polynomial) -> "RationalFunction":
        return RationalFunction(p)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __add__(self, other: "RationalFunction") -> "RationalFunction":
        return RationalFunction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    def __sub__(self, other: "RationalFunction") -> "RationalFunction":
        return RationalFunction(
            self.num * other.den - other.num * self.den, self.den * other.den
        )

    def __neg__(self) -> "RationalFunction":
        r = RationalFunction.__new__(RationalFunction)
        r.num, r.den, r._hash = -self.num, self.den, None
        return r

    def __mul__(self, other) -> "RationalFunction":
        if isinstance(other, RationalFunction):
            return RationalFunction(self.num * other.num, self.den * other.den)
        return RationalFunction(self.num * Q(other), self.den)

    __rmul__ = __mul__

    def inv(self) -> "RationalFunction":
        if self.is_zero():
            raise ZeroDenominator("inverse of the zero rational function")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other: "RationalFunction") -> "RationalFunction":
        return self * other.inv()

    def evaluate(self, x: QLike):
        d = self.den.evaluate(x)
        if d == 0:
            raise EvaluationAtPole(f"pole at u = {qstr(x)}")
        return self.num.evaluate(x) / d

    def shift(self, c: QLike) -> "RationalFunction":
        """Substitution u -> u + c."""
        return RationalFunction(self.num.shift(c), self.den.shift(c))

    def series_at_infinity(self, order: int) -> "TruncatedSeries":
        """Expand in powers of 1/u up to and including u^-order.

        Requires deg num <= deg den; proper behaviour at infinity is all
        this package ever needs.
        """
        if self.is_zero():
            return TruncatedSeries(AT_INFINITY, order, {})
        e, d = self.num.degree, self.den.degree
        if e > d:
            raise ValueError("polynomial part at infinity is not representable")
        # Reverse both: f(1/t) = t^(d-e) * nrev(t) / drev(t), drev(0) != 0.
        nrev = list(reversed(self.num.coeffs))
        drev = list(reversed(self.den.coeffs))
        gap = d - e
        ser = _series_div(nrev, drev, order - gap)
        coeffs = {}
        for m, c in enumerate(ser):
            if c != 0:
                coeffs[m + gap] = c
        return TruncatedSeries(AT_INFINITY, order, coeffs)

    def series_at_zero(self, order: int) -> "TruncatedSeries":
        """Expand in powers of u up to and including u^order."""
        if self.den.evaluate(ZERO) == 0:
            raise PoleAtExpansionPoint("pole at u = 0")
        ser = _series_div(list(self.num.coeffs), list(self.den.coeffs), order)
        coeffs = {m: c for m, c in enumerate(ser) if c != 0}
        return TruncatedSeries(AT_ZERO, order, coeffs)

    def __str__(self) -> str:
        if self.den == P_ONE:
            return f"({self.num})"
        return f"({self.num}) / ({self.den})"

    __repr__ = __str__


RF_ZERO = RationalFunction(P_ZERO)
RF_ONE = RationalFunction(P_ONE)


def _series_div(a: Sequence, b: Sequence, order: int) -> list:
    """Power series division a/b mod t^(order+1); b[0] must be nonzero."""
    if order < 0:
        return []
    if not b or b[0] == 0:
        raise PoleAtExpansionPoint("series division by a series with no unit term")
    n = order + 1
    out = [ZERO] * n
    b0inv = ONE / Q(b[0])
    for k in range(n):
        acc = Q(a[k]) if k < len(a) else ZERO
        top = min(k, len(b) - 1)
        for j in range(1, top + 1):
            acc = acc - Q(b[j]) * out[k - j]
        out[k] = acc * b0inv
    return out


AT_INFINITY = "inf"
AT_ZERO = "zero"


class TruncatedSeries:
    """Truncated expansion of a rational function, at infinity or at zero.

    At infinity the stored key m is the coefficient of u^-m (m >= 0); at
    zero it is the coefficient of u^m.  'order' is the largest key the
    series knows about; everything beyond it is unknown, not zero.
    """

    __slots__ = ("at", "order", "coeffs")

    def __init__(self, at: str, order: int, coeffs: dict):
        if at not in (AT_INFINITY, AT_ZERO):
            raise ValueError(f"unknown expansion point tag {at!r}")
        self.at = at
        self.order = order
        self.coeffs = {m: c for m, c in coeffs.items() if c != 0 and m <= order}

    def coeff(self, m: int):
        if m > self.order or m < 0:
            raise IndexError(f"coefficient {m} beyond truncation order {self.order}")
        return self.coeffs.get(m, ZERO)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (
            self.at == other.at
            and self.order == other.order
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.at, self.order, tuple(sorted(self.coeffs.items()))))

    def agrees_with(self, other: "TruncatedSeries") -> bool:
        """Equality over the shared window, ignoring truncation orders."""
        if self.at != other.at:
            return False
        k = min(self.order, other.order)
        return all(self.coeff(m) == other.coeff(m) for m in range(k + 1))

    def _binop(self, other: "TruncatedSeries", sign: int) -> "TruncatedSeries":
        if self.at != other.at:
            raise ValueError("series expanded at different points")
        order = min(self.order, other.order)
        out = dict(self.coeffs)
        for m, c in other.coeffs.items():
            out[m] = out.get(m, ZERO) + sign * c
        return TruncatedSeries(self.at, order, out)

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self._binop(other, 1)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self._binop(other, -1)

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(self.at, self.order, {m: -c for m, c in self.coeffs.items()})

    def __mul__(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            if self.at != other.at:
                raise ValueError("series expanded at different points")
            order = min(self.order, other.order)
            out: dict = {}
            for m1, c1 in self.coeffs.items():
                for m2, c2 in other.coeffs.items():
                    m = m1 + m2
                    if m <= order:
                        out[m] = out.get(m, ZERO) + c1 * c2
            return TruncatedSeries(self.at, order, out)
        c = Q(other)
        return TruncatedSeries(self.at, self.order, {m: c * v for m, v in self.coeffs.items()})

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not self.coeffs

    def __str__(self) -> str:
        if not self.coeffs:
            return f"O({self._tail()})"
        var = "u^-" if self.at == AT_INFINITY else "u^"
        terms = [f"{qstr(c)}*{var}{m}" for m, c in sorted(self.coeffs.items())]
        return " + ".join(terms) + f" + O({self._tail()})"

    def _tail(self) -> str:
        k = self.order + 1
        return f"u^-{k}" if self.at == AT_INFINITY else f"u^{k}"

    __repr__ = __str__

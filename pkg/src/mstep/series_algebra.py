"""Exact polynomial and rational-function arithmetic over the rationals.

This is the proof engine behind every generating-function identity in the
package: dense polynomials with ``fractions.Fraction`` coefficients, a
canonical rational-function type whose structural equality coincides with
mathematical equality, extended Euclid (Bezout certificates) for partial
fractions, Taylor-coefficient extraction, and the x -> -x substitution used
by the alternating-sum identities.

Canonical form of a rational function N/D:

* gcd(N, D) = 1 (polynomial gcd divided out),
* all coefficients integral with gcd of the joint contents equal to 1,
* the lowest-order nonzero coefficient of D is positive.

With that normalization two RatFun values are equal as mathematical
functions iff they are equal structurally.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .sequences import RecurrenceSpec, handle


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


class Poly:
    """Dense univariate polynomial; coeffs[k] is the coefficient of x^k.

    The coefficient list never has a trailing zero; the zero polynomial is
    the empty tuple (degree -1).
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    # -- construction helpers -------------------------------------------
    @staticmethod
    def const(c) -> "Poly":
        return Poly((c,))

    @staticmethod
    def monomial(k: int, c=1) -> "Poly":
        return Poly((0,) * k + (c,))

    # -- basic structure -------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def valuation(self) -> int:
        """Index of the lowest nonzero coefficient (0 for the zero poly)."""
        for k, c in enumerate(self.coeffs):
            if c != 0:
                return k
        return 0

    def __eq__(self, other):
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    # -- ring operations --------------------------------------------------
    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] += c
        return Poly(out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return Poly(tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly(tuple(c * other for c in self.coeffs))
        if self.is_zero() or other.is_zero():
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __divmod__(self, other):
        """Long division by the leading term; raises on a zero divisor."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dd, dv = len(rem) - 1, other.degree
        lead = other.coeffs[-1]
        quo = [Fraction(0)] * max(dd - dv + 1, 0)
        for k in range(dd - dv, -1, -1):
            c = rem[k + dv] / lead
            if c:
                quo[k] = c
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return Poly(quo), Poly(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def shift(self, k: int) -> "Poly":
        """Multiply by x^k (k >= 0)."""
        if self.is_zero():
            return self
        return Poly((0,) * k + self.coeffs)

    def derivative(self) -> "Poly":
        return Poly(tuple(k * c for k, c in enumerate(self.coeffs) if k))

    def __call__(self, x) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def substitute_neg(self) -> "Poly":
        """p(x) -> p(-x)."""
        return Poly(tuple(c if k % 2 == 0 else -c for k, c in enumerate(self.coeffs)))

    def content(self) -> Fraction:
        """Positive rational c with self/c integral of integer content 1."""
        if self.is_zero():
            return Fraction(1)
        num = 0
        den = 1
        for c in self.coeffs:
            num = math.gcd(num, c.numerator)
            den = den * c.denominator // math.gcd(den, c.denominator)
        return Fraction(num, den)

    def primitive(self) -> "Poly":
        """Integral coefficients, content 1, lowest nonzero coefficient > 0."""
        if self.is_zero():
            return self
        p = self * (1 / self.content())
        if p.coeffs[p.valuation()] < 0:
            p = -p
        return p

    # -- rendering ---------------------------------------------------------
    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            elif mag == 1:
                body = "x" if k == 1 else f"x^{k}"
            else:
                body = f"{mag}*x" if k == 1 else f"{mag}*x^{k}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"Poly({self})"


P_ZERO = Poly()
P_ONE = Poly((1,))
P_X = Poly((0, 1))


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Euclidean gcd, normalized primitive with positive lowest coefficient."""
    while not b.is_zero():
        a, b = b, a % b
    return a.primitive()


def bezout(a: Poly, b: Poly):
    """Extended Euclid: returns (u, v, g) with u*a + v*b = g = gcd(a, b).

    When both a/g and b/g are nonconstant the certificate is reduced so that
    deg u < deg b - deg g and deg v < deg a - deg g.
    """
    if a.is_zero() and b.is_zero():
        raise ValueError("bezout of two zero polynomials")
    r0, r1 = a, b
    u0, u1 = P_ONE, P_ZERO
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, u0 - q * u1
    g = r0.primitive()
    scale = 1 / (r0.content())
    if r0.coeffs[r0.valuation()] < 0:
        scale = -scale
    u = u0 * scale
    # Reduce u modulo b/g so the degree bounds hold, then recover v exactly.
    bq = b // g
    if bq.degree > 0:
        u = u % bq
    if b.is_zero():
        v = P_ZERO
    else:
        v = (g - u * a) // b
    return u, v, g


class NotAPowerSeries(ValueError):
    """Raised when expanding a rational function with den(0) = 0."""


class RatFun:
    """Canonical rational function num/den over the rationals."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=P_ONE):
        if not isinstance(num, Poly):
            num = Poly.const(num) if isinstance(num, (int, Fraction)) else Poly(num)
        if not isinstance(den, Poly):
            den = Poly.const(den) if isinstance(den, (int, Fraction)) else Poly(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            num, den = P_ZERO, P_ONE
        else:
            g = poly_gcd(num, den)
            if g.degree > 0 or g.coeffs[0] != 1:
                num, den = num // g, den // g
            cn, cd = num.content(), den.content()
            joint = Fraction(
                math.gcd(cn.numerator * cd.denominator, cd.numerator * cn.denominator),
                cn.denominator * cd.denominator,
            )
            num = num * (1 / joint)
            den = den * (1 / joint)
            if den.coeffs[den.valuation()] < 0:
                num, den = -num, -den
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    # -- structure ----------------------------------------------------------
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def as_polynomial(self) -> Poly:
        if not self.is_polynomial():
            raise ValueError(f"not a polynomial: {self}")
        return self.num * (1 / self.den.coeffs[0])

    def __eq__(self, other):
        return isinstance(other, RatFun) and self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    # -- field operations -----------------------------------------------------
    def __add__(self, other):
        other = _as_ratfun(other)
        return RatFun(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-_as_ratfun(other))

    def __rsub__(self, other):
        return _as_ratfun(other) + (-self)

    def __neg__(self):
        return RatFun(-self.num, self.den)

    def __mul__(self, other):
        other = _as_ratfun(other)
        return RatFun(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_ratfun(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RatFun(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return _as_ratfun(other) / self

    def substitute_neg(self) -> "RatFun":
        """f(x) -> f(-x), renormalized."""
        return RatFun(self.num.substitute_neg(), self.den.substitute_neg())

    def derivative(self) -> "RatFun":
        return RatFun(
            self.num.derivative() * self.den - self.num * self.den.derivative(),
            self.den * self.den,
        )

    def series(self, count: int) -> list:
        return series_coeffs(self, count)

    # -- rendering ---------------------------------------------------------------
    def __str__(self):
        num, den = self.num, self.den
        if den == P_ONE:
            return str(num)
        ns = str(num)
        if len([c for c in num.coeffs if c != 0]) > 1:
            ns = f"({ns})"
        ds = str(den)
        if len([c for c in den.coeffs if c != 0]) > 1 or den.degree > 0:
            ds = f"({ds})"
        return f"{ns}/{ds}"

    def __repr__(self):
        return f"RatFun({self})"


def _as_ratfun(x) -> RatFun:
    if isinstance(x, RatFun):
        return x
    if isinstance(x, Poly):
        return RatFun(x)
    return RatFun(Poly.const(x))


RF_ZERO = RatFun(P_ZERO)
RF_ONE = RatFun(P_ONE)
RF_X = RatFun(P_X)


def equals(f: RatFun, g: RatFun) -> bool:
    """Decidable equality of canonical forms."""
    return f == g


def series_coeffs(f: RatFun, count: int) -> list:
    """First ``count`` Taylor coefficients of f around 0, exact.

    Requires den(0) != 0, i.e. f must be a formal power series.
    """
    if count < 0:
        raise ValueError("count must be nonnegative")
    den = f.den
    if den[0] == 0:
        raise NotAPowerSeries(f"den(0) = 0 in {f}")
    d0 = den[0]
    dd = den.degree
    num = f.num
    out = []
    for n in range(count):
        acc = num[n]
        for k in range(1, min(n, dd) + 1):
            dk = den[k]
            if dk:
                acc -= dk * out[n - k]
        out.append(acc / d0)
    return out


def gf_of(spec: RecurrenceSpec) -> RatFun:
    """Ordinary generating function of a recurrence spec.

    Denominator 1 - sum(c_j x^j); the numerator is determined by the seeds
    so that the series coefficients reproduce the sequence exactly.
    """
    den = [Fraction(1)] + [Fraction(-c) for c in spec.coeffs]
    seeds = spec.seeds
    num = []
    for n, a in enumerate(seeds):
        acc = Fraction(a)
        for j, c in enumerate(spec.coeffs, start=1):
            if c and n - j >= 0:
                acc -= c * seeds[n - j]
        num.append(acc)
    return RatFun(Poly(num), Poly(den))


def shifted_gf(spec: RecurrenceSpec, shift: int) -> RatFun:
    """Generating function of n -> a_{n+shift} under the one-sided convention.

    Nonpositive shifts multiply by x^|shift|; positive shifts subtract the
    lost prefix a_0 .. a_{shift-1} before dividing by x^shift.
    """
    g = gf_of(spec)
    if shift <= 0:
        return g * RatFun(Poly.monomial(-shift))
    h = handle(spec)
    prefix = Poly([h.term(j) for j in range(shift)])
    return RatFun((g.num - prefix * g.den), g.den * Poly.monomial(shift))

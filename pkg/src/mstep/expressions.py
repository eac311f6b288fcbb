"""Expression trees over a sequence index n, with exact evaluation and
compilation to rational generating functions.

Node kinds
----------
``Term(seq, shift)``      seq_{n+shift} (one-sided: negative indices are 0)
``NPoly(coeffs)``         polynomial in n with rational coefficients
``Alt(offset)``           (-1)^(n+offset)
``Geo2(offset)``          2^(n+offset)
``Const(value)``          a constant
``Sum(terms)``            pointwise sum
``Product(factors)``      pointwise product
``Scale(factor, child)``  rational multiple
``ConvAtom(kernels, c)``  sum over the len(kernels)-simplex of size n+c of
                          the product of the kernels, each evaluated at its
                          own index; for a single kernel this is the bounded
                          partial sum sum_{j=0}^{n+c} kernel(j).

Evaluation is exact (ints and Fractions).  ``evaluate_range`` computes a
whole prefix of values at once and turns ConvAtoms into cached convolution
tables, which is what makes full-catalog verification fast.

``gf_of_expr`` compiles a tree to a canonical RatFun where possible;
expressions outside the rational fragment (e.g. the pointwise product of
two recurrence sequences) yield the :data:`NOT_COMPILABLE` value instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .sequences import handle, resolve
from .series_algebra import (
    P_ONE,
    Poly,
    RatFun,
    series_coeffs,
    shifted_gf,
)


class SeqExpr:
    """Base class for expression nodes."""

    __slots__ = ()


@dataclass(frozen=True)
class Term(SeqExpr):
    seq: str
    shift: int = 0


@dataclass(frozen=True)
class NPoly(SeqExpr):
    coeffs: tuple  # ascending powers of n


@dataclass(frozen=True)
class Alt(SeqExpr):
    offset: int = 0


@dataclass(frozen=True)
class Geo2(SeqExpr):
    offset: int = 0


@dataclass(frozen=True)
class Const(SeqExpr):
    value: Fraction


@dataclass(frozen=True)
class Sum(SeqExpr):
    terms: tuple


@dataclass(frozen=True)
class Product(SeqExpr):
    factors: tuple


@dataclass(frozen=True)
class Scale(SeqExpr):
    factor: Fraction
    child: SeqExpr


@dataclass(frozen=True)
class ConvAtom(SeqExpr):
    kernels: tuple
    offset: int = 0


# -- builders ----------------------------------------------------------------

def term(seq: str, shift: int = 0) -> Term:
    return Term(seq, shift)


def npoly(*coeffs) -> NPoly:
    return NPoly(tuple(Fraction(c) for c in coeffs))


def alt(offset: int = 0) -> Alt:
    return Alt(offset)


def geo2(offset: int = 0) -> Geo2:
    return Geo2(offset)


def const(value) -> Const:
    return Const(Fraction(value))


def add(*terms) -> SeqExpr:
    flat = []
    for t in terms:
        if isinstance(t, Sum):
            flat.extend(t.terms)
        else:
            flat.append(t)
    if len(flat) == 1:
        return flat[0]
    return Sum(tuple(flat))


def sub(a: SeqExpr, b: SeqExpr) -> SeqExpr:
    return add(a, scale(-1, b))


def mul(*factors) -> SeqExpr:
    flat = []
    for f in factors:
        if isinstance(f, Product):
            flat.extend(f.factors)
        else:
            flat.append(f)
    if len(flat) == 1:
        return flat[0]
    return Product(tuple(flat))


def scale(factor, child: SeqExpr) -> SeqExpr:
    factor = Fraction(factor)
    if factor == 1:
        return child
    if isinstance(child, Scale):
        return Scale(factor * child.factor, child.child)
    return Scale(factor, child)


def conv(*kernels, offset: int = 0) -> ConvAtom:
    return ConvAtom(tuple(kernels), offset)


# -- evaluation ----------------------------------------------------------------

def evaluate(expr: SeqExpr, n: int):
    """Exact value at index n (int or Fraction).  ConvAtoms by brute force."""
    if isinstance(expr, Term):
        return handle(expr.seq).term(n + expr.shift)
    if isinstance(expr, NPoly):
        acc = Fraction(0)
        for c in reversed(expr.coeffs):
            acc = acc * n + c
        return acc
    if isinstance(expr, Alt):
        return 1 if (n + expr.offset) % 2 == 0 else -1
    if isinstance(expr, Geo2):
        e = n + expr.offset
        return 2 ** e if e >= 0 else Fraction(1, 2 ** -e)
    if isinstance(expr, Const):
        return expr.value
    if isinstance(expr, Sum):
        return sum(evaluate(t, n) for t in expr.terms)
    if isinstance(expr, Product):
        acc = 1
        for f in expr.factors:
            acc *= evaluate(f, n)
        return acc
    if isinstance(expr, Scale):
        return expr.factor * evaluate(expr.child, n)
    if isinstance(expr, ConvAtom):
        upper = n + expr.offset
        if upper < 0:
            return 0
        kernels = expr.kernels
        if len(kernels) == 1:
            return sum(evaluate(kernels[0], j) for j in range(upper + 1))

        def rec(i: int, remaining: int):
            if i == len(kernels) - 1:
                return evaluate(kernels[i], remaining)
            total = 0
            for k in range(remaining + 1):
                v = evaluate(kernels[i], k)
                if v:
                    total += v * rec(i + 1, remaining - k)
            return total

        return rec(0, upper)
    raise TypeError(f"not a SeqExpr: {expr!r}")


_RANGE_CACHE: dict = {}
_CONV_CACHE: dict = {}


def clear_caches() -> None:
    _RANGE_CACHE.clear()
    _CONV_CACHE.clear()


def evaluate_range(expr: SeqExpr, length: int) -> list:
    """Values at n = 0 .. length-1 as a list; convolutions are tabulated."""
    cached = _RANGE_CACHE.get(expr)
    if cached is None or len(cached) < length:
        cached = _compute_range(expr, length)
        _RANGE_CACHE[expr] = cached
    return cached[:length]


def _compute_range(expr: SeqExpr, length: int) -> list:
    if isinstance(expr, Term):
        h = handle(expr.seq)
        s = expr.shift
        if s >= 0:
            return h.values(length + s)[s:]
        vals = h.values(max(length + s, 0))
        return [0] * min(-s, length) + vals
    if isinstance(expr, (NPoly, Alt, Geo2, Const)):
        return [evaluate(expr, n) for n in range(length)]
    if isinstance(expr, Sum):
        cols = [evaluate_range(t, length) for t in expr.terms]
        return [sum(col[n] for col in cols) for n in range(length)]
    if isinstance(expr, Product):
        cols = [evaluate_range(f, length) for f in expr.factors]
        out = list(cols[0])
        for col in cols[1:]:
            for n in range(length):
                out[n] *= col[n]
        return out
    if isinstance(expr, Scale):
        f = expr.factor
        return [f * v for v in evaluate_range(expr.child, length)]
    if isinstance(expr, ConvAtom):
        c = expr.offset
        top = length - 1 + c
        if top < 0:
            return [0] * length
        table = _conv_table(expr.kernels, top + 1)
        return [table[n + c] if n + c >= 0 else 0 for n in range(length)]
    raise TypeError(f"not a SeqExpr: {expr!r}")


def _conv_table(kernels: tuple, length: int) -> list:
    """Simplex-sum table for a kernel tuple: table[b] = sum over K(l, b).

    For one kernel this is the running partial sum.  Kernel order does not
    matter, so the cache key is the sorted tuple.
    """
    key = tuple(sorted(kernels, key=repr))
    cached = _CONV_CACHE.get(key)
    if cached is not None and len(cached) >= length:
        return cached
    if len(key) == 1:
        vals = evaluate_range(key[0], length)
        out = []
        acc = 0
        for v in vals:
            acc += v
            out.append(acc)
    else:
        out = evaluate_range(key[0], length)
        for kern in key[1:]:
            kv = evaluate_range(kern, length)
            out = [
                sum(out[j] * kv[b - j] for j in range(b + 1) if out[j])
                for b in range(length)
            ]
    _CONV_CACHE[key] = out
    return out


# -- compilation to generating functions -----------------------------------------


class NotCompilable:
    """Returned by gf_of_expr for expressions outside the rational fragment."""

    __slots__ = ("reason",)

    def __init__(self, reason: str = ""):
        self.reason = reason

    def __repr__(self):
        return f"NotCompilable({self.reason!r})"

    def __bool__(self):
        return False


NOT_COMPILABLE = NotCompilable("not compilable")

_RF_ONES = RatFun(P_ONE, Poly((1, -1)))  # 1/(1-x)


def _apply_npoly(coeffs: tuple, g: RatFun) -> RatFun:
    # sum_i c_i * (x d/dx)^i applied to g turns coefficients a_n into p(n) a_n.
    acc = RatFun(Poly.const(coeffs[0])) * g if coeffs else RatFun(Poly())
    power = g
    for c in coeffs[1:]:
        power = RatFun(Poly((0, 1))) * power.derivative()
        if c:
            acc = acc + RatFun(Poly.const(c)) * power
    return acc


def gf_of_expr(expr: SeqExpr):
    """Compile to a canonical RatFun, or return a NotCompilable value."""
    if isinstance(expr, Term):
        return shifted_gf(resolve(expr.seq), expr.shift)
    if isinstance(expr, NPoly):
        return _apply_npoly(expr.coeffs, _RF_ONES)
    if isinstance(expr, Alt):
        sign = 1 if expr.offset % 2 == 0 else -1
        return RatFun(Poly.const(sign), Poly((1, 1)))
    if isinstance(expr, Geo2):
        c = Fraction(2) ** expr.offset
        return RatFun(Poly.const(c), Poly((1, -2)))
    if isinstance(expr, Const):
        return RatFun(Poly.const(expr.value)) * _RF_ONES
    if isinstance(expr, Sum):
        acc = RatFun(Poly())
        for t in expr.terms:
            g = gf_of_expr(t)
            if isinstance(g, NotCompilable):
                return g
            acc = acc + g
        return acc
    if isinstance(expr, Scale):
        g = gf_of_expr(expr.child)
        if isinstance(g, NotCompilable):
            return g
        return RatFun(Poly.const(expr.factor)) * g
    if isinstance(expr, Product):
        return _compile_product(expr)
    if isinstance(expr, ConvAtom):
        return _compile_conv(expr)
    raise TypeError(f"not a SeqExpr: {expr!r}")


def _compile_product(expr: Product):
    scalar = Fraction(1)
    alt_count = 0
    alt_offset = 0
    npoly_coeffs = None
    bases = []
    for f in expr.factors:
        if isinstance(f, Const):
            scalar *= f.value
        elif isinstance(f, Alt):
            alt_count += 1
            alt_offset += f.offset
        elif isinstance(f, NPoly):
            npoly_coeffs = f.coeffs if npoly_coeffs is None else _npoly_mul(npoly_coeffs, f.coeffs)
        else:
            bases.append(f)
    if len(bases) > 1:
        return NotCompilable("pointwise product of two non-scalar sequences")
    if bases:
        g = gf_of_expr(bases[0])
        if isinstance(g, NotCompilable):
            return g
    else:
        g = _RF_ONES
    if alt_count % 2 == 1:
        g = g.substitute_neg()
    if alt_offset % 2 == 1:
        scalar = -scalar
    if npoly_coeffs is not None:
        g = _apply_npoly(npoly_coeffs, g)
    if scalar != 1:
        g = RatFun(Poly.const(scalar)) * g
    return g


def _npoly_mul(a: tuple, b: tuple) -> tuple:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return tuple(out)


def _compile_conv(expr: ConvAtom):
    gfs = []
    for k in expr.kernels:
        g = gf_of_expr(k)
        if isinstance(g, NotCompilable):
            return g
        gfs.append(g)
    if len(gfs) == 1:
        s = gfs[0] * _RF_ONES
    else:
        s = gfs[0]
        for g in gfs[1:]:
            s = s * g
    c = expr.offset
    if c == 0:
        return s
    if c < 0:
        return s * RatFun(Poly.monomial(-c))
    prefix = Poly(series_coeffs(s, c))
    return RatFun(s.num - prefix * s.den, s.den * Poly.monomial(c))


# -- linear views ------------------------------------------------------------------


def linear_parts(expr: SeqExpr):
    """Decompose a shifts-plus-constant expression.

    Returns ``(parts, const)`` where parts maps sequence name -> shift ->
    coefficient.  Raises ValueError on any node outside that fragment
    (products, convolutions, n-polynomials, ...).
    """
    parts: dict = {}
    total = [Fraction(0)]

    def walk(e: SeqExpr, factor: Fraction):
        if isinstance(e, Term):
            by_shift = parts.setdefault(resolve(e.seq).name, {})
            by_shift[e.shift] = by_shift.get(e.shift, Fraction(0)) + factor
        elif isinstance(e, Const):
            total[0] += factor * e.value
        elif isinstance(e, Scale):
            walk(e.child, factor * e.factor)
        elif isinstance(e, Sum):
            for t in e.terms:
                walk(t, factor)
        else:
            raise ValueError(f"not a linear combination of shifted terms: {e!r}")

    walk(expr, Fraction(1))
    parts = {
        name: {s: c for s, c in by_shift.items() if c != 0}
        for name, by_shift in parts.items()
    }
    return {n: bs for n, bs in parts.items() if bs}, total[0]


# -- JSON serialization ---------------------------------------------------------------


def expr_to_json(expr: SeqExpr):
    if isinstance(expr, Term):
        return ["term", expr.seq, expr.shift]
    if isinstance(expr, NPoly):
        return ["npoly", [str(c) for c in expr.coeffs]]
    if isinstance(expr, Alt):
        return ["alt", expr.offset]
    if isinstance(expr, Geo2):
        return ["geo2", expr.offset]
    if isinstance(expr, Const):
        return ["const", str(expr.value)]
    if isinstance(expr, Sum):
        return ["sum"] + [expr_to_json(t) for t in expr.terms]
    if isinstance(expr, Product):
        return ["product"] + [expr_to_json(f) for f in expr.factors]
    if isinstance(expr, Scale):
        return ["scale", str(expr.factor), expr_to_json(expr.child)]
    if isinstance(expr, ConvAtom):
        return ["conv", [expr_to_json(k) for k in expr.kernels], expr.offset]
    raise TypeError(f"not a SeqExpr: {expr!r}")


def expr_from_json(node) -> SeqExpr:
    tag = node[0]
    if tag == "term":
        return Term(node[1], int(node[2]))
    if tag == "npoly":
        return NPoly(tuple(Fraction(c) for c in node[1]))
    if tag == "alt":
        return Alt(int(node[1]))
    if tag == "geo2":
        return Geo2(int(node[1]))
    if tag == "const":
        return Const(Fraction(node[1]))
    if tag == "sum":
        return Sum(tuple(expr_from_json(t) for t in node[1:]))
    if tag == "product":
        return Product(tuple(expr_from_json(t) for t in node[1:]))
    if tag == "scale":
        return Scale(Fraction(node[1]), expr_from_json(node[2]))
    if tag == "conv":
        return ConvAtom(tuple(expr_from_json(k) for k in node[1]), int(node[2]))
    raise ValueError(f"unknown expression tag: {tag!r}")

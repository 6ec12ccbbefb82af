"""Truncated formal power series and the sequence transforms built on them.

A :class:`Series` knows exactly ``order`` coefficients ``a_0 .. a_{order-1}``.
Every operation returns a series whose order is the number of coefficients
that are guaranteed correct; reading past it raises
:class:`~hankelkit.errors.InsufficientOrder` instead of inventing zeros.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

from .errors import (
    BadLowOrder,
    ConstantTermNotOne,
    DivisionByZero,
    InsufficientOrder,
    NonUnitConstantTerm,
    NonzeroInnerConstant,
    ParseError,
)
from .ring import format_scalar, invert, one_like, parse_scalar, zero_like

DEFAULT_ORDER = 24


def _unit_inverse(c):
    try:
        return invert(c)
    except (DivisionByZero, ArithmeticError):
        raise NonUnitConstantTerm(f"constant term {c!r} is not a unit") from None


class Series:
    """Immutable truncated power series ``a_0 + a_1 x + ... + O(x^order)``."""

    __slots__ = ("_c",)

    def __init__(self, coefficients: Iterable):
        c = tuple(coefficients)
        if not c:
            raise ValueError("a series needs at least one known coefficient")
        self._c = c

    # construction ---------------------------------------------------------

    @classmethod
    def from_poly(cls, coefficients: Sequence, order: int) -> "Series":
        """An exact polynomial, padded with zeros (or cut) to ``order`` terms."""
        coeffs = list(coefficients)[:order]
        zero = zero_like(coeffs[0]) if coeffs else 0
        coeffs += [zero] * (order - len(coeffs))
        return cls(coeffs)

    @classmethod
    def constant(cls, c, order: int) -> "Series":
        return cls.from_poly([c], order)

    @classmethod
    def x(cls, order: int, coefficient=1) -> "Series":
        return cls.from_poly([0, coefficient], order)

    # access ---------------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self._c)

    @property
    def coefficients(self) -> tuple:
        return self._c

    def __len__(self):
        return len(self._c)

    def __getitem__(self, n):
        if isinstance(n, slice):
            return self._c[n]
        if n < 0:
            raise IndexError(n)
        if n >= len(self._c):
            raise InsufficientOrder(f"coefficient {n} requested, only {len(self._c)} known")
        return self._c[n]

    def __iter__(self):
        return iter(self._c)

    def tolist(self) -> list:
        return list(self._c)

    def truncate(self, n: int) -> "Series":
        if n > self.order:
            raise InsufficientOrder(f"order {n} requested, only {self.order} known")
        return Series(self._c[:n])

    def _zero(self):
        return zero_like(self._c[0])

    def _one(self):
        return one_like(self._c[0])

    # arithmetic -----------------------------------------------------------

    def _lift(self, other):
        if isinstance(other, Series):
            return other
        return Series.constant(other, self.order)

    def __add__(self, other):
        o = self._lift(other)
        n = min(self.order, o.order)
        return Series(a + b for a, b in zip(self._c[:n], o._c[:n]))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        n = min(self.order, o.order)
        return Series(a - b for a, b in zip(self._c[:n], o._c[:n]))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __neg__(self):
        return Series(-a for a in self._c)

    def __mul__(self, other):
        if isinstance(other, Series):
            return series_mul(self, other)
        return Series(a * other for a in self._c)

    def __rmul__(self, other):
        return Series(other * a for a in self._c)

    def __truediv__(self, other):
        if isinstance(other, Series):
            return series_div(self, other)
        inv = _unit_inverse(other)
        return Series(a * inv for a in self._c)

    def __rtruediv__(self, other):
        return series_div(self._lift(other), self)

    def __pow__(self, k: int):
        return series_pow(self, k)

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self.order == other.order and all(a == b for a, b in zip(self._c, other._c))

    def __hash__(self):
        return hash(self._c)

    def agrees_with(self, other: "Series", n: int | None = None) -> bool:
        """Coefficientwise equality on the first ``n`` (default: common) terms."""
        if n is None:
            n = min(self.order, other.order)
        return all(self[k] == other[k] for k in range(n))

    def shift_down(self, k: int) -> "Series":
        """Divide by ``x**k``; the dropped coefficients must be zero."""
        for j in range(k):
            if self[j] != 0:
                raise ValueError(f"coefficient {j} is nonzero; cannot divide by x^{k}")
        return Series(self._c[k:])

    def shift_up(self, k: int) -> "Series":
        """Multiply by ``x**k`` (gains ``k`` orders)."""
        return Series((self._zero(),) * k + self._c)

    def derivative(self) -> "Series":
        if self.order == 1:
            raise InsufficientOrder("derivative of an order-1 series is unknown")
        return Series(n * self._c[n] for n in range(1, self.order))

    def valuation(self) -> int | None:
        for k, a in enumerate(self._c):
            if a != 0:
                return k
        return None

    def is_zero(self) -> bool:
        return all(a == 0 for a in self._c)

    def __repr__(self):
        body = ", ".join(format_scalar(a) if not hasattr(a, "coefficients") else repr(a)
                         for a in self._c)
        return f"Series([{body}])"


class RationalGF:
    """A rational generating function ``numerator(x) / denominator(x)``."""

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator: Sequence, denominator: Sequence = (1,)):
        num = tuple(numerator) or (0,)
        den = tuple(denominator)
        if not den:
            raise ValueError("empty denominator")
        _unit_inverse(den[0])
        self.numerator = num
        self.denominator = den

    @classmethod
    def parse(cls, text: str) -> "RationalGF":
        """Parse ``"1,-1 ; 1,-2,-1,1"`` (ascending coefficients, ``;`` between)."""
        parts = text.split(";")
        if len(parts) == 1:
            num_text, den_text = parts[0], "1"
        elif len(parts) == 2:
            num_text, den_text = parts
        else:
            raise ParseError(f"expected 'num ; den', got {text!r}")
        try:
            num = [parse_scalar(t) for t in num_text.split(",")]
            den = [parse_scalar(t) for t in den_text.split(",")]
        except ParseError as exc:
            raise ParseError(f"bad generating function {text!r}: {exc}") from None
        try:
            return cls(num, den)
        except NonUnitConstantTerm as exc:
            raise ParseError(str(exc)) from None

    def expand(self, n: int) -> Series:
        return expand(self, n)

    def __str__(self):
        num = ",".join(format_scalar(c) for c in self.numerator)
        den = ",".join(format_scalar(c) for c in self.denominator)
        return f"{num} ; {den}"

    def __repr__(self):
        return f"RationalGF.parse({str(self)!r})"


def expand(gf: RationalGF, n: int) -> Series:
    """First ``n`` coefficients of ``gf`` via the denominator recurrence."""
    num, den = gf.numerator, gf.denominator
    inv0 = _unit_inverse(den[0])
    zero = zero_like(den[0] * (num[0] if num else 0))
    out = []
    for m in range(n):
        acc = num[m] if m < len(num) else zero
        for k in range(1, min(m, len(den) - 1) + 1):
            acc = acc - den[k] * out[m - k]
        out.append(acc * inv0)
    return Series(out)


def series_mul(a: Series, b: Series) -> Series:
    n = min(a.order, b.order)
    ac, bc = a.coefficients, b.coefficients
    zero = zero_like(ac[0] * bc[0])
    out = [zero] * n
    for i in range(n):
        ai = ac[i]
        if ai == 0:
            continue
        for j in range(n - i):
            bj = bc[j]
            if bj != 0:
                out[i + j] = out[i + j] + ai * bj
    return Series(out)


def series_div(a: Series, b: Series) -> Series:
    n = min(a.order, b.order)
    bc, ac = b.coefficients, a.coefficients
    inv0 = _unit_inverse(bc[0])
    out = []
    for m in range(n):
        acc = ac[m]
        for k in range(1, m + 1):
            if bc[k] != 0:
                acc = acc - bc[k] * out[m - k]
        out.append(acc * inv0)
    return Series(out)


def series_inverse(a: Series) -> Series:
    return series_div(Series.constant(a._one(), a.order), a)


def series_pow(a: Series, k: int) -> Series:
    """``a**k`` by repeated squaring; negative ``k`` needs a unit constant term."""
    if k < 0:
        return series_pow(series_inverse(a), -k)
    result = Series.constant(a._one(), a.order)
    base = a
    while k:
        if k & 1:
            result = series_mul(result, base)
        k >>= 1
        if k:
            base = series_mul(base, base)
    return result


def scale(g: Series, c) -> Series:
    """Substitution ``x -> c*x``; keeps the full order of ``g``."""
    out = []
    p = one_like(c)
    for a in g:
        out.append(a * p)
        p = p * c
    return Series(out)


def compose(outer: Series, inner: Series) -> Series:
    """``outer(inner(x))`` for ``inner(0) = 0``.

    When ``inner`` is a pure scalar multiple ``c*x`` (to its known order) the
    substitution keeps the full order of ``outer``; otherwise the result is
    known to ``min(order(outer), order(inner))``.
    """
    if inner[0] != 0:
        raise NonzeroInnerConstant("inner series must have zero constant term")
    if inner.order >= 2 and all(inner[k] == 0 for k in range(2, inner.order)):
        return scale(outer, inner[1])
    n = min(outer.order, inner.order)
    inner_n = inner.truncate(n)
    zero = zero_like(outer[0] * inner[1]) if n > 1 else zero_like(outer[0])
    result = Series.constant(outer[n - 1] + zero, n)
    for k in range(n - 2, -1, -1):
        result = series_mul(result, inner_n)
        result = Series((result[0] + outer[k],) + result.coefficients[1:])
    return result


def reversion(f: Series) -> Series:
    """Compositional inverse ``u`` with ``f(u(x)) = x`` and ``u(0) = 0``.

    Newton iteration ``u <- u - (f(u) - x) / f'(u)``; each step doubles the
    number of correct coefficients.  No order is lost.
    """
    if f[0] != 0:
        raise BadLowOrder("reversion needs f(0) = 0")
    n = f.order
    if n < 2:
        raise InsufficientOrder("reversion needs at least the linear coefficient")
    try:
        inv1 = invert(f[1])
    except (DivisionByZero, ArithmeticError):
        raise BadLowOrder("reversion needs an invertible linear coefficient") from None
    zero = zero_like(f[1])
    u = Series.from_poly([zero, inv1], n)
    x = Series.from_poly([zero, one_like(f[1])], n)
    fprime = f.derivative()
    # u is correct mod x^prec; each pass works mod x^m with m = min(2 prec, n)
    prec = min(2, n)
    for _ in range(n + 1):
        m = min(2 * prec, n)
        um = u.truncate(m)
        err = compose(f.truncate(m), um) - x.truncate(m)
        v = err.valuation()
        if v is None:
            if m == n:
                return u
            prec = m
            continue
        denom = compose(fprime.truncate(m - v), um.truncate(m - v))
        step = series_div(err.shift_down(v), denom).shift_up(v)
        u = u - Series.from_poly(step.coefficients, n)
        prec = m
    raise ArithmeticError("reversion did not converge")  # pragma: no cover


def revert_transform(g: Series) -> Series:
    """Expansion of ``(1/x) Rev(x g(x))``.  Requires a unit ``g_0``."""
    _unit_inverse(g[0])
    return reversion(g.shift_up(1)).shift_down(1)


def revert_transform_lagrange(g: Series) -> Series:
    """Same transform via ``b_n = [x^n] g^{-(n+1)} / (n+1)``."""
    h = series_inverse(g)
    power = h
    out = []
    for n in range(g.order):
        out.append(power[n] * Fraction(1, n + 1))
        if n + 1 < g.order:
            power = series_mul(power, h)
    return Series(out)


def log_revert_transform(g: Series) -> Series:
    """``b_n = [x^n] g(x)^{-n}``; each power is computed independently."""
    h = series_inverse(g)
    out = [g._one()]
    for n in range(1, g.order):
        out.append(series_pow(h.truncate(n + 1), n)[n])
    return Series(out)


def binomial_transform(g: Series, r=1) -> Series:
    """``b_n = sum_k C(n,k) r^(n-k) a_k``; gf ``g(x/(1-rx))/(1-rx)``."""
    out = []
    rp = [one_like(r)]
    for _ in range(g.order):
        rp.append(rp[-1] * r)
    for n in range(g.order):
        acc = g._zero()
        for k in range(n + 1):
            acc = acc + comb(n, k) * rp[n - k] * g[k]
        out.append(acc)
    return Series(out)


def invert_transform(g: Series, r=1) -> Series:
    """INVERT(r): gf ``g / (1 - r x g)``."""
    denom = 1 - (g * r).shift_up(1).truncate(g.order)
    return series_div(g, denom)


def series_sqrt(g: Series) -> Series:
    """Square root with constant term 1 by Newton's iteration."""
    if g[0] != 1:
        raise ConstantTermNotOne("series_sqrt needs g(0) = 1")
    half = Fraction(1, 2)
    s = Series.constant(g._one(), g.order)
    for _ in range(g.order + 1):
        nxt = (s + series_div(g, s)) * half
        if nxt == s:
            return s
        s = nxt
    raise ArithmeticError("series_sqrt did not converge")  # pragma: no cover


def alternate(g: Series) -> Series:
    return Series(a if n % 2 == 0 else -a for n, a in enumerate(g))


def catalan_gf(order: int) -> Series:
    """``c(x) = (1 - sqrt(1-4x)) / (2x)``."""
    root = series_sqrt(Series.from_poly([1, -4], order + 1))
    return ((1 - root) * Fraction(1, 2)).shift_down(1)


def from_sequence(terms: Sequence) -> Series:
    return Series(terms)

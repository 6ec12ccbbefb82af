"""Exact coefficient rings.

Three rings are used throughout the package:

* rationals, represented by :class:`fractions.Fraction` (plain ``int`` values
  are accepted wherever a rational is expected);
* Gaussian rationals ``a + b i`` with rational parts;
* truncated polynomials ``Q[y]/(y^M)`` over either of the above, used as the
  coefficient ring of a power series in ``x`` when a bivariate expansion is
  needed.

Series and matrices never inspect the concrete type of their entries; they only
use ``+``, ``-``, ``*``, ``==`` and :func:`invert`.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational as _RationalABC

from .errors import DivisionByZero, NonUnitConstantTerm, ParseError

Rational = Fraction

__all__ = [
    "Rational",
    "GaussianRational",
    "TruncatedPolynomial",
    "I",
    "invert",
    "rat_invert",
    "gauss_invert",
    "poly_invert",
    "is_zero",
    "zero_like",
    "one_like",
    "format_scalar",
    "parse_scalar",
]


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, _RationalABC)):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


class GaussianRational:
    """An element ``re + im*i`` of Q(i)."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", _as_fraction(re))
        object.__setattr__(self, "im", _as_fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    def __reduce__(self):
        return (GaussianRational, (self.re, self.im))

    @staticmethod
    def _coerce(other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Fraction)):
            return GaussianRational(other, 0)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re * o.re - self.im * o.im,
                                self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def inverse(self) -> "GaussianRational":
        n = self.norm()
        if n == 0:
            raise DivisionByZero("0 has no inverse in Q(i)")
        return GaussianRational(self.re / n, -self.im / n)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        result = GaussianRational(1)
        k = abs(k)
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __repr__(self):
        return f"GaussianRational({format_scalar(self.re)}, {format_scalar(self.im)})"

    def __str__(self):
        return format_scalar(self)


I = GaussianRational(0, 1)


class TruncatedPolynomial:
    """A polynomial in an auxiliary variable ``y`` modulo ``y**order``."""

    __slots__ = ("coefficients", "order")

    def __init__(self, coefficients, order: int | None = None):
        coeffs = list(coefficients)
        if order is None:
            order = len(coeffs)
        if order < 1:
            raise ValueError("order must be at least 1")
        if len(coeffs) > order:
            coeffs = coeffs[:order]
        else:
            coeffs = coeffs + [0] * (order - len(coeffs))
        object.__setattr__(self, "coefficients", tuple(coeffs))
        object.__setattr__(self, "order", order)

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedPolynomial is immutable")

    def __reduce__(self):
        return (TruncatedPolynomial, (self.coefficients, self.order))

    @classmethod
    def constant(cls, c, order: int) -> "TruncatedPolynomial":
        return cls([c], order)

    @classmethod
    def variable(cls, order: int) -> "TruncatedPolynomial":
        return cls([0, 1], order)

    def __getitem__(self, k):
        return self.coefficients[k]

    def __len__(self):
        return self.order

    def _coerce(self, other):
        if isinstance(other, TruncatedPolynomial):
            if other.order != self.order:
                raise ValueError("truncation orders differ")
            return other
        if isinstance(other, (int, Fraction, GaussianRational)):
            return TruncatedPolynomial([other], self.order)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return TruncatedPolynomial(
            [a + b for a, b in zip(self.coefficients, o.coefficients)], self.order)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return TruncatedPolynomial(
            [a - b for a, b in zip(self.coefficients, o.coefficients)], self.order)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return TruncatedPolynomial([-a for a in self.coefficients], self.order)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            return TruncatedPolynomial([a * other for a in self.coefficients], self.order)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        m = self.order
        a, b = self.coefficients, o.coefficients
        out = [0] * m
        for i in range(m):
            ai = a[i]
            if ai == 0:
                continue
            for j in range(m - i):
                if b[j] != 0:
                    out[i + j] = out[i + j] + ai * b[j]
        return TruncatedPolynomial(out, m)

    __rmul__ = __mul__

    def inverse(self) -> "TruncatedPolynomial":
        c0 = self.coefficients[0]
        try:
            inv0 = invert(c0)
        except DivisionByZero:
            raise NonUnitConstantTerm("constant term is not a unit") from None
        m = self.order
        a = self.coefficients
        out = [0] * m
        out[0] = inv0
        for n in range(1, m):
            acc = 0
            for k in range(1, n + 1):
                if a[k] != 0:
                    acc = acc + a[k] * out[n - k]
            out[n] = -acc * inv0
        return TruncatedPolynomial(out, m)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self * invert(other)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __eq__(self, other):
        if isinstance(other, TruncatedPolynomial):
            return self.order == other.order and all(
                a == b for a, b in zip(self.coefficients, other.coefficients))
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self.coefficients[0] == other and all(
                a == 0 for a in self.coefficients[1:])
        return NotImplemented

    def __hash__(self):
        return hash((self.order, self.coefficients))

    def __bool__(self):
        return any(a != 0 for a in self.coefficients)

    def __repr__(self):
        body = ", ".join(format_scalar(c) for c in self.coefficients)
        return f"TruncatedPolynomial([{body}], order={self.order})"


def is_zero(a) -> bool:
    return a == 0


def zero_like(a):
    """The additive identity of the ring that ``a`` lives in."""
    return a * 0


def one_like(a):
    return a * 0 + 1


def rat_invert(a):
    a = _as_fraction(a)
    if a == 0:
        raise DivisionByZero("0 has no inverse in Q")
    return 1 / a


def gauss_invert(a: GaussianRational) -> GaussianRational:
    return a.inverse()


def poly_invert(p: TruncatedPolynomial) -> TruncatedPolynomial:
    return p.inverse()


def invert(a):
    """Multiplicative inverse in whichever ring ``a`` belongs to."""
    if isinstance(a, (int, Fraction)):
        return rat_invert(a)
    if isinstance(a, GaussianRational):
        return a.inverse()
    if isinstance(a, TruncatedPolynomial):
        return a.inverse()
    raise TypeError(f"unsupported ring element {a!r}")


def _format_rational(q: Fraction) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def format_scalar(a) -> str:
    """Bit-exact text form: ``-7``, ``3/4``, ``1/2-1/2i``, ``0+1i``.

    A Gaussian rational with zero imaginary part prints as a plain rational.
    """
    if isinstance(a, bool):
        raise TypeError("booleans are not ring scalars")
    if isinstance(a, (int, Fraction)):
        return _format_rational(a)
    if isinstance(a, GaussianRational):
        if a.im == 0:
            return _format_rational(a.re)
        sign = "-" if a.im < 0 else "+"
        return f"{_format_rational(a.re)}{sign}{_format_rational(abs(a.im))}i"
    raise TypeError(f"cannot format {a!r} as a ring scalar")


_RAT = re.compile(r"^[+-]?\d+(?:/\d+)?$")


def _parse_rational(text: str) -> Fraction:
    if not _RAT.match(text):
        raise ParseError(f"not a rational number: {text!r}")
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"not a rational number: {text!r}") from exc


def parse_scalar(text: str):
    """Inverse of :func:`format_scalar`; also accepts ``i``, ``-i``, ``2i``, ``3-i``.

    Returns a ``Fraction`` for real input and a :class:`GaussianRational`
    otherwise.
    """
    s = text.strip().replace(" ", "")
    if not s:
        raise ParseError("empty scalar")
    if not s.endswith("i"):
        return _parse_rational(s)
    body = s[:-1]
    split = max(body.rfind("+"), body.rfind("-"))
    if split > 0 and body[split - 1] not in "+-":
        real_text, imag_text = body[:split], body[split:]
    else:
        real_text, imag_text = "", body
    real = _parse_rational(real_text) if real_text else Fraction(0)
    if imag_text in ("", "+"):
        imag = Fraction(1)
    elif imag_text == "-":
        imag = Fraction(-1)
    else:
        imag = _parse_rational(imag_text)
    return GaussianRational(real, imag)

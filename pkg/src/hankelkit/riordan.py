"""Ordinary and exponential Riordan arrays.

An exponential array ``[g, f]`` stores ``g`` and ``f`` as ordinary power
series (coefficients ``g_n / n!``); factorial weights are applied only when a
matrix is built, so products and inverses share the ordinary code path.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .errors import (
    BadLowOrder,
    DimensionMismatch,
    InsufficientOrder,
    KindMismatch,
    NonUnitConstantTerm,
    NotLowerTriangular,
)
from .linalg import ExactMatrix
from .ring import TruncatedPolynomial
from .series import (
    RationalGF,
    Series,
    compose,
    reversion,
    revert_transform,
    series_div,
    series_mul,
)

ORDINARY = "ordinary"
EXPONENTIAL = "exponential"


@dataclass(frozen=True)
class RiordanSpec:
    g: Series
    f: Series
    kind: str = ORDINARY

    def __post_init__(self):
        if self.kind not in (ORDINARY, EXPONENTIAL):
            raise ValueError(f"unknown Riordan kind {self.kind!r}")
        if self.g[0] == 0:
            raise NonUnitConstantTerm("g(0) must be a unit")
        if self.f[0] != 0:
            raise BadLowOrder("f(0) must vanish")
        if self.f.order < 2 or self.f[1] == 0:
            raise BadLowOrder("f must have an invertible linear coefficient")

    @classmethod
    def from_gfs(cls, g: RationalGF, f: RationalGF, order: int, kind: str = ORDINARY):
        return cls(g.expand(order), f.expand(order), kind)

    @classmethod
    def exponential_from_terms(cls, g_terms, f_terms) -> "RiordanSpec":
        """``[g_e, f_e]`` from the plain sequences whose egfs are ``g`` and ``f``."""
        g = Series(Fraction(a) / factorial(n) for n, a in enumerate(g_terms))
        f = Series(Fraction(a) / factorial(n) for n, a in enumerate(f_terms))
        return cls(g, f, EXPONENTIAL)

    @classmethod
    def identity(cls, order: int, kind: str = ORDINARY) -> "RiordanSpec":
        return cls(Series.constant(1, order), Series.x(order), kind)

    @property
    def order(self) -> int:
        return min(self.g.order, self.f.order)

    def agrees_with(self, other: "RiordanSpec", n: int | None = None) -> bool:
        return (self.kind == other.kind and self.g.agrees_with(other.g, n)
                and self.f.agrees_with(other.f, n))


class TriangleMatrix:
    """A lower triangular :class:`ExactMatrix` with a provenance label."""

    __slots__ = ("matrix", "provenance")

    def __init__(self, matrix: ExactMatrix, provenance: str = ""):
        if not matrix.is_square() or not matrix.is_lower_triangular():
            raise NotLowerTriangular("matrix is not lower triangular")
        self.matrix = matrix
        self.provenance = provenance

    @classmethod
    def from_lists(cls, rows, provenance: str = "") -> "TriangleMatrix":
        """Accept ragged rows (row ``n`` of length ``n+1``) or full square rows."""
        size = len(rows)
        full = [list(r) + [0] * (size - len(r)) for r in rows]
        return cls(ExactMatrix.from_lists(full), provenance)

    @property
    def size(self) -> int:
        return self.matrix.nrows

    def __getitem__(self, ij):
        return self.matrix[ij]

    def to_lists(self) -> list:
        return self.matrix.to_lists()

    def rows(self) -> list:
        """Ragged rows, row ``n`` holding ``t_{n,0} .. t_{n,n}``."""
        return [self.matrix.row(n)[:n + 1] for n in range(self.size)]

    def __eq__(self, other):
        if isinstance(other, TriangleMatrix):
            return self.matrix == other.matrix
        if isinstance(other, ExactMatrix):
            return self.matrix == other
        return NotImplemented

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        return f"TriangleMatrix({self.size}x{self.size}, {self.provenance!r})"


def _as_matrix(t) -> ExactMatrix:
    if isinstance(t, TriangleMatrix):
        return t.matrix
    if isinstance(t, ExactMatrix):
        if not t.is_square() or not t.is_lower_triangular():
            raise NotLowerTriangular("matrix is not lower triangular")
        return t
    raise TypeError(f"expected a triangle, got {type(t).__name__}")


def riordan_matrix(spec: RiordanSpec, n: int) -> TriangleMatrix:
    """Rows ``0..n`` of the array (an ``(n+1) x (n+1)`` triangle)."""
    size = n + 1
    if spec.order < size:
        raise InsufficientOrder(f"{size} rows need order {size}, spec has {spec.order}")
    g = spec.g.truncate(size)
    f = spec.f.truncate(size)
    cols = []
    col = g
    for _ in range(size):
        cols.append(col)
        col = series_mul(col, f)
    if spec.kind == EXPONENTIAL:
        entry = lambda i, k: cols[k][i] * Fraction(factorial(i), factorial(k)) if k <= i else 0
    else:
        entry = lambda i, k: cols[k][i] if k <= i else 0
    return TriangleMatrix(ExactMatrix.from_function(size, size, entry), f"riordan:{spec.kind}")


def riordan_mul(a: RiordanSpec, b: RiordanSpec) -> RiordanSpec:
    """``(g, f) * (u, v) = (g * u(f), v(f))``."""
    if a.kind != b.kind:
        raise KindMismatch(f"cannot multiply {a.kind} by {b.kind}")
    g = series_mul(a.g, compose(b.g, a.f))
    return RiordanSpec(g, compose(b.f, a.f), a.kind)


def riordan_inverse(a: RiordanSpec) -> RiordanSpec:
    """``(g, f)^{-1} = (1 / g(fbar), fbar)``."""
    fbar = reversion(a.f)
    gf = compose(a.g, fbar)
    return RiordanSpec(series_div(Series.constant(1, gf.order), gf), fbar, a.kind)


def vertical_half(a: RiordanSpec) -> RiordanSpec:
    """The array with entries ``t_{2n-k, n}``."""
    if a.kind != ORDINARY:
        raise KindMismatch("vertical half is defined for ordinary arrays")
    h = a.f.shift_down(1)            # f = x h
    phi = reversion(series_div(Series.constant(1, h.order), h).shift_up(1).truncate(a.f.order))
    psi = phi.shift_down(1)          # phi = x psi
    # x phi' g(phi) / phi = phi' g(phi) / psi
    g = series_div(series_mul(phi.derivative(), compose(a.g, phi)), psi)
    return RiordanSpec(g, phi, ORDINARY)


def symmetrize(t) -> ExactMatrix:
    """``M[n][k] = R[n][n-k]`` for ``k <= n`` and ``R[k][k-n]`` above."""
    r = _as_matrix(t)
    return ExactMatrix.from_function(
        r.nrows, r.ncols, lambda n, k: r[n, n - k] if k <= n else r[k, k - n])


def amalgamate(a, b) -> ExactMatrix:
    """``A`` supplies the lower part, ``B`` the part above the diagonal."""
    ma, mb = _as_matrix(a), _as_matrix(b)
    if ma.shape != mb.shape:
        raise DimensionMismatch(f"{ma.shape} vs {mb.shape}")
    return ExactMatrix.from_function(
        ma.nrows, ma.ncols, lambda n, k: ma[n, n - k] if k <= n else mb[k, k - n])


def reversal(t) -> TriangleMatrix:
    """Reverse each row ``n`` within its first ``n+1`` entries."""
    r = _as_matrix(t)
    m = ExactMatrix.from_function(r.nrows, r.ncols, lambda n, k: r[n, n - k] if k <= n else 0)
    return TriangleMatrix(m, "reversal")


def _inversion_closed_form(g: Series, size: int) -> ExactMatrix:
    h = revert_transform(g.truncate(size))
    return ExactMatrix.from_function(
        size, size, lambda n, k: (-1) ** k * comb(n, k) * h[n - k] if k <= n else 0)


def inversion(spec: RiordanSpec, n: int) -> ExactMatrix:
    """Grid of the revert transform in ``x`` of ``g / (1 - y f)``.

    The bivariate series is handled as a series in ``x`` over
    ``Q[y]/(y^(n+1))``.
    """
    size = n + 1
    if spec.order < size:
        raise InsufficientOrder(f"{size} rows need order {size}, spec has {spec.order}")
    y = TruncatedPolynomial.variable(size)
    g = Series(TruncatedPolynomial.constant(c, size) for c in spec.g.truncate(size))
    f = Series(TruncatedPolynomial.constant(c, size) for c in spec.f.truncate(size))
    b = series_div(g, 1 - f * y)
    r = revert_transform(b)
    return ExactMatrix.from_function(size, size, lambda i, k: r[i][k])


def bell_inversion(g: Series, n: int) -> TriangleMatrix:
    """Inversion of the Bell matrix ``(g, x g)`` as the exponential array ``[rev(g)_e, -x]``.

    The closed form is cross-checked against the generic :func:`inversion`;
    a disagreement raises ``ArithmeticError``.
    """
    size = n + 1
    if g.order < size:
        raise InsufficientOrder(f"{size} rows need order {size}, series has {g.order}")
    if g[0] == 0:
        raise NonUnitConstantTerm("g(0) must be a unit")
    closed = _inversion_closed_form(g, size)
    generic = inversion(RiordanSpec(g.truncate(size), g.truncate(size).shift_up(1).truncate(size)), n)
    if closed != generic:
        raise ArithmeticError("Bell inversion closed form disagrees with generic reversion")
    return TriangleMatrix(closed, "bell-inversion")

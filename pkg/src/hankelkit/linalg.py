"""Exact dense matrices, minors, Hankel matrices and bivariate expansions."""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    DimensionMismatch,
    DuplicateNodes,
    IndexOutOfRange,
    InsufficientOrder,
    InsufficientTerms,
    NonUnitConstantTerm,
    NotLowerTriangularUnitDiagonal,
    NotSquare,
    ParseError,
)
from .ring import TruncatedPolynomial, format_scalar, invert, parse_scalar
from .series import Series, series_div


def _exact(a):
    # ints divide to floats; lift them to Fraction before any elimination
    if isinstance(a, int) and not isinstance(a, bool):
        return Fraction(a)
    return a


class ExactMatrix:
    """Row-major dense matrix over an exact ring."""

    __slots__ = ("nrows", "ncols", "entries")

    def __init__(self, nrows: int, ncols: int, entries: Iterable):
        entries = tuple(entries)
        if len(entries) != nrows * ncols:
            raise DimensionMismatch(f"{nrows}x{ncols} matrix needs {nrows * ncols} entries")
        self.nrows = nrows
        self.ncols = ncols
        self.entries = entries

    @classmethod
    def from_lists(cls, rows: Sequence[Sequence]) -> "ExactMatrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise DimensionMismatch("ragged rows")
        return cls(len(rows), ncols, [a for r in rows for a in r])

    @classmethod
    def from_function(cls, nrows: int, ncols: int, fn) -> "ExactMatrix":
        return cls(nrows, ncols, [fn(i, j) for i in range(nrows) for j in range(ncols)])

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls.from_function(n, n, lambda i, j: 1 if i == j else 0)

    @classmethod
    def symmetric(cls, n: int, fn) -> "ExactMatrix":
        """Build from ``fn(i, j)`` and check that the result is symmetric."""
        m = cls.from_function(n, n, fn)
        if not m.is_symmetric():
            raise ValueError("constructor did not produce a symmetric matrix")
        return m

    def __getitem__(self, ij):
        i, j = ij
        if not (0 <= i < self.nrows and 0 <= j < self.ncols):
            raise IndexOutOfRange(f"({i}, {j}) outside {self.nrows}x{self.ncols}")
        return self.entries[i * self.ncols + j]

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def row(self, i: int) -> list:
        return list(self.entries[i * self.ncols:(i + 1) * self.ncols])

    def to_lists(self) -> list:
        return [self.row(i) for i in range(self.nrows)]

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix.from_function(self.ncols, self.nrows, lambda i, j: self[j, i])

    def block(self, r0: int, r1: int, c0: int, c1: int) -> "ExactMatrix":
        if r1 > self.nrows or c1 > self.ncols:
            raise IndexOutOfRange("block exceeds matrix")
        return ExactMatrix.from_function(r1 - r0, c1 - c0, lambda i, j: self[r0 + i, c0 + j])

    def leading(self, k: int) -> "ExactMatrix":
        return self.block(0, k, 0, k)

    def map(self, fn) -> "ExactMatrix":
        return ExactMatrix(self.nrows, self.ncols, [fn(a) for a in self.entries])

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.ncols != other.nrows:
            raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
        rows = self.to_lists()
        cols = other.transpose().to_lists()
        out = []
        for r in rows:
            for c in cols:
                acc = 0
                for a, b in zip(r, c):
                    if a != 0 and b != 0:
                        acc = acc + a * b
                out.append(acc)
        return ExactMatrix(self.nrows, other.ncols, out)

    def __add__(self, other):
        if self.shape != other.shape:
            raise DimensionMismatch("shapes differ")
        return ExactMatrix(self.nrows, self.ncols, [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other):
        if self.shape != other.shape:
            raise DimensionMismatch("shapes differ")
        return ExactMatrix(self.nrows, self.ncols, [a - b for a, b in zip(self.entries, other.entries)])

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and all(a == b for a, b in zip(self.entries, other.entries))

    def __hash__(self):
        return hash((self.shape, self.entries))

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def is_symmetric(self) -> bool:
        return self.is_square() and all(
            self[i, j] == self[j, i] for i in range(self.nrows) for j in range(i))

    def is_lower_triangular(self) -> bool:
        return all(self[i, j] == 0 for i in range(self.nrows) for j in range(i + 1, self.ncols))

    def __repr__(self):
        return f"ExactMatrix({self.nrows}x{self.ncols})"

    def __str__(self):
        return format_matrix(self)


# -- interchange formats ------------------------------------------------------

def format_matrix(m: ExactMatrix) -> str:
    return "\n".join(",".join(format_scalar(a) for a in m.row(i)) for i in range(m.nrows))


def parse_matrix(text: str) -> ExactMatrix:
    """Parse either the line-per-row text form or a JSON array of arrays."""
    stripped = text.strip()
    if not stripped:
        raise ParseError("empty matrix")
    if stripped.startswith("["):
        try:
            rows = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad JSON matrix: {exc}") from None
        rows = [[parse_scalar(str(a)) for a in r] for r in rows]
    else:
        lines = [ln for ln in stripped.replace(";", "\n").splitlines() if ln.strip()]
        rows = [[parse_scalar(t) for t in re.split(r"[,\s]+", ln.strip()) if t] for ln in lines]
    try:
        return ExactMatrix.from_lists(rows)
    except DimensionMismatch as exc:
        raise ParseError(str(exc)) from None


def matrix_to_json(m: ExactMatrix) -> str:
    return json.dumps([[format_scalar(a) for a in r] for r in m.to_lists()])


# -- determinants ---------------------------------------------------------------

def determinant(m: ExactMatrix):
    """Fraction-free (Bareiss) elimination with row pivoting."""
    if not m.is_square():
        raise NotSquare(f"determinant of a {m.nrows}x{m.ncols} matrix")
    n = m.nrows
    if n == 0:
        return Fraction(1)
    a = [[_exact(x) for x in r] for r in m.to_lists()]
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if a[k][k] == 0:
            for p in range(k + 1, n):
                if a[p][k] != 0:
                    a[k], a[p] = a[p], a[k]
                    sign = -sign
                    break
            else:
                return a[k][k] * 0
        pivot = a[k][k]
        rk = a[k]
        for i in range(k + 1, n):
            ri = a[i]
            lead = ri[k]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * pivot - lead * rk[j]) / prev
            ri[k] = pivot * 0
        prev = pivot
    d = a[n - 1][n - 1]
    return d if sign == 1 else -d


def principal_minors(m: ExactMatrix) -> list:
    """Determinants of the leading 1x1, 2x2, ... blocks, each computed afresh."""
    if not m.is_square():
        raise NotSquare(f"principal minors of a {m.nrows}x{m.ncols} matrix")
    return [determinant(m.leading(k)) for k in range(1, m.nrows + 1)]


def signed_columns(m: ExactMatrix) -> ExactMatrix:
    """Multiply column ``k`` by ``(-1)^k``."""
    return ExactMatrix.from_function(m.nrows, m.ncols, lambda i, j: -m[i, j] if j % 2 else m[i, j])


# -- Hankel ---------------------------------------------------------------------

def _terms(seq) -> list:
    return seq.tolist() if isinstance(seq, Series) else list(seq)


def hankel_matrix(seq, n: int) -> ExactMatrix:
    terms = _terms(seq)
    if len(terms) < 2 * n + 1:
        raise InsufficientTerms(f"Hankel matrix of size {n + 1} needs {2 * n + 1} terms")
    return ExactMatrix.from_function(n + 1, n + 1, lambda i, j: terms[i + j])


def hankel_transform(seq, count: int | None = None) -> list:
    """``h_n = det(a_{i+j})_{0<=i,j<=n}`` for every ``n`` the terms allow."""
    terms = _terms(seq)
    if not terms:
        raise InsufficientTerms("empty sequence")
    top = (len(terms) - 1) // 2
    if count is not None:
        if count - 1 > top:
            raise InsufficientTerms(f"{count} Hankel determinants need {2 * count - 1} terms")
        top = count - 1
    return [determinant(hankel_matrix(terms, n)) for n in range(top + 1)]


# -- bivariate generating functions ---------------------------------------------

def _grid_from(obj):
    """Normalise a polynomial in x, y to a dict {(i, j): coeff}."""
    if isinstance(obj, BiPoly):
        return dict(obj.terms)
    if isinstance(obj, dict):
        return {k: v for k, v in obj.items() if v != 0}
    if not isinstance(obj, (list, tuple)):
        return {(0, 0): obj} if obj != 0 else {}
    # nested lists: obj[i][j] is the coefficient of x^i y^j
    out = {}
    for i, row in enumerate(obj):
        for j, c in enumerate(row):
            if c != 0:
                out[(i, j)] = c
    return out


class BiPoly:
    """Sparse polynomial in ``x`` and ``y``."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {k: v for k, v in (terms or {}).items() if v != 0}

    @classmethod
    def const(cls, c):
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, i: int, j: int, c=1):
        return cls({(i, j): c})

    X = None  # filled below
    Y = None

    def __add__(self, other):
        other = _as_bipoly(other)
        t = dict(self.terms)
        for k, v in other.terms.items():
            t[k] = t.get(k, 0) + v
        return BiPoly(t)

    __radd__ = __add__

    def __neg__(self):
        return BiPoly({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-_as_bipoly(other))

    def __rsub__(self, other):
        return _as_bipoly(other) - self

    def __mul__(self, other):
        other = _as_bipoly(other)
        t = {}
        for (i1, j1), a in self.terms.items():
            for (i2, j2), b in other.terms.items():
                k = (i1 + i2, j1 + j2)
                t[k] = t.get(k, 0) + a * b
        return BiPoly(t)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out = BiPoly.const(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        return isinstance(other, BiPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def coefficient(self, i: int, j: int):
        return self.terms.get((i, j), 0)

    def degree_x(self) -> int:
        return max((i for i, _ in self.terms), default=0)

    def degree_y(self) -> int:
        return max((j for _, j in self.terms), default=0)

    def __repr__(self):
        body = " + ".join(f"{format_scalar(v)}*x^{i}*y^{j}" for (i, j), v in sorted(self.terms.items()))
        return f"BiPoly({body or '0'})"


BiPoly.X = BiPoly.monomial(1, 0)
BiPoly.Y = BiPoly.monomial(0, 1)


def _as_bipoly(obj) -> BiPoly:
    if isinstance(obj, BiPoly):
        return obj
    return BiPoly.const(obj)


class BivariateGF:
    """``numerator(x, y) / denominator(x, y)`` with a unit constant denominator."""

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator, denominator=None):
        self.numerator = BiPoly(_grid_from(numerator))
        self.denominator = BiPoly(_grid_from(denominator)) if denominator is not None else BiPoly.const(1)
        c = self.denominator.coefficient(0, 0)
        if c == 0:
            raise NonUnitConstantTerm("denominator vanishes at (0, 0)")

    def __add__(self, other):
        return BivariateGF(self.numerator * other.denominator + other.numerator * self.denominator,
                           self.denominator * other.denominator)

    def __sub__(self, other):
        return BivariateGF(self.numerator * other.denominator - other.numerator * self.denominator,
                           self.denominator * other.denominator)

    def __mul__(self, other):
        return BivariateGF(self.numerator * other.numerator, self.denominator * other.denominator)

    def expand(self, rows: int, cols: int) -> ExactMatrix:
        return expand_bivariate(self, rows, cols)


_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([xyi])|(\*\*|[-+*^()]))")


def parse_bipoly(text: str) -> BiPoly:
    """Parse a polynomial in ``x`` and ``y`` such as ``(1-x*y)(1-x-y)`` or ``1 + 3xy - x^2 y``.

    Juxtaposition multiplies; ``i`` is the imaginary unit.
    """
    tokens, pos = [], 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character in {text!r} at {pos}")
        num, var, op = m.groups()
        tokens.append(("num", Fraction(num)) if num else ("var", var) if var else ("op", "^" if op == "**" else op))
        pos = m.end()
    i_unit = None
    k = 0

    def peek():
        return tokens[k] if k < len(tokens) else (None, None)

    def take():
        nonlocal k
        if k >= len(tokens):
            return (None, None)
        k += 1
        return tokens[k - 1]

    def atom():
        nonlocal i_unit
        kind, val = take()
        if kind == "num":
            return BiPoly.const(val)
        if kind == "var":
            if val == "x":
                return BiPoly.X
            if val == "y":
                return BiPoly.Y
            if i_unit is None:
                from .ring import I
                i_unit = I
            return BiPoly.const(i_unit)
        if (kind, val) == ("op", "("):
            inner = expr()
            if take() != ("op", ")"):
                raise ParseError(f"unbalanced parentheses in {text!r}")
            return inner
        raise ParseError(f"unexpected token {val!r} in {text!r}")

    def power():
        base = atom()
        if peek() == ("op", "^"):
            take()
            kind, val = take()
            if kind != "num" or val.denominator != 1:
                raise ParseError(f"exponents must be non-negative integers in {text!r}")
            base = base ** int(val)
        return base

    def term():
        acc = power()
        while True:
            kind, val = peek()
            if (kind, val) == ("op", "*"):
                take()
                acc = acc * power()
            elif kind in ("num", "var") or (kind, val) == ("op", "("):
                acc = acc * power()
            else:
                return acc

    def expr():
        sign = 1
        while peek() in (("op", "+"), ("op", "-")):
            sign = -sign if take()[1] == "-" else sign
        acc = term() if sign == 1 else -term()
        while peek() in (("op", "+"), ("op", "-")):
            op = take()[1]
            acc = acc + term() if op == "+" else acc - term()
        return acc

    if not tokens:
        raise ParseError("empty polynomial")
    result = expr()
    if k != len(tokens):
        raise ParseError(f"trailing input in {text!r}")
    return result


def parse_bivariate(text: str) -> BivariateGF:
    """``"num ; den"`` with each side in the :func:`parse_bipoly` syntax."""
    parts = text.split(";")
    if len(parts) > 2:
        raise ParseError(f"expected 'num ; den', got {text!r}")
    num = parse_bipoly(parts[0])
    den = parse_bipoly(parts[1]) if len(parts) == 2 else BiPoly.const(1)
    try:
        return BivariateGF(num, den)
    except NonUnitConstantTerm as exc:
        raise ParseError(str(exc)) from None


def _x_series(p: BiPoly, rows: int, cols: int) -> Series:
    """View ``p`` as a series in x with coefficients in Q[y]/(y^cols)."""
    coeffs = [[0] * cols for _ in range(rows)]
    for (i, j), v in p.terms.items():
        if i < rows and j < cols:
            coeffs[i][j] = v
    return Series(TruncatedPolynomial(c, cols) for c in coeffs)


def expand_bivariate(gf: BivariateGF, rows: int, cols: int) -> ExactMatrix:
    """Grid of coefficients ``[x^n y^k]`` for ``n < rows``, ``k < cols``."""
    num = _x_series(gf.numerator, rows, cols)
    den = _x_series(gf.denominator, rows, cols)
    q = series_div(num, den)
    return ExactMatrix.from_function(rows, cols, lambda n, k: q[n][k])


def diagonal_sums(m: ExactMatrix, count: int) -> list:
    """Anti-diagonal sums ``s_d = sum_{i+j=d} m[i, j]``."""
    out = []
    for d in range(count):
        acc = 0
        for i in range(d + 1):
            j = d - i
            if i < m.nrows and j < m.ncols:
                acc = acc + m[i, j]
        out.append(acc)
    return out


def _kernel_poly(G: Series, n: int) -> BiPoly:
    # (x G(x) - y G(y)) / (x - y) = sum_{a,b} G_{a+b} x^a y^b
    return BiPoly({(a, b): G[a + b] for a in range(n + 1) for b in range(n + 1)})


def hankel_gf_matrix(G: Series, n: int) -> ExactMatrix:
    """``(n+1) x (n+1)`` matrix with bivariate gf ``(x-y) / (xG(x) - yG(y))``."""
    if G.order < 2 * n + 1:
        raise InsufficientOrder(f"size {n + 1} needs order {2 * n + 1}, series has {G.order}")
    if G[0] == 0:
        raise NonUnitConstantTerm("G(0) must be a unit")
    return expand_bivariate(BivariateGF(BiPoly.const(1), _kernel_poly(G, n)), n + 1, n + 1)


def hankel_gf_matrix_direct(G: Series, n: int) -> ExactMatrix:
    """Same matrix from the convolution recurrence on the coefficients of ``G``."""
    if G.order < 2 * n + 1:
        raise InsufficientOrder(f"size {n + 1} needs order {2 * n + 1}, series has {G.order}")
    inv0 = invert(_exact(G[0]))
    m = [[None] * (n + 1) for _ in range(n + 1)]
    for i in range(n + 1):
        for j in range(n + 1):
            acc = 1 if i == 0 and j == 0 else 0
            for a in range(i + 1):
                for b in range(j + 1):
                    if a or b:
                        acc = acc - G[a + b] * m[i - a][j - b]
            m[i][j] = acc * inv0
    return ExactMatrix.from_lists(m)


# -- matrix powers and production matrices ------------------------------------------

def mat_power_entry_seq(m: ExactMatrix, i: int, j: int, count: int) -> list:
    """Entry ``(i, j)`` of ``m^t`` for ``t = 0 .. count-1``."""
    if not m.is_square():
        raise NotSquare("matrix powers need a square matrix")
    if not (0 <= i < m.nrows and 0 <= j < m.ncols):
        raise IndexOutOfRange(f"({i}, {j}) outside {m.nrows}x{m.ncols}")
    p = ExactMatrix.identity(m.nrows)
    out = []
    for _ in range(count):
        out.append(p[i, j])
        p = p @ m
    return out


def lower_unit_inverse(m: ExactMatrix) -> ExactMatrix:
    """Inverse of a lower triangular matrix with unit diagonal."""
    n = m.nrows
    if not m.is_square() or not m.is_lower_triangular() or any(m[i, i] != 1 for i in range(n)):
        raise NotLowerTriangularUnitDiagonal("expected lower triangular with unit diagonal")
    inv = [[0] * n for _ in range(n)]
    for c in range(n):
        inv[c][c] = 1
        for r in range(c + 1, n):
            acc = 0
            for k in range(c, r):
                if m[r, k] != 0:
                    acc = acc + m[r, k] * inv[k][c]
            inv[r][c] = -acc
    return ExactMatrix.from_lists(inv)


def production_matrix(m: ExactMatrix, size: int) -> ExactMatrix:
    """``P = M_size^{-1} * Mbar`` where ``Mbar`` is ``m`` without its first row."""
    if m.nrows <= size or m.ncols < size:
        raise DimensionMismatch(f"need more than {size} rows")
    head = m.leading(size)
    if not head.is_lower_triangular() or any(head[i, i] != 1 for i in range(size)):
        raise NotLowerTriangularUnitDiagonal("expected lower triangular with unit diagonal")
    return lower_unit_inverse(head) @ m.block(1, size + 1, 0, size)


# -- interpolation ------------------------------------------------------------------

def lagrange_interpolate(nodes: Sequence, values: Sequence) -> list:
    """Coefficients (ascending) of the unique polynomial through the points."""
    if len(nodes) != len(values):
        raise DimensionMismatch("nodes and values differ in length")
    if len(set(nodes)) != len(nodes):
        raise DuplicateNodes("interpolation nodes must be distinct")
    xs = [_exact(x) for x in nodes]
    coef = [_exact(v) for v in values]
    n = len(xs)
    # Newton divided differences, in place
    for k in range(1, n):
        for i in range(n - 1, k - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - k])
    poly = [coef[n - 1]] if n else []
    for k in range(n - 2, -1, -1):
        # poly = poly * (x - xs[k]) + coef[k]
        shifted = [0] + poly
        for d in range(len(poly)):
            shifted[d] = shifted[d] - xs[k] * poly[d]
        shifted[0] = shifted[0] + coef[k]
        poly = shifted
    while len(poly) > 1 and poly[-1] == 0:
        poly.pop()
    return poly


def poly_eval(coeffs: Sequence, x):
    acc = 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc

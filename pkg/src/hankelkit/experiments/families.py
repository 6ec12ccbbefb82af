"""Embedded triangles and parameterised families of Riordan arrays."""

from __future__ import annotations

from fractions import Fraction
from math import comb

from ..linalg import (
    ExactMatrix,
    determinant,
    hankel_transform,
    lagrange_interpolate,
    lower_unit_inverse,
    principal_minors,
    production_matrix,
)
from ..riordan import (
    RiordanSpec,
    bell_inversion,
    inversion,
    riordan_inverse,
    symmetrize,
)
from ..series import (
    RationalGF,
    Series,
    binomial_transform,
    invert_transform,
    log_revert_transform,
    revert_transform,
    series_div,
)
from . import data as D
from ._tools import fixture_slice, gf, param_array, scaled, sign_c2, spec, triangle


def _row_sums(m: ExactMatrix) -> list:
    return [sum(m.row(n)) for n in range(m.nrows)]


def _production_pattern(i: int, j: int) -> int:
    """Even rows read 2,1,...,1 up to the superdiagonal; odd rows are a lone superdiagonal 1."""
    if j > i + 1:
        return 0
    if j == i + 1:
        return 1
    if i % 2:
        return 0
    return 2 if j == 0 else 1


def _exponential_array(terms, size: int) -> ExactMatrix:
    """``[g_e, x]``: entry ``C(n,k) a_{n-k}``."""
    return ExactMatrix.from_function(
        size, size, lambda n, k: comb(n, k) * terms[n - k] if k <= n else 0)


def _char_poly(p: ExactMatrix) -> list:
    """Ascending coefficients of ``det(tI - p)``, by interpolation."""
    k = p.nrows
    nodes = list(range(k + 1))
    values = [determinant(ExactMatrix.from_function(k, k, lambda i, j: (t if i == j else 0) - p[i, j]))
              for t in nodes]
    return lagrange_interpolate(nodes, values)


# -- interleaved triangles ---------------------------------------------------------------------

def embedded_triangle(ck, depth, order):
    rows = max(12, depth + 3)
    a = triangle(riordan_inverse(spec("1,-1 ; 1,1", "0,1 ; 1,1,1", order)), rows)
    b = triangle(riordan_inverse(spec("1,-2,1 ; 1,0,0,-1", "0,1 ; 1,1,1", order)), rows)
    ck.matrix("first interleaved array", a.leading(6), D.SEC7_INVERSE_A)
    ck.matrix("second interleaved array", b.leading(6), D.SEC7_INVERSE_B)

    def entry(n, k):
        j, odd = divmod(k, 2)
        if k > n:
            return 0
        return b[n - j - 1, j] if odd else a[n - j, j]

    e = ExactMatrix.from_function(rows, rows, entry)
    ck.matrix("interleaving", e.leading(8), D.SEC7_EMBEDDED)
    ck.matrix("its symmetrization", symmetrize(e.leading(7)), D.SEC7_SQUARE)
    size = depth + 1
    ck.seq("minors of the symmetrization", principal_minors(symmetrize(e.leading(size))),
           fixture_slice("A005161", 1, size))

    p = production_matrix(e, 8)
    ck.matrix("production matrix", p, D.SEC7_PRODUCTION)
    wide = production_matrix(e, rows - 1)
    ck.flag("production matrix continues the displayed pattern",
            all(wide[i, j] == _production_pattern(i, j)
                for i in range(rows - 2) for j in range(rows - 1)))
    inverse = lower_unit_inverse(e.leading(size + 1))
    for k in range(1, size + 1):
        ck.seq(f"row {k} of the inverse is the characteristic polynomial of the leading {k}x{k} block",
               inverse.row(k)[:k + 1], _char_poly(wide.leading(k)))


def param_triangle_8(ck, depth, order):
    size = max(6, depth + 1)
    count = depth + 1

    def revert_at(t):
        return revert_transform(RationalGF([1], [1, 3 * t, 3, 1]).expand(size)).tolist()

    arr = param_array(revert_at, size)
    ck.matrix("coefficient array of the revert transforms", arr.block(0, 6, 0, 6), D.SEC8_PARAM_ARRAY)
    shown = [[1], [0, 3], [3, 0, 9], [1, 27, 0, 27], [18, 12, 162, 0, 81]]
    for n, poly in enumerate(shown):
        ck.seq(f"revert polynomial {n}", arr.row(n)[:len(poly)], poly)
    normal = ExactMatrix.from_function(size, size, lambda n, k: arr[n, k] / Fraction(3) ** k)
    ck.matrix("columns divided by powers of 3", normal.leading(6), D.SEC8_PARAM_SCALED)
    base = revert_transform(gf("1 ; 1,0,3,1", order))
    ck.seq("t = 0 column", base.tolist(), fixture_slice("A120984", 0, min(order, 14)))
    ck.matrix("exponential array from the t = 0 terms", _exponential_array(base.tolist(), size), normal)
    ck.misprint("inversion of (1/(1+3x^2+3x^3), -x/(1+3x^2+3x^3))",
                inversion(spec("1 ; 1,0,3,3", "0,-1 ; 1,0,3,3", order), 5), D.SEC8_PARAM_SCALED,
                "the cubic coefficient is 1, giving the inversion of (1/(1+3x^2+x^3), -x/(1+3x^2+x^3))")
    ck.matrix("inversion of (1/(1+3x^2+x^3), -x/(1+3x^2+x^3))",
              inversion(spec("1 ; 1,0,3,1", "0,-1 ; 1,0,3,1", order), 5), D.SEC8_PARAM_SCALED)

    target = fixture_slice("A005156", 1, count)
    ck.seq("Hankel of the t = 0 column", hankel_transform(base, count), target)
    sums = revert_transform(gf("1 ; 1,1,3,1", order))
    ck.seq("row sums", _row_sums(normal), sums.tolist())
    ck.seq("Hankel of the row sums", hankel_transform(sums, count), target)
    for r in (-2, -1, 1, 2):
        ck.seq(f"Hankel after multiplying by exp({r}x)",
               hankel_transform(binomial_transform(base, r), count), target)

    # A098746 from the ternary numbers t(x) = 1 + x t(x)^3
    t = Series.constant(1, order)
    for _ in range(order):
        t = (Series.constant(1, order) + (t * t * t).shift_up(1)).truncate(order)
    xt = t.shift_up(1).truncate(order)
    a098746 = Series.constant(1, order) + series_div(xt, Series.constant(1, order) - xt)
    ck.seq("A098746 Hankel", hankel_transform(a098746, min(count + 4, 10)), D.A098746_HANKEL)
    inv = triangle(riordan_inverse(spec("1,-1,1", "0,1,-2,1", order)), order)
    ck.seq("A098746 is the initial column", [inv[n, 0] for n in range(order)], a098746.tolist())
    rs = _row_sums(inv)
    ck.seq("row sums are A098746(n+1)", rs[:order - 1], a098746.tolist()[1:])
    ck.seq("Hankel of the row sums", hankel_transform(rs, min(count, 6)), D.A098746_RS_HANKEL)

    inv4 = triangle(riordan_inverse(spec("1,-1 ; 1,2,1", "0,1 ; 1,3,3,1", order)), order)
    rs4 = _row_sums(inv4)
    ck.seq("row sums of ((1-x)/(1+x)^2, x/(1+x)^3)^-1", rs4, D.RS_4N_TERMS)
    ck.seq("their Hankel", hankel_transform(rs4, count), scaled(fixture_slice("A005156", 0, count), 4))

    g = gf("1,2,1", order)
    bell = riordan_inverse(RiordanSpec(g, g.shift_up(1).truncate(order)))
    bm = triangle(bell, order)
    ic = [bm[n, 0] for n in range(order)]
    ck.seq("initial column of the inverse Bell array", ic, revert_transform(g).tolist())
    ck.seq("its row sums are the invert transform", _row_sums(bm), invert_transform(Series(ic), 1).tolist())
    ck.seq("Hankel of the initial column", hankel_transform(ic, count), target)
    ck.seq("Hankel of the row sums", hankel_transform(_row_sums(bm), count), target)
    forward = triangle(RiordanSpec(g, g.shift_up(1).truncate(order)), 12)
    ck.record("row sums of ((1+x)^2, x(1+x)^2)", _row_sums(forward))

    bi = bell_inversion(g, 5)
    ck.matrix("inversion of ((1+x)^2, x(1+x)^2)", bi.matrix, D.BELL_1X2_INVERSION)
    closed = [(-1) ** n * Fraction(comb(3 * n + 1, n), n + 1) for n in range(order)]
    ck.misprint("g_e terms from (-1)^n C(3n+1,n+1)/(n+1)",
                [(-1) ** n * Fraction(comb(3 * n + 1, n + 1), n + 1) for n in range(6)],
                [bi[n, 0] for n in range(6)], "the terms are (-1)^n C(3n+1,n)/(n+1)")
    ck.seq("g_e terms", [bi[n, 0] for n in range(6)], closed)
    ck.flag("the array is [g_e, -x]",
            all(bi[n, k] == (-1) ** k * comb(n, k) * closed[n - k] for n in range(6) for k in range(n + 1)))
    for r in (-1, 1, 2):
        ck.seq(f"Hankel after multiplying g_e by exp({r}x)",
               hankel_transform(binomial_transform(Series(closed), r), count), target)

    rx = param_array(lambda r: revert_transform(gf(f"1,{r},1", size)).tolist(), size)
    ck.matrix("coefficient array of 1/(n+1)[x^n](1+rx+x^2)^-(n+1)", rx.block(0, 7, 0, 7) if size >= 7 else rx,
              D.RX_FAMILY_ARRAY if size >= 7 else D.RX_FAMILY_ARRAY.leading(size))
    for r, sign in ((2, -1), (-2, 1)):
        rev = revert_transform(gf(f"1,{r},1", order))
        ck.seq(f"r = {r} gives signed A006013", rev.tolist()[:14],
               [sign ** n * v for n, v in enumerate(fixture_slice("A006013", 0, 14))])
        ck.seq(f"r = {r} Hankel", hankel_transform(rev, count), target)
    rev0 = revert_transform(gf("1,0,1", order))
    ck.seq("r = 0 Hankel", hankel_transform(rev0, count), sign_c2(fixture_slice("A005161", 1, count)))

    s = triangle(spec("1,2 ; 1,1,1", "0,1 ; 1,1", order), max(10, count))
    minors = principal_minors(symmetrize(s.leading(max(10, count))))
    ck.seq("minors of the symmetrized ((1+2x)/(1+x+x^2), x/(1+x))", minors, D.SQUARED_MINORS)
    roots = fixture_slice("A005156", 0, (len(minors) + 1) // 2)
    ck.seq("they are signed squares of A005156", minors[::2],
           [(-1) ** m * r * r for m, r in enumerate(roots)])


def param_triangle_9(ck, depth, order):
    size = max(7, depth + 1)
    count = depth + 1

    def logrev_at(t):
        return log_revert_transform(RationalGF([1], [1, t, 3, 1]).expand(size)).tolist()

    arr = param_array(logrev_at, size)
    ck.matrix("coefficient array of the log revert transforms", arr.block(0, 7, 0, 7), D.SEC9_PARAM_ARRAY)
    for n, poly in enumerate(D.SEC9_PARAM_POLYS):
        ck.seq(f"log revert polynomial {n}", arr.row(n)[:len(poly)], poly)
    base = logrev_at(0)
    ck.matrix("exponential array from the t = 0 terms", _exponential_array(base, size), arr.leading(size))
    ck.note("the printed coefficient extraction reads [x^n](1+tx+3x+x^3); the transform is [x^n](1+tx+3x^2+x^3)^n")
    target = scaled(fixture_slice("A051255", 1, count), 3)
    for t in (-2, -1, 0, 1, 2, 3):
        h = hankel_transform(log_revert_transform(RationalGF([1], [1, t, 3, 1]).expand(order)), count)
        ck.seq(f"Hankel at t = {t}", h, target)

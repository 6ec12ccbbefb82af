"""Open conjectures, probed to a finite depth."""

from __future__ import annotations

from math import isqrt

from ..contfrac import extract_jfraction
from ..linalg import ExactMatrix, hankel_gf_matrix, hankel_transform, principal_minors
from ..ring import I
from ..riordan import RiordanSpec, amalgamate, riordan_mul, symmetrize
from ..series import (
    RationalGF,
    Series,
    binomial_transform,
    catalan_gf,
    compose,
    log_revert_transform,
    revert_transform,
    scale,
    series_div,
    series_sqrt,
)
from . import data as D
from ._tools import ONE, X, Y, fixture_slice, gf, grid, robbins_seq, sign_c2, spec, triangle


def _root_of_abs(values):
    """Exact square roots of ``|v|``, or ``None`` where ``|v|`` is not a square."""
    out = []
    for v in values:
        a = abs(v)
        if getattr(a, "denominator", 1) != 1:
            out.append(None)
            continue
        r = isqrt(int(a))
        out.append(r if r * r == a else None)
    return out


def _sign_pattern(values) -> str:
    return "".join("0" if v == 0 else ("+" if v > 0 else "-") for v in values)


def _rational_special(r, order):
    return RationalGF([1, -1], [1, -(r + 1), r - 2, 1]).expand(order)


def qn_hankel(ck, depth, order):
    count = depth + 1
    target = fixture_slice("A005157", 0, count)
    signs = _sign_pattern(sign_c2([1] * count))
    for r in (-1, 0, 1, 2, 3):
        h = hankel_transform(log_revert_transform(_rational_special(r, order)), count)
        ck.seq(f"sqrt |Hankel of Q_n({r})|", _root_of_abs(h), target)
        ck.record(f"Hankel of Q_n({r})", h)
        ck.note(f"r={r}: computed sign pattern {_sign_pattern(h)}"
                f" ({'matches' if _sign_pattern(h) == signs else 'differs from'} (-1)^C(n+1,2))")
    h0 = hankel_transform(log_revert_transform(_rational_special(0, order)), count)
    ck.seq("Hankel of Q_n(0) against the printed values", h0, D.Q_HANKEL)
    ck.seq("A005157 against the printed values", target, D.Q_HANKEL_ROOTS)


def log_revert_conjecture(ck, depth, order):
    count = depth + 1
    g = gf("1,-1 ; 1,-1,-2,1", order)
    h = hankel_transform(log_revert_transform(g), count)
    squares = [v * v for v in fixture_slice("A005157", 0, count)]
    ck.seq("Hankel of the log revert of A052547", h, sign_c2(squares))
    ck.seq("its displayed terms", h, D.IC_RS_25)


# -- Fibonacci, Catalan, Robbins --------------------------------------------------------------

def _fib_revert(order: int) -> Series:
    """``(sqrt(1+2x+5x^2) - x - 1)/(2x^2)``."""
    root = series_sqrt(gf("1,2,5", order + 2))
    return ((root - gf("1,1", order + 2)) * RationalGF([1], [2]).expand(order + 2)).shift_down(2)


def a_tilde(order: int) -> Series:
    """``1/(1 - x^2/(1 + x^2 F(x)))``."""
    one = Series.constant(1, order)
    x2 = Series.x(order).shift_up(1).truncate(order)
    inner = one + x2 * _fib_revert(order)
    return series_div(one, one - series_div(x2, inner))


def robbins_conjecture(ck, depth, order):
    count = depth + 1
    n = order
    fib = _fib_revert(n)
    ck.seq("revert transform of the Fibonacci numbers F(n+1)", revert_transform(gf("1 ; 1,-1,-1", n)).tolist(),
           fib.tolist())
    ck.seq("F(x) expansion", fib.tolist(), D.FIB_REVERT)
    ck.seq("A007440", fib.tolist(), fixture_slice("A007440", 0, min(n, 16)))
    aerated = scale(catalan_gf(n // 2 + 1), -1)
    c_minus = Series([aerated[k // 2] if k % 2 == 0 else 0 for k in range(n)])
    ck.seq("c(-x^2)", c_minus.tolist(), D.CATALAN_AERATED_ALT)
    ck.seq("inverse binomial transform of c(-x^2)", binomial_transform(c_minus, -1).tolist(), fib.tolist())

    a = a_tilde(n)
    root = series_sqrt(gf("1,2,5", n))
    third = series_div(gf("2,3,-1", n) + root.shift_up(1).truncate(n), gf("2,4,-2,-2", n))
    ck.flag("third closed form", a.agrees_with(third))
    middle = series_div(Series.constant(1, n) - root.shift_up(1).truncate(n), gf("1,-1,-2", n) + root)
    ck.misprint("middle closed form", middle.tolist()[:8], a.tolist()[:8],
                "this quotient is not the same series; the first and last forms agree")
    cf = extract_jfraction(a, 5)
    got = [cf.mu0] + list(cf.alphas[:5]) + list(cf.betas[:5])
    ck.seq("J-fraction of A~ (mu0, alphas, betas)", got, [1, 0, 0, -1, -1, -1, 1, -1, -1, -1, -1])
    ck.note("the continued fraction for A~ is printed with numerator x; the series has constant term 1")

    rev = revert_transform(a)
    ck.seq("revert transform of A~", rev.tolist(), D.A_TILDE_REVERT)
    h = hankel_transform(rev, count)
    ck.seq("Hankel of the revert transform of A~", h, sign_c2(robbins_seq(0, count)))
    ck.seq("its displayed terms", h, D.A_TILDE_HANKEL)

    ai = scale(a, I)
    cfi = extract_jfraction(ai, 5)
    goti = [cfi.mu0] + list(cfi.alphas[:5]) + list(cfi.betas[:5])
    ck.seq("J-fraction of A~(ix)", goti, [1, 0, 0, -I, -I, -I, -1, 1, 1, 1, 1])
    revi = revert_transform(ai)
    ck.seq("revert transform of A~(ix)", revi.tolist(), D.A_TILDE_I_REVERT)
    ck.seq("Hankel of the revert transform of A~(ix)", hankel_transform(revi, count), robbins_seq(0, count))


def amalgamation(ck, depth, order):
    size = depth + 1
    big = max(size, 8)
    n = order
    a = a_tilde(n)
    g = gf("0,1 ; 1,-1,-1", n)
    gamma = gf("1,-1,-1 ; 1,-2,-1", n)
    left = RiordanSpec(series_div(Series.constant(1, n), gamma * gf("1,-1", n)), g)
    r = riordan_mul(left, RiordanSpec(series_div(a, gf("1,-1", n)), Series.x(n)))
    rm = triangle(r, big)
    m = rm @ hankel_gf_matrix(a, big - 1) @ rm.transpose()
    target = grid(ONE + X * Y, ONE - X - Y + 3 * X * Y - X * Y * Y - X * X * Y + X * X * Y * Y, big)
    ck.matrix("transformed Hankel kernel of A~", m, target)
    ck.flag("the composite has the stated form",
            r.g.agrees_with(series_div(compose(series_div(a, gf("1,-1", n)), g), gamma * gf("1,-1", n)), n - 4))
    ck.note("the printed kernel denominator reads g(y)A~(g(x)); it must be g(y)A~(g(y))")
    sym = symmetrize(triangle(spec("1,1 ; 1,1,1", "0,1 ; 1,1", n), big))
    ck.matrix("it is the symmetrization of ((1+x)/(1+x+x^2), x/(1+x))", sym, target)
    ck.matrix("displayed matrix", sym.leading(7), D.EX_SYMMETRIZED)
    ck.seq("its minors", principal_minors(target.leading(size)), sign_c2(robbins_seq(0, size)))

    first = triangle(spec("1,-1 ; 1,-1,1", "0,1 ; 1,-1", n), big)
    second = triangle(spec("1,-1 ; 1,-1,1", "0,-1 ; 1,-1", n), big)
    am = amalgamate(first, second)
    ck.matrix("amalgamation", am.leading(8), D.AMALGAMATION)
    sf = symmetrize(first)
    ck.flag("above the diagonal it is the symmetrization signed by (-1)^(k-n)",
            am == ExactMatrix.from_function(big, big, lambda i, k: sf[i, k] * (-1) ** max(k - i, 0)))
    t = triangle(spec("1,1 ; 1,-1", "0,1", n), big)
    ck.matrix("times the transpose of ((1+x)/(1-x), x)", (am @ t.transpose()).leading(7), D.EX_FINAL)
    ck.seq("minors of the amalgamation", principal_minors(am.leading(size)), robbins_seq(0, size))

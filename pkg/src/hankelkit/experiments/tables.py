"""Tables of sequences whose revert transforms share a Hankel transform."""

from __future__ import annotations

from fractions import Fraction
from math import comb

from ..contfrac import extract_jfraction
from ..linalg import (
    ExactMatrix,
    hankel_transform,
    mat_power_entry_seq,
    parse_matrix,
    principal_minors,
)
from ..ring import I
from ..series import (
    RationalGF,
    Series,
    binomial_transform,
    catalan_gf,
    invert_transform,
    log_revert_transform,
    revert_transform,
    scale,
    series_div,
)
from . import data as D
from ._tools import (
    ONE,
    X,
    Y,
    fixture_slice,
    gf,
    grid,
    robbins_seq,
    sandwich,
    scaled,
    sign_c2,
)


def _printed_prefix(ck, label, computed, printed_text, reason):
    """Check a printed prefix; a disagreement is a transcription slip, not a failure."""
    printed = D.seq(printed_text)
    if list(computed)[:len(printed)] == printed:
        ck.seq(label, computed, printed)
    else:
        ck.misprint(label, list(computed)[:len(printed)], printed, reason)


# -- 1, -2, -7, 42, 429, ... ------------------------------------------------------------------

def _central_rows(g: Series, size: int):
    """``t_{n,k} = [x^(n-k)] g^(-n)``."""
    ginv = series_div(Series.constant(1, g.order), g)
    rows, power = [], Series.constant(1, g.order)
    for n in range(size):
        rows.append([power[n - k] for k in range(n + 1)])
        power = power * ginv
    return rows


def sec6_table(ck, depth, order):
    count = depth + 1
    target = sign_c2(robbins_seq(1, count))
    for label, text, printed_rev, (mtext, (i, j)) in D.SEC6_ROWS:
        g = gf(text, order)
        walk = mat_power_entry_seq(parse_matrix(mtext), i, j, 12)
        if i != j:
            walk = walk[1:]
        ck.seq(f"{label}: matrix-power walk equals the gf", walk, g.tolist())
        rev = revert_transform(g)
        _printed_prefix(ck, f"{label}: revert transform", rev.tolist(), printed_rev,
                        "the printed terms are not those of the revert transform")
        ck.seq(f"{label}: Hankel", hankel_transform(rev, count), target)
        ck.seq(f"{label}: displayed Hankel", hankel_transform(rev, 6), D.HANKEL_M2)

    # g_{a,c}: numerator 4 + 4ax + (a^2+1)x^2
    def g_ac(a, c, n):
        a, c = Fraction(a), Fraction(c)
        return RationalGF([4, 4 * a, a * a + 1],
                          [4, 4 * c, 9 + 4 * a * c - 3 * a * a, -(a ** 3 - a * a * c - 3 * a - c)]).expand(n)

    literal00 = RationalGF([4, 4, 1], [4, 0, 9]).expand(order)
    ck.flag("the printed general numerator 4+4x does not give g_{0,0}",
            not literal00.agrees_with(gf("4,0,1 ; 4,0,9", order)))
    ck.note("g_{a,c}: the general numerator must read 4 + 4ax + (a^2+1)x^2 to give the two special cases")
    ck.flag("g_{0,0} = (4+x^2)/(4+9x^2)", g_ac(0, 0, order).agrees_with(gf("4,0,1 ; 4,0,9", order)))
    ck.flag("g_{1,-1} = (2+2x+x^2)/(2-2x+x^2)", g_ac(1, -1, order).agrees_with(gf("2,2,1 ; 2,-2,1", order)))
    for a, c in ((0, 0), (1, -1), (2, 5), (-3, 1)):
        cf = extract_jfraction(g_ac(a, c, order), 3)
        got = list(cf.alphas[:3]) + list(cf.betas[:2])
        want = [Fraction(a - c), Fraction(-a, 2), Fraction(-a, 2), -2, Fraction(-1, 4)]
        ck.seq(f"g_{{{a},{c}}}: J-fraction", got, want)
        ck.seq(f"g_{{{a},{c}}}: Hankel of the revert transform",
               hankel_transform(revert_transform(g_ac(a, c, order)), count), robbins_seq(1, count))
    ck.note("g_{a,c} continued fraction: the innermost numerator is x^2/4, not x^2/2")
    four = [Fraction(4) ** comb(n + 1, 2) * v for n, v in enumerate(robbins_seq(1, count))]
    for (a, c), rev_shown, rev2_shown in (((0, 0), D.G00_REVERT, D.G00_2X_REVERT),
                                           ((1, -1), D.G1M1_REVERT, D.G1M1_2X_REVERT)):
        g = g_ac(a, c, order)
        ck.seq(f"g_{{{a},{c}}}: revert transform", revert_transform(g).tolist(), rev_shown)
        rev2 = revert_transform(scale(g, 2))
        ck.seq(f"g_{{{a},{c}}}(2x): revert transform", rev2.tolist(), rev2_shown)
        ck.seq(f"g_{{{a},{c}}}(2x): Hankel", hankel_transform(rev2, count), four)

    f00 = RationalGF([1, I], [1, 0, 3, I]).expand(order)
    ck.seq("f_{0,0}: expansion", f00.tolist(), D.F00_TERMS)
    odd = gf("0,1,0,2 ; 1,0,6,0,9,0,1", order)
    ck.misprint("f_{0,0}: real part from the printed numerator 1+3x^2+4x^4",
                gf("1,0,3,0,4 ; 1,0,6,0,9,0,1", 8).tolist(), (f00 - odd * I).tolist()[:8],
                "the real part is (1+3x^2+x^4)/(1+6x^2+9x^4+x^6)")
    even = gf("1,0,3,0,1 ; 1,0,6,0,9,0,1", order)
    ck.flag("f_{0,0}: real and imaginary parts", f00.agrees_with(even + odd * I))
    ck.flag("f_{0,0} is A188022 at ix", f00.agrees_with(scale(gf("1,1 ; 1,0,-3,-1", order), I)))
    ck.seq("f_{0,0}: Hankel of the revert transform",
           hankel_transform(revert_transform(f00), count), robbins_seq(1, count))

    p3 = parse_matrix("0 1 0;1 0 1;0 1 1")
    ck.seq("P3 walk", mat_power_entry_seq(p3, 1, 1, 11), D.P3_TERMS)
    ck.seq("P3 walk gf", gf("1,-1 ; 1,-1,-2,1", order).tolist(), D.P3_TERMS)
    pc = RationalGF([I, 1], [I, 1, 2 * I, 1]).expand(order)
    ck.flag("complexified walk is the walk gf at ix", pc.agrees_with(scale(gf("1,-1 ; 1,-1,-2,1", order), I)))
    ck.seq("complexified walk", pc.tolist(), D.P3_COMPLEX_TERMS)
    cf = extract_jfraction(pc, 3)
    got = list(cf.alphas[:3]) + list(cf.betas[:2])
    ck.misprint("complexified walk J-fraction (alphas, betas)", got, [0, I / 2, I / 2, -1, Fraction(-1, 4)],
                "the first x^2 coefficient is 2, since the second moment is -2")
    ck.seq("complexified walk J-fraction", got, [0, I / 2, I / 2, -2, Fraction(-1, 4)])
    ck.flag("complexified walk real and imaginary parts",
            pc.agrees_with(gf("1,0,3,0,1 ; 1,0,5,0,6,0,1", order) - gf("0,0,0,1 ; 1,0,5,0,6,0,1", order) * I))
    rev = revert_transform(pc)
    ck.seq("complexified walk: revert transform", rev.tolist(), D.P3_COMPLEX_REVERT)
    ck.seq("complexified walk: Hankel", hankel_transform(rev, count), robbins_seq(1, count))

    p6 = ExactMatrix.from_function(6, 6, lambda a, b: 1 if abs(a - b) == 1 else 0)
    ck.seq("P6 walks 1 to 2", mat_power_entry_seq(p6, 0, 1, 13), D.P6_12_TERMS)
    ck.seq("P6 walks 1 to 2 gf", gf("0,1,0,-3,0,1 ; 1,0,-5,0,6,0,-1", 13).tolist(), D.P6_12_TERMS)
    ck.seq("P6 walks 1 to 6", mat_power_entry_seq(p6, 0, 5, 21), D.P6_16_TERMS)
    ck.seq("P6 walks 1 to 6 gf", gf("0,0,0,0,0,1 ; 1,0,-5,0,6,0,-1", 21).tolist(), D.P6_16_TERMS)


def sec6_ic_rs(ck, depth, order):
    count = depth + 1
    size = 2 * depth + 1
    by_column = {}
    for label, text, _, _ in D.SEC6_ROWS:
        g = gf(text, order)
        rows = _central_rows(g, size)
        ic = [r[0] for r in rows]
        rs = [sum(r) for r in rows]
        ck.seq(f"{label}: initial column is the log revert transform", ic, log_revert_transform(g).tolist())
        hic, hrs = hankel_transform(ic, count), hankel_transform(rs, count)
        shown_ic, shown_rs = D.SEC6_IC_RS[label]
        ck.seq(f"{label}: Hankel of the initial column", hic, shown_ic)
        ck.seq(f"{label}: Hankel of the row sums", hrs, shown_rs)
        by_column.setdefault(tuple(shown_ic), []).append((label, hic))
        by_column.setdefault(tuple(shown_rs), []).append((label, hrs))
    # beyond the printed six terms, rows sharing a printed column must keep agreeing
    for shown, members in by_column.items():
        first_label, first = members[0]
        for label, h in members[1:]:
            ck.seq(f"{label} agrees with {first_label} on the {','.join(map(str, shown[:3]))},... column",
                   h, first)


# -- 1, 1, 2, 6, 33, 286, ... -----------------------------------------------------------------

_SEC7_GF_FIX = {"A104769(n+2)": "1,0,-1 ; 1,1,0,-1"}


def _a047749(n: int) -> Fraction:
    m, odd = divmod(n, 2)
    return Fraction(comb(3 * m + 1, m), m + 1) if odd else Fraction(comb(3 * m, m), 2 * m + 1)


def sec7_table(ck, depth, order):
    count = depth + 1
    a005161 = fixture_slice("A005161", 1, count)
    for label, text, printed_seq, printed_rev, shown in D.SEC7_ROWS:
        if label in _SEC7_GF_FIX:
            literal = hankel_transform(revert_transform(gf(text, order)), 6)
            ck.misprint(f"{label}: Hankel from the printed gf", literal, shown,
                        f"the gf that reproduces the row is {_SEC7_GF_FIX[label]}")
            text = _SEC7_GF_FIX[label]
        g = gf(text, order)
        if printed_seq:
            ck.seq(f"{label}: expansion", g.tolist(), D.seq(printed_seq))
        rev = revert_transform(g)
        _printed_prefix(ck, f"{label}: revert transform", rev.tolist(), printed_rev,
                        "the printed terms are not those of the revert transform")
        h = hankel_transform(rev, count)
        expected = sign_c2(a005161) if shown[1] == -1 else a005161
        ck.seq(f"{label}: Hankel", h, expected)
        ck.seq(f"{label}: displayed Hankel", hankel_transform(rev, 6), shown)

    terms = [_a047749(n) for n in range(2 * 10 + 1)]
    h = hankel_transform(terms, 11)
    ck.seq("Hankel of A047749", h, D.A047749_HANKEL)
    roots = fixture_slice("A005156", 0, 6)
    ck.seq("its square roots are an aerated A005156",
           [abs(v) for v in h[::2]], [r * r for r in roots])

    f = gf("1,0,-1", order)
    square = sandwich(f, max(count, 7))
    ck.matrix("square from f = 1-x^2", square.leading(7), D.SEC7_SQUARE)
    ck.matrix("(1+x)(1+y)/(1-x^2-xy-y^2)",
              grid((ONE + X) * (ONE + Y), ONE - X * X - X * Y - Y * Y, 7), D.SEC7_SQUARE)
    ck.seq("its minors", principal_minors(square.leading(count)), a005161)


# -- 1, 3, 26, 646, ... ---------------------------------------------------------------------

_SEC8_REV_FIX = "the printed terms are not those of the revert transform"


def sec8_table(ck, depth, order):
    count = depth + 1
    target = fixture_slice("A005156", 1, count)
    for label, text, printed_seq, printed_rev in D.SEC8_ROWS:
        g = gf(text, order)
        if printed_seq:
            ck.seq(f"{label}: expansion", g.tolist(), D.seq(printed_seq))
        rev = revert_transform(g)
        _printed_prefix(ck, f"{label}: revert transform", rev.tolist(), printed_rev, _SEC8_REV_FIX)
        ck.seq(f"{label}: Hankel", hankel_transform(rev, count), target)
    ck.seq("displayed Hankel", target, D.HANKEL_3_26)

    ones_three = scaled(fixture_slice("A051255", 1, count), 3)
    for text in ("1 ; 1,0,3,1", "1 ; 1,-4,3,1"):
        h = hankel_transform(log_revert_transform(gf(text, order)), count)
        ck.misprint(f"Hankel of the log revert of {text} against 2^n[1,2,11,170,...]",
                    h, scaled(fixture_slice("A051255", 1, count), 2), "the scaling factor is 3^n")
        ck.seq(f"Hankel of the log revert of {text}", h, ones_three)

    f = gf("1 ; 1,3,3,1", order)
    square = sandwich(f, max(count, 7))
    ck.matrix("square from f = 1/(1+x)^3", square.leading(7), D.SEC8_SQUARE)
    literal = grid(ONE, (ONE - Y) * (ONE - Y) * (ONE + (Y - 3) * X * Y + X * X * Y), 7)
    ck.misprint("square from the printed rational form", literal, D.SEC8_SQUARE,
                "the rational form is 1/((1-x)(1-y)(1-3xy-x^2y-xy^2))")
    ck.matrix("1/((1-x)(1-y)(1-3xy-x^2y-xy^2))",
              grid(ONE, (ONE - X) * (ONE - Y) * (ONE - 3 * X * Y - X * X * Y - X * Y * Y), 7), D.SEC8_SQUARE)
    ck.seq("its minors", principal_minors(square.leading(count)), target)


# -- 1, 2, 11, 170, 7429, ... --------------------------------------------------------------

def _sec9_rows(order):
    """Generators of the nine rows, in the printed order."""
    n = order
    c = catalan_gf(n)
    inv_c = series_div(Series.constant(1, n), c)
    a047098 = Series([2 * comb(3 * k, k) - sum(comb(3 * k, j) for j in range(k + 1)) for k in range(n)])
    central = Series([comb(3 * k, k) for k in range(n)])
    a007226 = Series([Fraction(2 * comb(3 * k, k), k + 1) for k in range(n)])
    return [
        inv_c,
        invert_transform(binomial_transform(inv_c, -1), -1),
        invert_transform(inv_c, -1),
        binomial_transform(inv_c, -4),
        revert_transform(a047098),
        revert_transform(central),
        scale(binomial_transform(inv_c, -2), -1),
        binomial_transform(inv_c, -1),
        revert_transform(a007226),
    ]


def sec9_table(ck, depth, order):
    count = depth + 1
    base = fixture_slice("A051255", 1, count)
    scales = {4: 2, 5: 3}
    for index, ((label, printed_seq, printed_rev, printed_h), g) in enumerate(
            zip(D.SEC9_PRINTED, _sec9_rows(order))):
        name = label or "row 9"
        if printed_seq:
            ck.seq(f"{name}: sequence", g.tolist(), D.seq(printed_seq))
        rev = revert_transform(g)
        if printed_rev[0] != "A":
            ck.seq(f"{name}: revert transform", rev.tolist(), D.seq(printed_rev))
        if index == 8:
            h = hankel_transform(rev, count)
            expected = fixture_slice("A051255", 2, count)
        else:
            h = hankel_transform(rev, count)
            expected = scaled(base, scales.get(index, 1))
        ck.seq(f"{name}: Hankel", h, expected)
        if "7249" in printed_h:
            ck.note(f"{name}: printed Hankel column has 7249 where the value is 7429")

    ck.seq("ternary numbers are the revert of 1/c",
           revert_transform(_sec9_rows(order)[0]).tolist(), fixture_slice("A001764", 0, min(order, 14)))
    ck.seq("row 6 revert is C(3n,n)", revert_transform(_sec9_rows(order)[5]).tolist(),
           fixture_slice("A005809", 0, min(order, 12)))
    ck.seq("A007226 Hankel", hankel_transform(Series([Fraction(2 * comb(3 * k, k), k + 1) for k in range(order)]),
                                            count), fixture_slice("A051255", 2, count))
    tern = Series([Fraction(comb(3 * k, k), 2 * k + 1) for k in range(order)])
    ck.seq("Hankel of the ternary numbers", hankel_transform(tern, count), base)
    cube = log_revert_transform(gf("1 ; 1,3,3,1", order))
    ck.seq("log revert of 1/(1+x)^3 is C(3n,n)", cube.tolist(), fixture_slice("A005809", 0, min(order, 12)))
    h = hankel_transform(cube, count)
    ck.seq("its Hankel", h, scaled(base, 3))
    ck.misprint("its Hankel against the printed 3^n[1,2,11,270,7429]", [v / Fraction(3) ** n for n, v in
                                                                       enumerate(h[:5])],
                [1, 2, 11, 270, 7429], "the fourth term is 170")

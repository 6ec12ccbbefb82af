"""Symmetric-matrix and Riordan-array constructions of the Robbins numbers.

Every function here takes a :class:`Checks` collector, the depth (largest
index compared) and the series order, and records its comparisons.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from ..contfrac import extract_jfraction, jfraction_to_series
from ..linalg import (
    BiPoly,
    ExactMatrix,
    diagonal_sums,
    hankel_gf_matrix,
    hankel_transform,
    mat_power_entry_seq,
    poly_eval,
    principal_minors,
    signed_columns,
)
from ..riordan import (
    RiordanSpec,
    reversal,
    riordan_inverse,
    riordan_matrix,
    symmetrize,
    vertical_half,
)
from ..ring import I, parse_scalar
from ..series import (
    RationalGF,
    Series,
    binomial_transform,
    catalan_gf,
    log_revert_transform,
    reversion,
    revert_transform,
    scale,
    series_div,
    series_sqrt,
)
from . import data as D
from ._tools import (
    ONE,
    X,
    Y,
    fixture_slice,
    gf,
    grid,
    param_array,
    robbins_seq,
    sandwich,
    sign_c2,
    spec,
    triangle,
)
from .fixtures import fixture_terms, robbins


def _jfraction_check(ck, label, text, order, printed_reason=None):
    """Compare the extracted J-fraction with the displayed one and round-trip it."""
    g = gf(text, order)
    mu0, alphas, betas = D.JFRACTIONS[label][1]
    cf = extract_jfraction(g, len(alphas))
    got = [cf.mu0] + list(cf.alphas[:len(alphas)]) + list(cf.betas[:len(betas)])
    shown = [parse_scalar(str(mu0))] + [parse_scalar(a) for a in alphas] + [parse_scalar(b) for b in betas]
    key = f"J-fraction {label} (mu0, alphas, betas)"
    if printed_reason:
        ck.misprint(key, got, shown, printed_reason)
    else:
        ck.seq(key, got, shown)
    ck.flag(f"J-fraction {label} round trip",
            jfraction_to_series(cf, 2 * len(alphas)).agrees_with(g, 2 * len(alphas)))
    return cf


# -- binomial matrix minus the shifted identity ------------------------------------------

def minor_robbins(ck, depth, order):
    size = depth + 1
    big = max(size, 7)
    m = ExactMatrix.from_function(big, big, lambda n, k: comb(n + k, k) - (1 if k == n + 1 else 0))
    ck.matrix("binomial minus shift", m.leading(7), D.BINOMIAL_MINUS_SHIFT)
    ck.matrix("binomial minus shift from 1/(1-x-y) - y/(1-xy)",
              grid(ONE, ONE - X - Y, big).leading(7) - grid(Y, ONE - X * Y, 7), m.leading(7))
    ck.seq("minors", principal_minors(m.leading(size)), robbins_seq(1, size))

    r = triangle(spec("1 ; 1,-1,1", "0,1", order), 7)
    ck.matrix("M times R^T", m.leading(7) @ r.transpose(), D.SYMMETRIC_AFTER_RIGHT_MULT)
    ck.matrix("1/((1-xy)(1-x-y))", grid(ONE, (ONE - X * Y) * (ONE - X - Y), 7),
              D.SYMMETRIC_AFTER_RIGHT_MULT)

    # R = (1/((1-x) sqrt(1-4x)), x c(x)) by three routes
    c = catalan_gf(order)
    root = series_sqrt(gf("1,-4", order))
    rs = RiordanSpec(series_div(Series.constant(1, order), gf("1,-1", order) * root),
                     c.shift_up(1).truncate(order))
    ck.matrix("embedded Riordan array", triangle(rs, 7), D.REVERSED_EMBEDDED)
    ck.matrix("its symmetrization", symmetrize(triangle(rs, 7)), D.SYMMETRIC_AFTER_RIGHT_MULT)
    n_cmp = order - 4
    ck.flag("inverse of (1-3x+3x^2-2x^3, x(1-x))",
            riordan_inverse(spec("1,-3,3,-2", "0,1,-1", order)).agrees_with(rs, n_cmp))
    ck.flag("vertical half of (1/((1-x)(1-x+x^2)), x/(1-x))",
            vertical_half(spec("1 ; 1,-2,2,-1", "0,1 ; 1,-1", order)).agrees_with(rs, n_cmp))
    rm = triangle(rs, big)
    ck.flag("entries are sums of C(2j-k, j-k)",
            all(rm[i, k] == sum(comb(2 * j - k, j - k) for j in range(k, i + 1))
                for i in range(big) for k in range(i + 1)))
    ck.seq("minors of the symmetrized vertical half",
           principal_minors(symmetrize(rm.leading(size))), robbins_seq(1, size))

    sums = diagonal_sums(grid(ONE, (ONE - X * Y) * (ONE - X - Y), 11), 11)
    ck.seq("diagonal sums", sums, D.DIAGONAL_SUMS)
    ck.seq("diagonal sums from 1/((1-x^2)(1-2x))", sums, gf("1 ; 1,-2,-1,2", 11).tolist())
    jacobsthal = set(fixture_slice("A001045", 0, 8))
    ck.flag("A_n is odd exactly at the Jacobsthal numbers (n <= 12)",
            all(bool(robbins(n) % 2) == (n in jacobsthal) for n in range(13)))

    # the preceding example: (1/(1+x+x^2), x/(1+x)) and two variants
    a = triangle(spec("1 ; 1,1,1", "0,1 ; 1,1", order), max(big, 8))
    ck.matrix("(1/(1+x+x^2), x/(1+x))", a.leading(7), D.RIORDAN_1_1XX)
    ck.matrix("its symmetrization", symmetrize(a.leading(7)), D.SYM_1_1XX)
    ck.matrix("1/((1-x+xy)(1-y+xy))", grid(ONE, (ONE - X + X * Y) * (ONE - Y + X * Y), 7), D.SYM_1_1XX)
    ck.seq("minors of the symmetrization", principal_minors(symmetrize(a.leading(size))),
           sign_c2(robbins_seq(1, size)))
    ck.seq("displayed minors", principal_minors(symmetrize(a.leading(8))), D.MINORS_SIGNED_ROBBINS)
    plus = grid(ONE, (ONE + X + X * Y) * (ONE + Y + X * Y), big)
    ck.matrix("1/((1+x+xy)(1+y+xy))", plus.leading(7), D.SYM_PLUS_VARIANT)
    ck.seq("its minors", principal_minors(plus.leading(size)), sign_c2(robbins_seq(1, size)))
    ck.seq("its minors after signing columns", principal_minors(signed_columns(plus.leading(size))),
           robbins_seq(1, size))
    iB = BiPoly.const(I)
    literal = grid(ONE, (ONE - iB * X + X * Y) * (ONE - iB * Y + X * Y), 7)
    fixed = grid(ONE, (ONE - iB * X - X * Y) * (ONE - iB * Y - X * Y), big)
    ck.misprint("complex variant from 1/((1-ix+xy)(1-iy+xy))", literal, D.COMPLEX_VARIANT,
                "the display is the expansion of 1/((1-ix-xy)(1-iy-xy))")
    ck.matrix("complex variant from 1/((1-ix-xy)(1-iy-xy))", fixed.leading(7), D.COMPLEX_VARIANT)
    ck.seq("complex variant minors", principal_minors(fixed.leading(size)), robbins_seq(1, size))


# -- the 2-factorial numbers ----------------------------------------------------------------

def _two_factorial_variant(size):
    return grid(X * Y * (ONE - X) * (ONE - Y), (ONE - X - Y - X * Y) * (ONE - X - Y), size) \
        + ExactMatrix.from_function(size, size, lambda i, j: 1 if i == j == 0 else 0)


def two_factorial(ck, depth, order):
    size = depth + 1
    big = max(size, 7)
    v = _two_factorial_variant(big)
    ck.matrix("1 + xy(1-x)(1-y)/((1-x-y-xy)(1-x-y))", v.leading(7), D.TWO_FACTORIAL_VARIANT)
    minors = principal_minors(v.leading(size))
    ck.seq("minors", minors, fixture_slice("A005329", 0, size))
    ck.seq("displayed minors", minors, D.TWO_FACTORIAL_MINORS)
    as_printed = [2 ** comb(n, 2) for n in range(size)]
    ck.misprint("minors against the printed product of 2^(i-1)", minors, as_printed,
                "the 2-factorial numbers are the products of (2^i - 1)")
    pascal = triangle(spec("1 ; 1,-1", "0,1 ; 1,-1", order), 7)
    ck.matrix("Pascal conjugate", pascal @ v.leading(7) @ pascal.transpose(), D.TWO_FACTORIAL_CONJUGATED)
    orig = grid(ONE, (ONE - X - Y - X * Y) * (ONE - X - Y), big)
    ck.matrix("1/((1-x-y-xy)(1-x-y))", orig.leading(7), D.TWO_FACTORIAL_ORIGINAL)
    ck.seq("its minors", principal_minors(orig.leading(size)), fixture_slice("A005329", 1, size))
    ck.seq("its diagonal sums", diagonal_sums(grid(ONE, (ONE - X - Y - X * Y) * (ONE - X - Y), 8), 8),
           fixture_terms("A094706"))


# -- A_n from 1 + xy/(1-x-y) ----------------------------------------------------------------

def robbins_an(ck, depth, order):
    size = depth + 1
    big = max(size, 7)
    before = grid(X * Y, ONE - X - Y, big) + ExactMatrix.from_function(
        big, big, lambda i, j: 1 if i == j == 0 else 0)
    ck.matrix("1 + xy/(1-x-y)", before.leading(7), D.AN_BEFORE_SHIFT)
    shift = ExactMatrix.from_function(big, big, lambda i, k: 1 if k == i + 1 and i >= 1 else 0)
    after = before - shift
    ck.matrix("after removing the shift", after.leading(7), D.AN_AFTER_SHIFT)
    closed = grid(ONE - Y - X * (ONE - Y) * (ONE + Y + Y * Y) + X * X * Y,
                  (ONE - X * Y) * (ONE - X - Y), big)
    ck.matrix("rational form of the shifted matrix", closed, after)
    ck.seq("minors", principal_minors(after.leading(size)), robbins_seq(0, size))


# -- Example Ex and the closing example ---------------------------------------------------

def example_ex(ck, depth, order):
    size = depth + 1
    big = max(size, 7)
    e = spec("1,-1,1 ; 1,-1", "0,1 ; 1,-1", order)
    ck.matrix("((1-x+x^2)/(1-x), x/(1-x))", triangle(e, 7), D.EX_RIORDAN)
    inv = riordan_inverse(e)
    ck.matrix("its inverse", triangle(inv, 7), D.EX_INVERSE)
    ck.flag("inverse is ((1+x)/(1+x+x^2), x/(1+x))",
            inv.agrees_with(spec("1,1 ; 1,1,1", "0,1 ; 1,1", order), order - 4))
    sym = symmetrize(triangle(inv, big))
    ck.matrix("symmetrization", sym.leading(7), D.EX_SYMMETRIZED)
    ck.matrix("(1+xy)/((1-x+xy)(1-y+xy))", grid(ONE + X * Y, (ONE - X + X * Y) * (ONE - Y + X * Y), big), sym)
    ck.seq("minors of the symmetrization", principal_minors(sym.leading(size)), sign_c2(robbins_seq(0, size)))
    ck.seq("displayed minors", principal_minors(symmetrize(triangle(inv, 10))), D.EX_MINORS)
    signed = signed_columns(sym)
    t = triangle(spec("1,1 ; 1,-1", "0,1", order), big)
    final = signed @ t.transpose()
    ck.matrix("signed symmetrization times T^T", final.leading(7), D.EX_FINAL)
    ck.matrix("(1+y)(1-xy)/((1-y)(1+y-xy)(1-x-xy))",
              grid((ONE + Y) * (ONE - X * Y), (ONE - Y) * (ONE + Y - X * Y) * (ONE - X - X * Y), big), final)
    ck.seq("minors", principal_minors(final.leading(size)), robbins_seq(0, size))
    copied = triangle(spec("1,-1 ; 1,-3,3,-2", "0,1 ; 1,-1", order), 7)
    lower = ExactMatrix.from_function(7, 7, lambda i, k: final[i, k] if k <= i else 0)
    ck.matrix("lower part is the reversed Riordan array", lower, reversal(copied).matrix)
    ck.matrix("displayed Riordan array", copied, D.EX_REVERSED_COPY)

    # closing example: g = (1-x)/(1-3x^2+x^3)
    g = gf("1,-1 ; 1,0,-3,1", order)
    kernel = hankel_gf_matrix(g, big - 1)
    ck.misprint("kernel matrix of (1-x)/(1-3x^2+x^3)", kernel.leading(7), D.A188022_KERNEL,
                "the display repeats the expansion of 1/((1+x+xy)(1+y+xy)), which has the same minors")
    ck.seq("kernel minors", principal_minors(kernel.leading(size)), sign_c2(robbins_seq(1, size)))
    ck.matrix("kernel sandwiched by (g/(1-x), x)", sandwich(g, 7), D.SYM_1_1XX)
    ck.seq("expansion of g", g.tolist(), D.A188022_SIGNED)
    ck.seq("reversion of x g", reversion(g.shift_up(1).truncate(order)).tolist(), D.A188022_REVERSION)
    ck.seq("Hankel of the revert transform", hankel_transform(revert_transform(g), size),
           sign_c2(robbins_seq(1, size)))


# -- continued fractions -------------------------------------------------------------------

_BETA_TYPO = "the leading x^2 coefficient must be 2 since the second Hankel determinant is 2"


def shift_family(ck, depth, order):
    count = depth + 1
    target = sign_c2(robbins_seq(1, count))
    fracs = {}
    for label, reason in (("A121449", _BETA_TYPO), ("A052536", _BETA_TYPO), ("A077998", None)):
        text = D.JFRACTIONS[label][0]
        fracs[label] = _jfraction_check(ck, label, text, order, reason)
        ck.seq(f"Hankel of the revert transform of {label}",
               hankel_transform(revert_transform(gf(text, order)), count), target)
    ck.seq("A121449 expansion", gf(D.JFRACTIONS["A121449"][0], order).tolist(), D.A121449_TERMS)
    ck.flag("the three fractions differ only in alpha_0 and a common shift of the tail",
            len({tuple(cf.betas[:2]) for cf in fracs.values()}) == 1
            and all(cf.alphas[1] == cf.alphas[2] for cf in fracs.values()))
    ck.seq("displayed Hankel", hankel_transform(revert_transform(gf(D.JFRACTIONS["A052536"][0], order)), 6),
           D.HANKEL_M2)

    # complex companion: (1-ix)/(1-3ix-ix^3) is A052536 at ix
    literal = RationalGF([1, -I], [1, -3 * I, 0, -1]).expand(order)
    fixed = RationalGF([1, -I], [1, -3 * I, 0, -I]).expand(order)
    ck.flag("(1-ix)/(1-3ix-ix^3) is the i-scaling of A052536",
            fixed.agrees_with(scale(gf(D.JFRACTIONS["A052536"][0], order), I)))
    ck.misprint("Hankel of the revert of (1-ix)/(1-3ix-x^3)",
                hankel_transform(revert_transform(literal), 6), robbins_seq(1, 6),
                "the cubic term needs the factor i, giving (1-ix)/(1-3ix-ix^3)")
    ck.seq("Hankel of the revert of (1-ix)/(1-3ix-ix^3)",
           hankel_transform(revert_transform(fixed), count), robbins_seq(1, count))

    shifted = fixture_slice("A005156", 1, count)
    a215404 = gf(D.JFRACTIONS["A215404"][0], order)
    ck.seq("A215404 expansion", a215404.tolist(), D.A215404_TERMS)
    for label in ("A215404", "(1-x)^2", "1/(1-x)^3"):
        _jfraction_check(ck, label, D.JFRACTIONS[label][0], order)
        ck.seq(f"Hankel of the revert transform of {label}",
               hankel_transform(revert_transform(gf(D.JFRACTIONS[label][0], order)), count), shifted)
    ck.seq("displayed A005156(n+1)", shifted, D.A005156_SHIFTED)
    literal = Series([Fraction(comb(3 * n + 1, n + 1), n + 1) for n in range(order)])
    ck.misprint("revert transform of C(3n+1,n+1)/(n+1)", revert_transform(literal).tolist()[:6],
                [1, -2, 1, 0, 0, 0], "A006013 is C(3n+1,n)/(n+1)")
    a006013 = Series([Fraction(comb(3 * n + 1, n), n + 1) for n in range(order)])
    ck.seq("A006013", a006013.tolist(), fixture_terms("A006013"))
    ck.flag("(1-x)^2 is the revert transform of A006013",
            revert_transform(a006013).agrees_with(gf("1,-2,1", order)))
    a = [Fraction((-1) ** n * comb(3 * n + 3, n + 1), 2 * n + 3) for n in range(order)]
    ck.flag("1/(1-x)^3 is the revert transform of (-1)^n C(3n+3,n+1)/(2n+3)",
            revert_transform(Series(a)).agrees_with(gf("1 ; 1,-3,3,-1", order)))


def lawrence(ck, depth, order):
    count = depth + 1
    m = ExactMatrix.from_lists([[0, 1, 0], [0, 0, 1], [1, -3, 1]])
    ck.matrix("Lawrence matrix", m, D.LAWRENCE_MATRIX)
    shown = D.LAWRENCE_TERMS[:-1]
    powers = mat_power_entry_seq(m, 1, 2, len(D.LAWRENCE_TERMS) + 1)[1:]
    g = gf("1 ; 1,-1,3,-1", order)
    ck.seq("(2,3) entries of the powers", powers, shown)
    ck.seq("expansion of 1/(1-x+3x^2-x^3)", g.tolist(), shown)
    ck.misprint("fourteenth term", [g[13]], D.LAWRENCE_TERMS[-1:], "the term is 169")
    _jfraction_check(ck, "lawrence", D.JFRACTIONS["lawrence"][0], order,
                     "every displayed alpha has the wrong sign")
    rev = revert_transform(g)
    ck.seq("revert transform", rev.tolist(), D.LAWRENCE_REVERT)
    shifted = fixture_slice("A005156", 1, count)
    ck.seq("Hankel of the revert transform", hankel_transform(rev, count), shifted)
    ck.seq("Hankel of its alternating version",
           hankel_transform(scale(rev, -1), count), shifted)


# -- centered polygon numbers ---------------------------------------------------------------

def _centered(r, order):
    return RationalGF([1, r - 2, 1], [1, -3, 3, -1]).expand(order)


def centered_polygon(ck, depth, order):
    count = depth + 1
    for r, terms in D.CENTERED_SEQUENCES.items():
        ck.seq(f"centered numbers r={r}", _centered(r, order).tolist(),
               [1 + r * comb(n + 1, 2) for n in range(len(terms))])
        ck.seq(f"displayed centered numbers r={r}", _centered(r, order).tolist(), terms)
    # h_n(r) has degree n(n+1): interpolate on that many nodes
    top = depth * (depth + 1)
    nodes = list(range(-(top // 2), top - top // 2 + 1))
    need = 2 * depth + 1
    hank = {r: hankel_transform(revert_transform(_centered(r, need)), count) for r in nodes}
    polys = param_array(lambda r: hank[r], count, nodes)
    quotients = []
    for n in range(count):
        low = comb(n + 1, 2)
        row = polys.row(n)
        ck.flag(f"h_{n}(r) divisible by r^{low}", all(c == 0 for c in row[:low]))
        quotient = row[low:]
        while len(quotient) > 1 and quotient[-1] == 0:
            quotient.pop()
        quotients.append(quotient)
    for n, shown in enumerate(D.CENTERED_SCALED_POLYS[:count]):
        ck.seq(f"scaled polynomial n={n}", quotients[n], shown)
    table = {r: [poly_eval(quotients[n], r) for n in range(count)] for r in range(5)}
    for r in range(5):
        ck.seq(f"table row r={r}", table[r], D.CENTERED_TABLE[r])
    ck.seq("row r=3 is A_{n+1}", table[3], robbins_seq(1, count))
    ck.seq("row r=4 is A005156(n+1)", table[4], fixture_slice("A005156", 1, count))
    ck.seq("row r=0 is a signed A005161", table[0], sign_c2(fixture_slice("A005161", 1, count)))
    arr = param_array(lambda r: revert_transform(_centered(r, 8)).tolist(), 8)
    ck.matrix("coefficient array of the revert transforms", arr, D.CENTERED_REVERT_ARRAY)

    g = _centered(3, order)
    ck.misprint("J-fraction centered-triangle (mu0, alphas, betas)", *_jf_lists(g, "centered-triangle"),
                "the second alpha of the expansion is -1/2")
    cf = extract_jfraction(g, 3)
    ck.flag("centered-triangle round trip", jfraction_to_series(cf, 6).agrees_with(g, 6))
    m = hankel_gf_matrix(g, max(count, 7) - 1)
    ck.matrix("kernel matrix for r=3", m.leading(7), D.CENTERED_M)
    ck.seq("its minors scaled by 3^C(n+1,2)",
           [v / Fraction(3) ** comb(n + 1, 2) for n, v in enumerate(principal_minors(m.leading(count)))],
           robbins_seq(1, count))
    ck.matrix("kernel sandwiched by (g/(1-x), x)", sandwich(g, 7), D.CENTERED_M_CONJUGATED)
    bt = binomial_transform(g, -1)
    ck.seq("inverse binomial transform is 1+3x+3x^2", bt.tolist(), [1, 3, 3] + [0] * (order - 3))
    ck.seq("Hankel of the revert of 1+3x+3x^2",
           hankel_transform(revert_transform(bt), count),
           [Fraction(3) ** comb(n + 1, 2) * a for n, a in enumerate(robbins_seq(1, count))])


def _jf_lists(g, label):
    mu0, alphas, betas = D.JFRACTIONS[label][1]
    cf = extract_jfraction(g, len(alphas))
    got = [cf.mu0] + list(cf.alphas[:len(alphas)]) + list(cf.betas[:len(betas)])
    shown = [parse_scalar(str(mu0))] + [parse_scalar(a) for a in alphas] + [parse_scalar(b) for b in betas]
    return got, shown


# -- heptagon and nonagon -------------------------------------------------------------------

_KERNEL_TYPO = "the kernel denominator reads x g(x) - y g(x); it must be x g(x) - y g(y)"


def heptagon(ck, depth, order):
    count = depth + 1
    ck.matrix("polygon polynomial array ((1-x)/(1+x^2), x/(1+x^2))",
              triangle(spec("1,-1 ; 1,0,1", "0,1 ; 1,0,1", order), 7), D.POLYGON_RIORDAN)
    g = gf("1,-1 ; 1,-2,-1,1", order)
    ck.seq("expansion", g.tolist(), D.HEPTAGON_TERMS)
    ck.seq("(1,1) entries of the powers",
           mat_power_entry_seq(ExactMatrix.from_lists([[1, 1, 1], [1, 1, 0], [1, 0, 0]]), 0, 0, 11),
           D.HEPTAGON_TERMS)
    _jfraction_check(ck, "A077998", D.JFRACTIONS["A077998"][0], order)
    rev = revert_transform(g)
    ck.seq("revert transform", rev.tolist(), D.HEPTAGON_REVERT)
    h = hankel_transform(rev, count)
    ck.seq("Hankel of the revert transform", h, sign_c2(robbins_seq(1, count)))
    ck.seq("displayed Hankel", hankel_transform(rev, 9), D.POLYGON_HANKEL)
    s = sandwich(g, max(count, 7))
    ck.matrix("kernel sandwiched by (g/(1-x), x)", s.leading(7), D.HEPTAGON_MATRIX)
    ck.note(f"kernel formula: {_KERNEL_TYPO}")
    ck.seq("its minors", principal_minors(s.leading(count)), h)


def nonagon(ck, depth, order):
    count = depth + 1
    g = gf("1,0,-1 ; 1,2,-3,-1,1", order)
    ck.flag("(1-x^2)/(1+2x-3x^2-x^3+x^4) = (1+x)/(1+3x-x^3)", g.agrees_with(gf("1,1 ; 1,3,0,-1", order)))
    literal = gf("1,1 ; 1,-3,0,1", order)
    ck.misprint("expansion of (1+x)/(1-3x+x^3)", literal.tolist()[:len(D.NONAGON_TERMS)], D.NONAGON_TERMS,
                "the reduced form is (1+x)/(1+3x-x^3)")
    ck.seq("expansion", g.tolist(), D.NONAGON_TERMS)
    _jfraction_check(ck, "nonagon", D.JFRACTIONS["nonagon"][0], order)
    rev = revert_transform(g)
    ck.seq("revert transform", rev.tolist(), D.NONAGON_REVERT)
    h = hankel_transform(rev, count)
    ck.seq("Hankel of the revert transform", h, sign_c2(robbins_seq(1, count)))
    ck.seq("same Hankel as the heptagon",
           h, hankel_transform(revert_transform(gf("1,-1 ; 1,-2,-1,1", order)), count))
    s = sandwich(g, max(count, 7))
    ck.matrix("kernel sandwiched by (g/(1-x), x)", s.leading(7), D.NONAGON_MATRIX)
    ck.seq("its minors", principal_minors(s.leading(count)), h)
    gc = RationalGF([1, I], [1, 3 * I, 0, I]).expand(order)
    sc = sandwich(gc, max(count, 7))
    ck.matrix("complex example (1+ix)/(1+3ix-(ix)^3)", sc.leading(7), D.POLYGON_COMPLEX_MATRIX)
    ck.seq("complex example minors", principal_minors(sc.leading(count)), robbins_seq(1, count))
    ck.note(f"kernel formula: {_KERNEL_TYPO}")


# -- the special 3x3 matrix -------------------------------------------------------------------

def _special_g(r, order):
    return RationalGF([1, -1], [1, -(r + 1), r - 2, 1]).expand(order)


def special_matrix(ck, depth, order):
    size = max(depth + 1, 7)
    count = depth + 1

    def powers(r):
        m = ExactMatrix.from_lists([[r, 1, 1], [1, 1, 0], [1, 0, 0]])
        return mat_power_entry_seq(m, 0, 0, size)

    p = param_array(powers, size)
    ck.matrix("coefficient array of P_n(r)", p.leading(7), D.SPECIAL_P_ARRAY)
    base = spec("1,-1 ; 1,-1,-2,1", "0,1,-1 ; 1,-1,-2,1", order)
    ck.matrix("it is a Riordan array", triangle(base, size), p)
    for r in range(4):
        ck.seq(f"gf of P_n({r})", _special_g(r, size).tolist(), powers(r))
    for r in range(-1, 3):
        cf = extract_jfraction(_special_g(r, order), 3)
        ck.seq(f"J-fraction at r={r}", [cf.alphas[0], cf.alphas[1], cf.alphas[2], cf.betas[0], cf.betas[1]],
               [r, Fraction(1, 2), Fraction(1, 2), 2, Fraction(1, 4)])
        ck.seq(f"Hankel of the revert at r={r}",
               hankel_transform(revert_transform(_special_g(r, order)), count), sign_c2(robbins_seq(1, count)))

    pbar = param_array(lambda r: revert_transform(_special_g(r, size)).tolist(), size)
    ck.matrix("coefficient array of the revert polynomials", pbar.leading(7), D.SPECIAL_PBAR_ARRAY)
    wrong = param_array(
        lambda r: revert_transform(RationalGF([1, -1], [1, -(r + 1), -(r - 2), 1]).expand(size)).tolist(), size)
    ck.misprint("revert polynomials from the printed gf with -(r-2)x^2", wrong.leading(7), D.SPECIAL_PBAR_ARRAY,
                "the x^2 coefficient must be +(r-2), as in the gf of P_n(r)")
    at0 = revert_transform(_special_g(0, order))
    ck.seq("revert polynomial at r=0", at0.tolist(), D.SPECIAL_PBAR_AT_ZERO)
    exp = RiordanSpec.exponential_from_terms(at0.tolist()[:size], [0, -1] + [0] * (size - 2))
    ck.matrix("it is the exponential array [g_e, -x]", triangle(exp, size), pbar)

    q = param_array(lambda r: log_revert_transform(_special_g(r, size)).tolist(), size)
    ck.matrix("coefficient array of Q_n(r)", q.leading(7), D.SPECIAL_Q_ARRAY)
    q0 = log_revert_transform(_special_g(0, order))
    ck.seq("Q_n(0)", q0.tolist(), D.SPECIAL_Q_AT_ZERO)
    expq = RiordanSpec.exponential_from_terms(q0.tolist()[:size], [0, -1] + [0] * (size - 2))
    ck.matrix("it is the exponential array [g_e, -x]", triangle(expq, size), q)
    f = at0
    xdf = f.derivative().shift_up(1).truncate(order - 1)
    ratio = series_div(xdf, f.truncate(order - 1))
    ck.misprint("x f'(x)/f(x) for f the revert transform", ratio.tolist()[:7], D.SPECIAL_Q_AT_ZERO,
                "the egf sequence is 1 + x f'/f, that is x F'/F for F = x f")
    ck.seq("1 + x f'(x)/f(x)", (ratio + 1).tolist(), q0.tolist()[:ratio.order])

    inv = riordan_inverse(base)
    ck.flag("the inverse is a Bell matrix", inv.f.agrees_with(inv.g.shift_up(1).truncate(inv.f.order)))
    ck.seq("first column of the inverse", inv.g.tolist(), at0.tolist())
    rows = 2 * depth + 1
    im = triangle(inv, rows)
    for r in (-1, 0, 1, 2):
        column = [sum(im[n, k] * Fraction(r) ** k for k in range(n + 1)) for n in range(rows)]
        ck.seq(f"Hankel of (u,v) applied to 1/(1-{r}x)", hankel_transform(column, count),
               sign_c2(robbins_seq(1, count)))

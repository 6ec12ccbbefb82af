from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hankelkit.errors import (
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
from hankelkit.experiments import data as D
from hankelkit.experiments.fixtures import robbins
from hankelkit.linalg import (
    BiPoly,
    BivariateGF,
    ExactMatrix,
    determinant,
    diagonal_sums,
    expand_bivariate,
    format_matrix,
    hankel_gf_matrix,
    hankel_gf_matrix_direct,
    hankel_matrix,
    hankel_transform,
    lagrange_interpolate,
    lower_unit_inverse,
    mat_power_entry_seq,
    matrix_to_json,
    parse_bipoly,
    parse_bivariate,
    parse_matrix,
    poly_eval,
    principal_minors,
    production_matrix,
)
from hankelkit.ring import I
from hankelkit.series import RationalGF, Series, revert_transform

from strategies import rationals

X, Y, ONE = BiPoly.X, BiPoly.Y, BiPoly.const(1)


def gf(text, n):
    return RationalGF.parse(text).expand(n)


def test_constructors_and_shape():
    m = ExactMatrix.from_lists([[1, 2, 3], [4, 5, 6]])
    assert m.shape == (2, 3)
    assert m.transpose().shape == (3, 2)
    with pytest.raises(DimensionMismatch):
        ExactMatrix.from_lists([[1, 2], [3]])
    assert ExactMatrix.identity(3).is_lower_triangular()


def test_matrix_text_forms():
    m = parse_matrix("1,2;3,-1/2")
    assert format_matrix(m) == "1,2\n3,-1/2"
    assert parse_matrix(matrix_to_json(m)) == m
    assert parse_matrix("1 i\n-i 2")[0, 1] == I
    with pytest.raises(ParseError):
        parse_matrix("1,2;3")
    with pytest.raises(ParseError):
        parse_matrix("")


def test_bivariate_examples():
    m = expand_bivariate(BivariateGF(ONE, (ONE - X * Y) * (ONE - X - Y)), 7, 7)
    assert m.row(0) == [1] * 7
    assert m.row(1) == [1, 3, 4, 5, 6, 7, 8]
    assert m.row(2) == [1, 4, 9, 14, 20, 27, 35]
    assert m == D.SYMMETRIC_AFTER_RIGHT_MULT
    ex = expand_bivariate(BivariateGF(ONE + X * Y, (ONE - X + X * Y) * (ONE - Y + X * Y)), 7, 7)
    assert ex == D.EX_SYMMETRIZED
    assert ex.row(1)[:4] == [1, 0, -1, -2]
    assert expand_bivariate(BivariateGF(ONE, ONE - X * Y), 3, 3) == ExactMatrix.identity(3)
    with pytest.raises(NonUnitConstantTerm):
        expand_bivariate(BivariateGF(ONE, X + Y), 3, 3)


def test_parse_bivariate():
    a = expand_bivariate(parse_bivariate("1 ; (1-x*y)(1-x-y)"), 6, 6)
    b = expand_bivariate(BivariateGF(ONE, (ONE - X * Y) * (ONE - X - Y)), 6, 6)
    assert a == b
    c = expand_bivariate(parse_bivariate("1+x y ; (1 - x + x y)*(1-y+x*y)"), 5, 5)
    assert c == D.EX_SYMMETRIZED.leading(5)
    assert parse_bipoly("(1+x)^2 - 2x") == parse_bipoly("1 + x**2")
    assert parse_bipoly("i*x") == BiPoly.const(I) * X
    for bad in ("1 +", "(1+x", "x^y", "1 ; 0", "z"):
        with pytest.raises(ParseError):
            expand_bivariate(parse_bivariate(bad), 3, 3)


def test_determinant_examples():
    assert determinant(ExactMatrix.from_lists([[1, 1], [1, 3]])) == 2
    assert determinant(ExactMatrix.from_lists([[1, 1], [1, 1]])) == 0
    with pytest.raises(NotSquare):
        determinant(ExactMatrix.from_lists([[1, 2, 3]]))
    # zero leading pivot needs a row swap
    assert determinant(ExactMatrix.from_lists([[0, 1], [1, 0]])) == -1


def test_principal_minors_examples():
    m = expand_bivariate(BivariateGF(ONE, (ONE - X * Y) * (ONE - X - Y)), 7, 7)
    assert principal_minors(m) == [1, 2, 7, 42, 429, 7436, 218348]
    assert principal_minors(D.EX_SYMMETRIZED) == [1, -1, -2, 7, 42, -429, -7436]
    assert principal_minors(ExactMatrix.identity(5)) == [1] * 5


def test_minors_survive_zero_pivots():
    # signed squares with zeros in between, as in the squared-minor example
    assert principal_minors(hankel_matrix([1, 0, 1, 0, 2, 0, 5], 3)) == hankel_transform([1, 0, 1, 0, 2, 0, 5])


def test_robbins_from_thirteen_by_thirteen():
    m = expand_bivariate(BivariateGF(ONE, (ONE - X * Y) * (ONE - X - Y)), 13, 13)
    assert principal_minors(m) == [robbins(n + 1) for n in range(13)]


def test_hankel_matrix_examples():
    assert hankel_matrix([1, 1, 2], 1).to_lists() == [[1, 1], [1, 2]]
    ternary = [comb(3 * n, n) // (2 * n + 1) for n in range(9)]
    assert hankel_matrix(ternary, 2).to_lists() == [[1, 1, 3], [1, 3, 12], [3, 12, 55]]
    assert hankel_matrix([7], 0).to_lists() == [[7]]
    with pytest.raises(InsufficientTerms):
        hankel_matrix([1, 1], 1)


def test_hankel_transform_examples():
    assert hankel_transform([1, 1, 3, 12, 55, 273, 1428, 7752, 43263]) == [1, 2, 11, 170, 7429]
    rev = revert_transform(gf("1,-1 ; 1,-2,-1,1", 11))
    assert hankel_transform(rev, 6) == [1, -2, -7, 42, 429, -7436]
    assert hankel_transform([1] * 9) == [1, 0, 0, 0, 0]
    with pytest.raises(InsufficientTerms):
        hankel_transform([1, 2, 3], 3)


def test_hankel_gf_matrix_examples():
    m = hankel_gf_matrix(gf("1,1,1 ; 1,-3,3,-1", 24), 6)
    assert m.row(0) == [1, -4, 6, -3, -3, 6, -3]
    assert m.row(1) == [-4, 22, -51, 57, -6, -78, 111]
    assert m == D.CENTERED_M
    assert hankel_gf_matrix(Series.constant(1, 4), 0).to_lists() == [[1]]
    with pytest.raises(InsufficientOrder):
        hankel_gf_matrix(gf("1,1", 5), 6)


@pytest.mark.parametrize("text", ["1,1,1 ; 1,-3,3,-1", "1,-1 ; 1,-2,-1,1", "1,0,-1", "1 ; 1,3,3,1"])
def test_hankel_gf_matrix_matches_direct_construction(text):
    g = gf(text, 24)
    assert hankel_gf_matrix(g, 7) == hankel_gf_matrix_direct(g, 7)


@pytest.mark.parametrize("text", ["1,1,1 ; 1,-3,3,-1", "1,-1 ; 1,-2,-1,1", "1,0,-1"])
def test_gessel_xin(text):
    g = gf(text, 24)
    assert principal_minors(hankel_gf_matrix(g, 6)) == hankel_transform(revert_transform(g), 7)


def test_scaled_centered_minors():
    minors = principal_minors(hankel_gf_matrix(gf("1,1,1 ; 1,-3,3,-1", 24), 5))
    assert [Fraction(v, 3 ** comb(n + 1, 2)) for n, v in enumerate(minors)] == [1, 2, 7, 42, 429, 7436]


def test_signed_columns_unsign_minors():
    # multiplying column k by (-1)^k turns the signed Robbins minors into the unsigned ones
    m = D.EX_SYMMETRIZED
    signed = ExactMatrix.from_function(7, 7, lambda i, k: m[i, k] * (-1) ** k)
    assert principal_minors(signed) == [robbins(n) for n in range(7)]


def test_mat_power_examples():
    m = ExactMatrix.from_lists([[1, 1, 1], [1, 1, 0], [1, 0, 0]])
    assert mat_power_entry_seq(m, 0, 0, 8) == [1, 1, 3, 6, 14, 31, 70, 157]
    fib = ExactMatrix.from_lists([[1, 1], [1, 0]])
    assert mat_power_entry_seq(fib, 0, 1, 7) == [0, 1, 1, 2, 3, 5, 8]
    p6 = ExactMatrix.from_function(6, 6, lambda i, j: 1 if abs(i - j) == 1 else 0)
    seq = mat_power_entry_seq(p6, 0, 5, 21)
    assert seq[5:] == [1, 0, 5, 0, 19, 0, 66, 0, 221, 0, 728, 0, 2380, 0, 7753, 0]
    assert seq[:5] == [0] * 5
    with pytest.raises(IndexOutOfRange):
        mat_power_entry_seq(fib, 2, 0, 3)
    with pytest.raises(NotSquare):
        mat_power_entry_seq(ExactMatrix.from_lists([[1, 2]]), 0, 0, 3)


def test_production_matrix_examples():
    assert production_matrix(ExactMatrix.identity(6), 4) == ExactMatrix.from_function(
        4, 4, lambda i, j: 1 if j == i + 1 else 0)
    pascal = ExactMatrix.from_function(8, 8, lambda n, k: comb(n, k))
    assert production_matrix(pascal, 5) == ExactMatrix.from_function(
        5, 5, lambda i, j: 1 if j in (i, i + 1) else 0)
    with pytest.raises(NotLowerTriangularUnitDiagonal):
        production_matrix(ExactMatrix.from_lists([[2, 0], [1, 1]]), 1)


def test_lower_unit_inverse():
    pascal = ExactMatrix.from_function(6, 6, lambda n, k: comb(n, k))
    inv = lower_unit_inverse(pascal)
    assert inv == ExactMatrix.from_function(6, 6, lambda n, k: (-1) ** (n - k) * comb(n, k))
    assert inv @ pascal == ExactMatrix.identity(6)


def test_lagrange_examples():
    assert lagrange_interpolate([0], [Fraction(5)]) == [5]
    poly = lagrange_interpolate([1, 2, 3, 4], [r ** 3 - 3 * r ** 2 + 3 * r - 2 for r in (1, 2, 3, 4)])
    assert poly == [-2, 3, -3, 1]
    p4 = lagrange_interpolate(range(5), [r ** 4 + 6 * r ** 2 + 2 * r + 5 for r in range(5)])
    assert p4 == [5, 2, 6, 0, 1]
    assert poly_eval(p4, 3) == 81 + 54 + 6 + 5
    with pytest.raises(DuplicateNodes):
        lagrange_interpolate([1, 1], [2, 3])


def test_diagonal_sums():
    m = expand_bivariate(BivariateGF(ONE, (ONE - X * Y) * (ONE - X - Y)), 8, 8)
    assert diagonal_sums(m, 7) == [1, 2, 5, 10, 21, 42, 85]
    assert diagonal_sums(m, 7) == gf("1 ; 1,-2,-1,2", 7).tolist()


@st.composite
def square(draw, n=6):
    return ExactMatrix.from_lists(draw(st.lists(st.lists(rationals, min_size=n, max_size=n),
                                                min_size=n, max_size=n)))


@st.composite
def unit_lower(draw, n=6):
    below = draw(st.lists(rationals, min_size=n * n, max_size=n * n))
    return ExactMatrix.from_function(n, n, lambda i, j: 1 if i == j else (below[i * n + j] if j < i else 0))


@given(square(), unit_lower())
@settings(max_examples=30)
def test_triangular_congruence(m, lower):
    assert principal_minors(lower @ m @ lower.transpose()) == principal_minors(m)


@given(st.lists(rationals, min_size=11, max_size=11))
@settings(max_examples=40)
def test_hankel_transform_equals_minors(seq):
    assert hankel_transform(seq) == principal_minors(hankel_matrix(seq, 5))


@given(square(4))
@settings(max_examples=30)
def test_determinant_multiplicative(m):
    assert determinant(m @ m.transpose()) == determinant(m) ** 2

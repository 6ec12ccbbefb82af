from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hankelkit.errors import (
    BadLowOrder,
    ConstantTermNotOne,
    InsufficientOrder,
    NonUnitConstantTerm,
    NonzeroInnerConstant,
    ParseError,
)
from hankelkit.ring import I
from hankelkit.series import (
    DEFAULT_ORDER,
    RationalGF,
    Series,
    alternate,
    binomial_transform,
    catalan_gf,
    compose,
    expand,
    invert_transform,
    log_revert_transform,
    reversion,
    revert_transform,
    revert_transform_lagrange,
    scale,
    series_div,
    series_mul,
    series_pow,
    series_sqrt,
)

from strategies import monic_series, rationals, unit_series


def gf(text, n):
    return RationalGF.parse(text).expand(n)


def test_default_order():
    assert DEFAULT_ORDER == 24


@pytest.mark.parametrize("text, n, terms", [
    ("1,-1 ; 1,-2,-1,1", 8, [1, 1, 3, 6, 14, 31, 70, 157]),
    ("1 ; 1,-1,-1", 6, [1, 1, 2, 3, 5, 8]),
    ("1,1 ; 1,0,-3,-1", 8, [1, 1, 3, 4, 10, 15, 34, 55]),
])
def test_expand(text, n, terms):
    assert expand(RationalGF.parse(text), n).tolist() == terms


def test_expand_satisfies_recurrence():
    g = RationalGF.parse("2,-1,3 ; 1,-3,1/2,5")
    s = g.expand(15)
    assert (s * Series.from_poly(g.denominator, 15)).tolist() == Series.from_poly(g.numerator, 15).tolist()


def test_parse_errors():
    with pytest.raises(ParseError):
        RationalGF.parse("1 ; 0,1")
    with pytest.raises(ParseError):
        RationalGF.parse("1 ; 1 ; 1")
    with pytest.raises(ParseError):
        RationalGF.parse("a ; 1")
    with pytest.raises(NonUnitConstantTerm):
        RationalGF([1], [0, 1])


def test_gf_text_round_trip():
    g = RationalGF.parse("1,-1/2 ; 1,i")
    assert RationalGF.parse(str(g)).expand(6) == g.expand(6)


def test_mul_div():
    a, b = gf("1,1", 6), gf("1,-1", 6)
    assert series_mul(a, b).tolist() == [1, 0, -1, 0, 0, 0]
    assert series_div(Series.constant(1, 5), b).tolist() == [1] * 5
    assert (b * gf("1 ; 1,-1", 6)).tolist() == [1, 0, 0, 0, 0, 0]
    with pytest.raises(NonUnitConstantTerm):
        series_div(a, Series([0, 1, 1]))


def test_mixed_orders_take_minimum():
    assert series_mul(gf("1 ; 1,-1", 4), gf("1 ; 1,-1", 9)).order == 4


def test_compose_examples():
    c = catalan_gf(9)
    neg_x2 = Series.from_poly([0, 0, -1], 9)
    assert compose(c, neg_x2).tolist() == [1, 0, -1, 0, 2, 0, -5, 0, 14]
    g = gf("1,2,3 ; 1,-1", 8)
    assert compose(g, Series.x(8)) == g
    with pytest.raises(NonzeroInnerConstant):
        compose(g, gf("1,1", 8))


def test_compose_complex_scaling():
    g = scale(gf("1,-1 ; 1,-1,-2,1", 7), I)
    assert g.tolist() == [1, 0, -2, -I, 5, 5 * I, -14]
    assert compose(gf("1,-1 ; 1,-1,-2,1", 7), Series.x(7, I)) == g


def test_reversion_examples():
    u = reversion(Series.from_poly([0, 1, -1], 6))
    assert u.tolist() == [0, 1, 1, 2, 5, 14]
    assert reversion(Series.x(5)) == Series.x(5)
    with pytest.raises(BadLowOrder):
        reversion(gf("1,1", 5))
    with pytest.raises(BadLowOrder):
        reversion(Series.from_poly([0, 0, 1], 5))


@pytest.mark.parametrize("text, terms", [
    ("1,0,-1", [1, 0, 1, 0, 3, 0, 12]),
    ("1,-2,1", [1, 2, 7, 30, 143]),
    ("1 ; 1,3,3,1", [1, 3, 12, 55, 273]),
])
def test_revert_transform(text, terms):
    assert revert_transform(gf(text, len(terms))).tolist() == terms


def test_revert_needs_unit():
    with pytest.raises(NonUnitConstantTerm):
        revert_transform(Series([0, 1, 2]))


def test_log_revert_examples():
    assert log_revert_transform(gf("1 ; 1,3,3,1", 5)).tolist() == [1, 3, 15, 84, 495]
    assert log_revert_transform(Series.constant(1, 6)).tolist() == [1, 0, 0, 0, 0, 0]


def test_log_revert_oracle():
    # [x^n](1+3x^2+x^3)^n computed by brute force
    n = 10
    want = [series_pow(Series.from_poly([1, 0, 3, 1], n), k)[k] for k in range(n)]
    assert log_revert_transform(gf("1 ; 1,0,3,1", n)).tolist() == want
    assert want[:4] == [1, 0, 6, 3]


@given(monic_series(order=10))
@settings(max_examples=40)
def test_log_revert_is_hitting_time_form(g):
    u = reversion(g.shift_up(1).truncate(10))
    # x u'/u = u' / (u/x)
    v = series_div(u.derivative(), u.shift_down(1).truncate(9))
    assert log_revert_transform(g).truncate(9) == v


def test_binomial_examples():
    ones = Series.constant(1, 5) + Series([0, 1, 1, 1, 1])
    assert binomial_transform(ones, 1).tolist() == [1, 2, 4, 8, 16]
    centered = Series([1, 4, 10, 19, 31, 46])
    assert binomial_transform(centered, -1).tolist() == [1, 3, 3, 0, 0, 0]
    assert binomial_transform(centered, 0) == centered


def test_invert_examples():
    assert invert_transform(gf("1 ; 1,-1", 4), 1).tolist() == [1, 2, 4, 8]
    g = gf("1,3 ; 1,-1,2", 8)
    assert invert_transform(g, 0) == g


@given(unit_series(order=8), rationals)
@settings(max_examples=30)
def test_invert_inverse(g, r):
    assert invert_transform(invert_transform(g, r), -r) == g


def test_sqrt():
    assert series_sqrt(gf("1,-4", 5)).tolist() == [1, -2, -2, -4, -10]
    assert series_sqrt(Series.constant(1, 3)).tolist() == [1, 0, 0]
    root = series_sqrt(gf("1,2,5", 12))
    f = ((root - gf("1,1", 12)) * Fraction(1, 2)).shift_down(2)
    assert f.tolist() == [1, -1, 0, 2, -3, -1, 11, -15, -13, 77]
    with pytest.raises(ConstantTermNotOne):
        series_sqrt(gf("4,1", 5))


def test_alternate():
    assert alternate(Series([1, 1, 2, 3, 5])).tolist() == [1, -1, 2, -3, 5]
    g = gf("1,1 ; 1,-3,0,1", 12)
    assert alternate(alternate(g)) == g


def test_alternate_of_a052536():
    a052536 = gf("1,-1 ; 1,-3,0,1", 12)
    assert a052536.tolist()[:5] == [1, 2, 6, 17, 49]
    alt = alternate(a052536)
    assert alt == gf("1,0,-1 ; 1,2,-3,-1,1", 12)
    assert alt == gf("1,1 ; 1,3,0,-1", 12)
    assert alt.tolist()[:10] == [1, -2, 6, -17, 49, -141, 406, -1169, 3366, -9692]


def test_order_bookkeeping():
    s = gf("1 ; 1,-1", 6)
    assert s.shift_up(2).shift_down(2) == s
    assert s.shift_up(2).order == 8
    with pytest.raises(ValueError):
        s.shift_down(1)
    assert s.derivative().order == 5
    with pytest.raises(InsufficientOrder):
        s.truncate(7)


def test_catalan():
    assert catalan_gf(8).tolist() == [comb(2 * n, n) // (n + 1) for n in range(8)]


def test_negative_power():
    g = gf("1,1", 6)
    assert series_pow(g, -3) == gf("1 ; 1,3,3,1", 6)


@given(unit_series(order=10))
@settings(max_examples=60)
def test_reversion_composes_to_identity(g):
    f = g.shift_up(1).truncate(10)
    assert compose(f, reversion(f)) == Series.x(10)


@given(unit_series(order=10))
@settings(max_examples=60)
def test_lagrange_agrees(g):
    assert revert_transform(g) == revert_transform_lagrange(g)


@given(monic_series(order=10))
@settings(max_examples=40)
def test_transform_exchange(g):
    # the exchange holds with the inverse transforms on the right: Rev(F(x/(1-x))) = U/(1+U)
    assert revert_transform(binomial_transform(g, 1)) == invert_transform(revert_transform(g), -1)
    assert revert_transform(invert_transform(g, 1)) == binomial_transform(revert_transform(g), -1)


def test_transform_exchange_unsigned_form_fails_for_constant_one():
    g = Series.constant(1, 6)
    assert revert_transform(binomial_transform(g, 1)) != invert_transform(revert_transform(g), 1)


def test_series_over_gaussians():
    g = gf("1 ; 1,-1", 6)
    gi = scale(g, I)
    assert gi.tolist() == [1, I, -1, -I, 1, I]
    assert revert_transform(revert_transform(gi)) == gi

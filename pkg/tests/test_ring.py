from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hankelkit.errors import DivisionByZero, NonUnitConstantTerm, ParseError
from hankelkit.ring import (
    I,
    GaussianRational,
    TruncatedPolynomial,
    format_scalar,
    gauss_invert,
    invert,
    parse_scalar,
    poly_invert,
    rat_invert,
)

from strategies import gaussians, rationals, truncated_polys


@pytest.mark.parametrize("a, inv", [(Fraction(2, 3), Fraction(3, 2)), (-5, Fraction(-1, 5)), (1, 1)])
def test_rat_invert(a, inv):
    assert rat_invert(a) == inv


def test_rat_invert_zero():
    with pytest.raises(DivisionByZero):
        rat_invert(0)


def test_gauss_invert_examples():
    assert gauss_invert(I) == -I
    assert gauss_invert(GaussianRational(1, 1)) == GaussianRational(Fraction(1, 2), Fraction(-1, 2))
    assert gauss_invert(GaussianRational(2)) == Fraction(1, 2)
    with pytest.raises(DivisionByZero):
        gauss_invert(GaussianRational(0, 0))


def test_gauss_multiplication_rule():
    a, b = GaussianRational(1, 2), GaussianRational(3, -4)
    assert a * b == GaussianRational(1 * 3 + 8, -4 + 6)
    assert I * I == -1


def test_poly_invert_examples():
    p = TruncatedPolynomial([1, -1], 4)
    assert poly_invert(p).coefficients == (1, 1, 1, 1)
    assert poly_invert(TruncatedPolynomial([2], 3)) == Fraction(1, 2)
    with pytest.raises(NonUnitConstantTerm):
        poly_invert(TruncatedPolynomial([0, 1, 1], 4))


def test_truncation_discards_high_terms():
    y = TruncatedPolynomial.variable(3)
    assert (y * y * y).coefficients == (0, 0, 0)
    assert len(y) == 3


def test_immutable():
    with pytest.raises(AttributeError):
        I.re = 3
    with pytest.raises(AttributeError):
        TruncatedPolynomial([1], 2).order = 5


def test_invert_dispatch():
    assert invert(Fraction(4)) == Fraction(1, 4)
    assert invert(2 * I) == GaussianRational(0, Fraction(-1, 2))
    with pytest.raises(TypeError):
        invert(0.5)


def test_floats_rejected():
    with pytest.raises(TypeError):
        GaussianRational(0.5, 0)


@pytest.mark.parametrize("text, value", [
    ("-7", Fraction(-7)), ("3/4", Fraction(3, 4)), ("i", I), ("-i", -I), ("2i", 2 * I),
    ("3-i", 3 - I), ("1/2-1/2i", GaussianRational(Fraction(1, 2), Fraction(-1, 2))), ("0+1i", I),
])
def test_parse_scalar(text, value):
    assert parse_scalar(text) == value


@pytest.mark.parametrize("bad", ["", "1.5", "x", "1/0", "2//3", "i+"])
def test_parse_scalar_rejects(bad):
    with pytest.raises(ParseError):
        parse_scalar(bad)


def test_format_forms():
    assert format_scalar(Fraction(6, 4)) == "3/2"
    assert format_scalar(GaussianRational(5, 0)) == "5"
    assert format_scalar(GaussianRational(0, -1)) == "0-1i"
    with pytest.raises(TypeError):
        format_scalar(True)


@given(st.one_of(rationals, gaussians))
def test_format_parse_round_trip(a):
    assert parse_scalar(format_scalar(a)) == a


@given(st.integers(-10**6, 10**6).filter(bool), st.integers(-10**6, 10**6).filter(bool))
def test_canonical_form(p, q):
    r = Fraction(p, q) * Fraction(q, p)
    assert (r.numerator, r.denominator) == (1, 1)
    assert Fraction(p, q).denominator > 0


def _axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    assert a * b == b * a
    assert a - a == 0
    assert a * 1 == a


@given(rationals, rationals, rationals)
def test_rational_axioms(a, b, c):
    _axioms(a, b, c)


@given(gaussians, gaussians, gaussians)
def test_gaussian_axioms(a, b, c):
    _axioms(a, b, c)
    if a != 0:
        assert a * a.inverse() == 1


@given(truncated_polys(), truncated_polys(), truncated_polys())
def test_truncated_polynomial_axioms(a, b, c):
    _axioms(a, b, c)


@given(rationals, rationals)
def test_gaussian_embeds_rationals(p, q):
    gp, gq = GaussianRational(p), GaussianRational(q)
    assert gp + gq == p + q
    assert gp * gq == p * q
    assert gp - gq == p - q
    assert hash(gp) == hash(p)


def _brute_mul(a, b, order):
    out = [Fraction(0)] * (len(a) + len(b))
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return (out + [0] * order)[:order]


@given(st.lists(rationals, min_size=1, max_size=7), st.lists(rationals, min_size=1, max_size=7),
       st.integers(1, 8))
def test_truncated_polynomial_brute_force(a, b, order):
    pa, pb = TruncatedPolynomial(a, order), TruncatedPolynomial(b, order)
    assert list((pa * pb).coefficients) == _brute_mul(a, b, order)
    full = [x + y for x, y in zip(a + [0] * 8, b + [0] * 8)]
    assert list((pa + pb).coefficients) == (full + [0] * order)[:order]
    if a[0] != 0:
        assert pa * pa.inverse() == 1


def test_pickle_round_trip():
    import pickle

    for v in (GaussianRational(1, -2), TruncatedPolynomial([1, I], 3)):
        assert pickle.loads(pickle.dumps(v)) == v

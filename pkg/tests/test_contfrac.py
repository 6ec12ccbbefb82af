from fractions import Fraction as F

import pytest
from hypothesis import assume, given, settings

from hankelkit.contfrac import (
    GammaFraction,
    JFraction,
    extract_gamma,
    extract_jfraction,
    gamma_to_series,
    heilermann_gamma,
    heilermann_j,
    jfraction_to_series,
    pad_betas,
)
from hankelkit.errors import Breakdown, InsufficientOrder
from hankelkit.linalg import hankel_transform
from hankelkit.series import RationalGF, Series, catalan_gf, compose, revert_transform

from strategies import monic_series


def gf(text, n):
    return RationalGF.parse(text).expand(n)


TABLE_GFS = [
    "1,-1 ; 1,-2,-1,1", "1,1,1 ; 1,-3,3,-1", "1,-1 ; 1,-3,0,1", "1,0,-1 ; 1,2,-3,-1,1",
    "1,-2,1", "1,0,-1", "1 ; 1,3,3,1", "1 ; 1,-1,3,-1", "1,1 ; 1,0,-3,-1",
]


def test_a077998_fraction():
    cf = extract_jfraction(gf("1,-1 ; 1,-2,-1,1", 12), 5)
    assert (cf.mu0, cf.alphas, cf.betas, cf.terminated) == (1, (1, F(1, 2), F(1, 2)), (2, F(1, 4)), True)


def test_centered_triangle_fraction():
    cf = extract_jfraction(gf("1,1,1 ; 1,-3,3,-1", 12), 5)
    assert cf.alphas == (4, F(-1, 2), F(-1, 2))
    assert cf.betas == (-6, F(-3, 4))
    assert cf.terminated


def test_geometric_fraction():
    cf = extract_jfraction(gf("1 ; 1,-1", 6), 2)
    assert (cf.alphas, cf.betas, cf.terminated) == ((1,), (), True)


def test_order_requirements():
    with pytest.raises(InsufficientOrder):
        extract_jfraction(gf("1 ; 1,-1", 6), 3)
    with pytest.raises(InsufficientOrder):
        extract_gamma(gf("1 ; 1,-1", 4), 4)


def test_breakdown():
    # 1, 0, 0, 1: the first Hankel minor 1*0 - 0 vanishes but the remainder does not
    with pytest.raises(Breakdown):
        extract_jfraction(Series([1, 0, 0, 1, 0, 0, 0]), 3)


def test_gamma_examples():
    c = catalan_gf(14)
    cf = extract_gamma(c, 10)
    assert cf.gammas == (-1,) * 10
    assert gamma_to_series(cf, 11) == c.truncate(11)
    one_plus = extract_gamma(gf("1 ; 1,1", 6), 3)
    assert (one_plus.gammas, one_plus.terminated) == ((1,), True)
    one_minus = extract_gamma(gf("1 ; 1,-1", 6), 3)
    assert (one_minus.gammas, one_minus.terminated) == ((-1,), True)


def test_reconstruction_simple_cases():
    assert jfraction_to_series(JFraction(1, (), ()), 4).tolist() == [1, 0, 0, 0]
    aerated = jfraction_to_series(JFraction(1, (0,) * 6, (-1,) * 5), 12)
    c = catalan_gf(12)
    assert aerated == compose(c, Series.from_poly([0, 0, -1], 12))


@pytest.mark.parametrize("text", TABLE_GFS)
def test_round_trip_and_heilermann(text):
    for g in (gf(text, 20), revert_transform(gf(text, 20))):
        try:
            cf = extract_jfraction(g, 9)
        except Breakdown:
            continue
        depth = len(cf.alphas)
        assert jfraction_to_series(cf, 20).truncate(2 * depth) == g.truncate(2 * depth)
        betas = pad_betas(cf, 9)
        direct = hankel_transform(g, 10)
        for n in range(min(len(betas), 9) + 1):
            assert heilermann_j(cf.mu0, betas, n) == direct[n]


def test_heilermann_examples():
    betas = [2, F(1, 4), 0]
    assert [heilermann_j(1, betas, n) for n in range(4)] == [1, 2, 1, 0]
    assert hankel_transform([1, 1, 3, 6, 14, 31, 70], 4) == [1, 2, 1, 0]
    assert heilermann_j(F(3), [], 0) == 3
    assert [heilermann_j(1, [1] * 6, n) for n in range(6)] == [1] * 6
    assert [heilermann_gamma(1, [-1] * 12, n) for n in range(6)] == [1] * 6
    assert heilermann_gamma(5, [], 0) == 5
    with pytest.raises(InsufficientOrder):
        heilermann_j(1, [1], 2)


def test_heilermann_gamma_first():
    cf = GammaFraction(1, (-1, -2, 3, F(1, 2)))
    s = gamma_to_series(cf, 6)
    assert heilermann_gamma(1, cf.gammas, 1) == 2
    assert hankel_transform(s, 2)[1] == 2


def _shift_family(s, t, base, n):
    a = base + t
    return jfraction_to_series(JFraction(1, (4 + s, a, a), (-6, F(-3, 4)), True), n)


@pytest.mark.parametrize("base", [F(1, 2), F(-1, 2)])
def test_shift_family_same_hankel(base):
    # alpha0 = 4+s and alpha1 = alpha2 = base+t with the betas fixed
    first = hankel_transform(revert_transform(_shift_family(0, 0, base, 16)), 8)
    for s, t in ((1, -1), (2, 1)):
        assert hankel_transform(revert_transform(_shift_family(s, t, base, 16)), 8) == first


def test_shift_family_base_is_the_centered_triangle():
    assert _shift_family(0, 0, F(-1, 2), 12) == gf("1,1,1 ; 1,-3,3,-1", 12)


@given(monic_series(order=12))
@settings(max_examples=40)
def test_random_round_trip(g):
    h = hankel_transform(g, 6)
    assume(all(v != 0 for v in h[:5]))
    cf = extract_jfraction(g, 5)
    assert jfraction_to_series(cf, 12).truncate(2 * len(cf.alphas)) == g.truncate(2 * len(cf.alphas))
    assert [heilermann_j(1, pad_betas(cf, 5), n) for n in range(len(cf.betas) + 1)] == h[:len(cf.betas) + 1]


def test_str_forms():
    assert str(extract_jfraction(gf("1,-1 ; 1,-2,-1,1", 12), 5)) == "1 | 1,1/2,1/2 | 2,1/4"
    assert str(GammaFraction(1, (-1, 2))) == "1 | -1,2"

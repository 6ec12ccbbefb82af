"""Helpers shared by the experiment modules."""

from __future__ import annotations

from fractions import Fraction
from math import comb

from ..errors import InsufficientTerms
from ..linalg import (
    BiPoly,
    BivariateGF,
    ExactMatrix,
    expand_bivariate,
    hankel_gf_matrix,
    lagrange_interpolate,
)
from ..riordan import RiordanSpec, riordan_matrix
from ..series import RationalGF, Series, series_div
from .fixtures import fixture_terms, robbins

X, Y = BiPoly.X, BiPoly.Y
ONE = BiPoly.const(1)


def gf(text: str, order: int) -> Series:
    return RationalGF.parse(text).expand(order)


def spec(g: str, f: str, order: int) -> RiordanSpec:
    return RiordanSpec(gf(g, order), gf(f, order))


def triangle(s: RiordanSpec, size: int) -> ExactMatrix:
    return riordan_matrix(s, size - 1).matrix


def grid(num, den, size: int) -> ExactMatrix:
    return expand_bivariate(BivariateGF(num, den), size, size)


def sandwich(g: Series, size: int) -> ExactMatrix:
    """``L K L^T`` with ``L = (g/(1-x), x)`` and ``K`` the kernel matrix of ``g``.

    Its bivariate gf is ``g(x)/(1-x) * (x-y)/(x g(x) - y g(y)) * g(y)/(1-y)``.
    """
    order = g.order
    lower = triangle(RiordanSpec(series_div(g, gf("1,-1", order)), Series.x(order)), size)
    return lower @ hankel_gf_matrix(g, size - 1) @ lower.transpose()


def sign_c2(values) -> list:
    """Multiply term ``n`` by ``(-1)^C(n+1,2)``."""
    return [v if comb(n + 1, 2) % 2 == 0 else -v for n, v in enumerate(values)]


def robbins_seq(start: int, count: int) -> list:
    return [robbins(start + n) for n in range(count)]


def fixture_slice(seq_id: str, start: int, count: int) -> list:
    terms = fixture_terms(seq_id)
    if len(terms) < start + count:
        raise InsufficientTerms(
            f"{seq_id} fixture has {len(terms)} terms, {start + count} needed")
    return terms[start:start + count]


def scaled(values, base) -> list:
    """``base^n * values[n]``."""
    return [v * Fraction(base) ** n for n, v in enumerate(values)]


def param_array(make, size: int, nodes=None) -> ExactMatrix:
    """Coefficient array of polynomial sequences known only through evaluations.

    ``make(t)`` returns the first ``size`` terms at ``t``; row ``n`` of the
    result holds the ascending coefficients of the ``n``-th polynomial.
    """
    nodes = list(nodes) if nodes is not None else list(range(size))
    values = [list(make(t))[:size] for t in nodes]
    polys = [lagrange_interpolate(nodes, [v[n] for v in values]) for n in range(size)]
    width = max(size, max(len(p) for p in polys))
    return ExactMatrix.from_function(
        size, width, lambda n, k: polys[n][k] if k < len(polys[n]) else 0)


"""Exact Hankel transforms, series reversion and Riordan arrays."""

from .ring import GaussianRational, I, Rational, TruncatedPolynomial, format_scalar, parse_scalar
from .series import RationalGF, Series, expand

__version__ = "0.1.0"

__all__ = [
    "GaussianRational",
    "I",
    "Rational",
    "TruncatedPolynomial",
    "format_scalar",
    "parse_scalar",
    "RationalGF",
    "Series",
    "expand",
]

"""Jacobi and Stieltjes-type continued fractions of a power series.

Conventions (one sign rule throughout)::

    J-form:  g = mu0 / (1 - a0 x - b1 x^2 / (1 - a1 x - b2 x^2 / (...)))
    gamma:   g = mu0 / (1 + c1 x / (1 + c2 x / (1 + ...)))

A fraction whose remainder vanishes to the full available order is marked
``terminated``; in that case there is one fewer beta than alpha.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import Breakdown, InsufficientOrder
from .ring import format_scalar, one_like
from .series import Series, series_div


@dataclass(frozen=True)
class JFraction:
    mu0: object
    alphas: tuple = ()
    betas: tuple = ()
    terminated: bool = False

    def __post_init__(self):
        object.__setattr__(self, "alphas", tuple(self.alphas))
        object.__setattr__(self, "betas", tuple(self.betas))

    def __str__(self):
        return " | ".join([
            format_scalar(self.mu0),
            ",".join(format_scalar(a) for a in self.alphas),
            ",".join(format_scalar(b) for b in self.betas),
        ])


@dataclass(frozen=True)
class GammaFraction:
    mu0: object
    gammas: tuple = ()
    terminated: bool = False

    def __post_init__(self):
        object.__setattr__(self, "gammas", tuple(self.gammas))

    def __str__(self):
        return f"{format_scalar(self.mu0)} | " + ",".join(format_scalar(c) for c in self.gammas)


def extract_jfraction(g: Series, depth: int) -> JFraction:
    """Read off up to ``depth`` levels of the J-fraction of ``g``.

    Each level consumes two orders, so ``g`` must carry ``2*depth + 1``
    coefficients.  Extraction stops early if the fraction terminates.
    """
    if g.order < 2 * depth + 1:
        raise InsufficientOrder(f"depth {depth} needs order {2 * depth + 1}, series has {g.order}")
    mu0 = g[0]
    u = g / mu0  # u(0) = 1
    alphas, betas = [], []
    for level in range(depth):
        v = series_div(Series.constant(one_like(mu0), u.order), u)
        if v.order < 2:
            break
        alphas.append(-v[1])
        if v.order < 3:
            break
        rest = Series(-a for a in v.coefficients[2:])
        if rest.is_zero():
            return JFraction(mu0, alphas, betas, True)
        beta = rest[0]
        if beta == 0:
            raise Breakdown(f"zero pivot at level {level + 1} with nonzero remainder")
        betas.append(beta)
        u = rest / beta
    return JFraction(mu0, alphas, betas, False)


def extract_gamma(g: Series, depth: int) -> GammaFraction:
    """Read off up to ``depth`` gammas; one order is consumed per level."""
    if g.order < depth + 1:
        raise InsufficientOrder(f"depth {depth} needs order {depth + 1}, series has {g.order}")
    mu0 = g[0]
    u = g / mu0
    gammas = []
    for level in range(depth):
        v = series_div(Series.constant(one_like(mu0), u.order), u)
        if v.order < 2:
            break
        rest = Series(v.coefficients[1:])  # (v - 1) / x
        if rest.is_zero():
            return GammaFraction(mu0, gammas, True)
        gamma = rest[0]
        if gamma == 0:
            raise Breakdown(f"zero pivot at level {level + 1} with nonzero remainder")
        gammas.append(gamma)
        u = rest / gamma
        if u.order == 1 or (u - 1).is_zero():
            return GammaFraction(mu0, gammas, u.order > 1)
    return GammaFraction(mu0, gammas, False)


def jfraction_to_series(cf: JFraction, n: int) -> Series:
    """Evaluate the finite fraction bottom-up to ``n`` terms.

    An unterminated fraction is closed with tail 1; the result is then exact
    through ``2 * len(alphas)`` coefficients.
    """
    one = one_like(cf.mu0)
    tail = Series.constant(one, n)
    for level in range(len(cf.alphas) - 1, -1, -1):
        denom = Series.constant(one, n) - Series.x(n, cf.alphas[level])
        if level < len(cf.betas):
            b = cf.betas[level]
            denom = denom - (tail * b).shift_up(2).truncate(n)
        tail = series_div(Series.constant(one, n), denom)
    return tail * cf.mu0


def gamma_to_series(cf: GammaFraction, n: int) -> Series:
    one = one_like(cf.mu0)
    tail = Series.constant(one, n)
    for c in reversed(cf.gammas):
        tail = series_div(Series.constant(one, n), 1 + (tail * c).shift_up(1).truncate(n))
    return tail * cf.mu0


def heilermann_j(mu0, betas, n: int):
    """``mu0^(n+1) * prod_k beta_k^(n+1-k)``."""
    if len(betas) < n:
        raise InsufficientOrder(f"h_{n} needs {n} betas, got {len(betas)}")
    h = mu0 ** (n + 1)
    for k in range(1, n + 1):
        h = h * betas[k - 1] ** (n + 1 - k)
    return h


def heilermann_gamma(mu0, gammas, n: int):
    """``mu0^(n+1) * prod_k (gamma_{2k-1} gamma_{2k})^(n+1-k)``."""
    if len(gammas) < 2 * n:
        raise InsufficientOrder(f"h_{n} needs {2 * n} gammas, got {len(gammas)}")
    h = mu0 ** (n + 1)
    for k in range(1, n + 1):
        h = h * (gammas[2 * k - 2] * gammas[2 * k - 1]) ** (n + 1 - k)
    return h


def pad_betas(cf: JFraction, n: int) -> list:
    """Betas of ``cf`` extended by zeros when the fraction terminated."""
    betas = list(cf.betas)
    if cf.terminated:
        zero = cf.mu0 * 0
        betas += [zero] * max(0, n - len(betas))
    return betas

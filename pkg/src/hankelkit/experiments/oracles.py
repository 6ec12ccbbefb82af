"""Closed forms for bundled sequences, used to cross-check the fixture file."""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial, prod

from .fixtures import robbins


def vsasm(n: int) -> int:
    """Vertically symmetric ASMs of size 2n+1 (A005156)."""
    q = prod((Fraction((3 * k + 2) * factorial(6 * k + 3) * factorial(2 * k + 1),
                       factorial(4 * k + 2) * factorial(4 * k + 3)) for k in range(n)), start=Fraction(1))
    return int(q)


def tspp(n: int) -> int:
    """Totally symmetric plane partitions in an n-cube (A005157)."""
    q = prod((Fraction(i + j + k - 1, i + j + k - 2)
              for i in range(1, n + 1) for j in range(i, n + 1) for k in range(j, n + 1)), start=Fraction(1))
    return int(q)


def cstcpp(n: int) -> int:
    """Cyclically symmetric transpose complement plane partitions (A051255)."""
    q = prod((Fraction((3 * i + 1) * factorial(6 * i) * factorial(2 * i),
                       factorial(4 * i) * factorial(4 * i + 1)) for i in range(n)), start=Fraction(1))
    return int(q)


def two_factorial(n: int) -> int:
    """``prod_{i=1}^n (2^i - 1)`` (A005329)."""
    return prod((2 ** i - 1 for i in range(1, n + 1)), start=1)


def _fibonacci(n: int) -> int:
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


ORACLES = {
    "A000012": lambda n: 1,
    "A000045": _fibonacci,
    "A000108": lambda n: comb(2 * n, n) // (n + 1),
    "A000217": lambda n: n * (n + 1) // 2,
    "A001045": lambda n: (2 ** n - (-1) ** n) // 3,
    "A001764": lambda n: comb(3 * n, n) // (2 * n + 1),
    "A005130": robbins,
    "A005156": vsasm,
    "A005157": tspp,
    "A005329": two_factorial,
    "A005809": lambda n: comb(3 * n, n),
    "A006013": lambda n: comb(3 * n + 1, n) // (n + 1),
    "A051255": cstcpp,
}

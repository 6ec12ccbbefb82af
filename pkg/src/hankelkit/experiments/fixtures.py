"""Bundled integer-sequence fixtures and the Robbins closed form."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from math import factorial

from ..errors import ParseError, UnknownSequence
from ..ring import parse_scalar

BUNDLED = "bundled"
FETCHED = "fetched"
_ID = re.compile(r"^A\d{6}$")


@dataclass(frozen=True)
class SequenceFixture:
    id: str
    terms: tuple
    source: str = BUNDLED

    def __len__(self):
        return len(self.terms)


def check_id(seq_id: str) -> str:
    if not isinstance(seq_id, str) or not _ID.match(seq_id):
        raise ParseError(f"sequence ids look like A005130, got {seq_id!r}")
    return seq_id


def parse_fixture_text(text: str) -> dict:
    """Parse ``A005130: 1,1,2,7`` lines; ``#`` starts a comment."""
    out = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise ParseError(f"line {lineno}: expected 'Annnnnn: terms'")
        key, body = (s.strip() for s in line.split(":", 1))
        check_id(key)
        terms = tuple(parse_scalar(t) for t in body.split(",") if t.strip())
        out[key] = SequenceFixture(key, terms, BUNDLED)
    return out


@lru_cache(maxsize=1)
def bundled_fixtures() -> dict:
    text = resources.files(__package__).joinpath("data", "oeis_fixtures.txt").read_text()
    fixtures = parse_fixture_text(text)
    short = [k for k, f in fixtures.items() if len(f) < 8]
    if short:
        raise ValueError(f"bundled fixtures need at least 8 terms: {short}")
    return fixtures


def fixture_lookup(seq_id: str, *, online: bool = False, cache_dir=None) -> SequenceFixture:
    """Bundled fixture for ``seq_id``; fall back to a b-file fetch only when ``online``."""
    check_id(seq_id)
    found = bundled_fixtures().get(seq_id)
    if found is not None:
        return found
    if not online:
        raise UnknownSequence(f"{seq_id} is not bundled (network lookup disabled)")
    from .oeis import fetch_bfile

    terms = fetch_bfile(seq_id, cache_dir=cache_dir, online=True)
    return SequenceFixture(seq_id, tuple(terms), FETCHED)


def fixture_terms(seq_id: str) -> list:
    return list(bundled_fixtures()[seq_id].terms)


def robbins(n: int) -> int:
    """``A_n = prod_{k<n} (3k+1)! / (n+k)!``, the number of n x n alternating sign matrices."""
    if n < 0:
        raise ValueError("n must be non-negative")
    value = Fraction(1)
    for k in range(n):
        value *= Fraction(factorial(3 * k + 1), factorial(n + k))
    assert value.denominator == 1
    return value.numerator

"""Experiment reports and the check collector used to build them."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from ..linalg import ExactMatrix
from ..ring import format_scalar

PASS = "PASS"
FAIL = "FAIL"
CONJECTURE_HOLDS_TO_DEPTH = "CONJECTURE_HOLDS_TO_DEPTH"
ERROR = "ERROR"
STATUSES = (PASS, FAIL, CONJECTURE_HOLDS_TO_DEPTH, ERROR)


@dataclass(frozen=True)
class Mismatch:
    check: str
    index: object
    computed: object
    expected: object

    def as_dict(self):
        return {
            "check": self.check,
            "index": list(self.index) if isinstance(self.index, tuple) else self.index,
            "computed": _text(self.computed),
            "expected": _text(self.expected),
        }


def _text(value):
    """Ring-scalar text form, applied recursively to lists and matrices."""
    if value is None:
        return None
    if isinstance(value, ExactMatrix):
        return [[format_scalar(a) for a in row] for row in value.to_lists()]
    if isinstance(value, (list, tuple)):
        return [_text(v) for v in value]
    if isinstance(value, str):
        return value
    return format_scalar(value)


@dataclass
class ExperimentReport:
    name: str
    status: str
    depth: int
    computed: dict = field(default_factory=dict)
    expected: dict = field(default_factory=dict)
    mismatches: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    conjecture: bool = False
    headline: str = ""

    @property
    def headline_values(self):
        """The computed values of the check the experiment is named for."""
        return self.computed.get(self.headline)

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "status": self.status,
            "depth": self.depth,
            "conjecture": self.conjecture,
            "headline": self.headline,
            "computed": {k: _text(v) for k, v in self.computed.items()},
            "expected": {k: _text(v) for k, v in self.expected.items()},
            "mismatches": [m.as_dict() for m in self.mismatches],
            "notes": list(self.notes),
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True)

    def summary(self) -> str:
        extra = f", {len(self.mismatches)} mismatch(es)" if self.mismatches else ""
        return f"{self.name}: {self.status} (depth {self.depth}{extra})"


class Checks:
    """Accumulates labelled comparisons for one experiment run."""

    def __init__(self):
        self.computed: dict = {}
        self.expected: dict = {}
        self.mismatches: list = []
        self.notes: list = []

    def seq(self, label: str, computed, expected) -> bool:
        """Compare two sequences over the length of the shorter one."""
        computed, expected = list(computed), list(expected)
        n = min(len(computed), len(expected))
        self.computed[label] = computed[:n] if n else computed
        self.expected[label] = expected[:n]
        ok = True
        for i in range(n):
            if computed[i] != expected[i]:
                self.mismatches.append(Mismatch(label, i, computed[i], expected[i]))
                ok = False
        if n == 0:
            self.mismatches.append(Mismatch(label, None, "no terms", "at least one term"))
            ok = False
        return ok

    def matrix(self, label: str, computed: ExactMatrix, expected: ExactMatrix) -> bool:
        self.computed[label] = computed
        self.expected[label] = expected
        if computed.shape != expected.shape:
            self.mismatches.append(Mismatch(label, "shape", str(computed.shape), str(expected.shape)))
            return False
        ok = True
        for i in range(expected.nrows):
            for j in range(expected.ncols):
                if computed[i, j] != expected[i, j]:
                    self.mismatches.append(Mismatch(label, (i, j), computed[i, j], expected[i, j]))
                    ok = False
        return ok

    def value(self, label: str, computed, expected) -> bool:
        self.computed[label] = [computed]
        self.expected[label] = [expected]
        if computed != expected:
            self.mismatches.append(Mismatch(label, 0, computed, expected))
            return False
        return True

    def flag(self, label: str, condition: bool, detail: str = "") -> bool:
        """Boolean check recorded as ``true``/``false`` text."""
        self.computed[label] = ["true" if condition else "false"]
        self.expected[label] = ["true"]
        if not condition:
            self.mismatches.append(Mismatch(label, 0, detail or "false", "true"))
        return condition

    def misprint(self, label: str, computed, printed, reason: str) -> None:
        """Record a printed value that the computation contradicts.

        The printed value is kept for the reader but does not count as a
        mismatch; ``reason`` says what the printed value should have been.
        """
        self.computed[label] = computed
        self.expected[label + " (as printed)"] = printed
        if isinstance(computed, ExactMatrix):
            diff = [(i, j) for i in range(min(computed.nrows, printed.nrows))
                    for j in range(min(computed.ncols, printed.ncols)) if computed[i, j] != printed[i, j]]
        else:
            diff = [i for i, (a, b) in enumerate(zip(computed, printed)) if a != b]
        where = f" (differs at {diff[:6]}{'...' if len(diff) > 6 else ''})" if diff else ""
        self.notes.append(f"{label}: printed value not reproduced{where}; {reason}")

    def record(self, label: str, computed) -> None:
        """Store a computed value with nothing to compare against."""
        self.computed[label] = computed

    def note(self, text: str) -> None:
        self.notes.append(text)

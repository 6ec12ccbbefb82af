"""Named experiments and the runner that turns a check collector into a report."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable

from ..errors import HankelKitError, InsufficientOrder, UnknownExperiment
from ..series import DEFAULT_ORDER
from . import conjectures, constructions, families, tables
from .report import CONJECTURE_HOLDS_TO_DEPTH, ERROR, FAIL, PASS, Checks, ExperimentReport


@dataclass(frozen=True)
class Experiment:
    name: str
    run: Callable
    default_depth: int
    conjecture: bool = False
    headline: str = ""
    # several checks reproduce displays of fixed length, so no experiment runs below this order
    min_order: int = DEFAULT_ORDER

    def need(self, depth: int) -> int:
        """Series order required at ``depth``: a Hankel determinant of size d+1 reads 2d+1 terms."""
        return max(2 * depth + 2, self.min_order)


_ENTRIES = [
    Experiment("sec1-minor-robbins", constructions.minor_robbins, 6, headline="minors"),
    Experiment("sec1-two-factorial", constructions.two_factorial, 8, conjecture=True,
               headline="minors"),
    Experiment("sec1-robbins-An", constructions.robbins_an, 10, headline="minors"),
    Experiment("sec1-example-ex", constructions.example_ex, 9, headline="minors"),
    Experiment("sec2-lawrence", constructions.lawrence, 7, headline="Hankel of the revert transform"),
    Experiment("sec2-shift-family", constructions.shift_family, 7,
               headline="Hankel of the revert transform of A052536"),
    Experiment("sec3-centered-polygon", constructions.centered_polygon, 5, headline="table row r=3"),
    Experiment("sec4-heptagon", constructions.heptagon, 8, headline="Hankel of the revert transform"),
    Experiment("sec4-nonagon", constructions.nonagon, 8, headline="Hankel of the revert transform"),
    Experiment("sec5-special-matrix", constructions.special_matrix, 6, headline="coefficient array of P_n(r)"),
    Experiment("sec5-qn-hankel", conjectures.qn_hankel, 7, conjecture=True,
               headline="sqrt |Hankel of Q_n(0)|"),
    Experiment("sec6-table", tables.sec6_table, 5, headline="A077998: Hankel"),
    Experiment("sec7-table", tables.sec7_table, 5, headline="1-x^2: Hankel"),
    Experiment("sec8-table", tables.sec8_table, 5, headline="(-1)^n A130713: Hankel"),
    Experiment("sec9-table", tables.sec9_table, 5, headline="A115140: Hankel"),
    Experiment("sec6-log-revert-conjecture", conjectures.log_revert_conjecture, 7, conjecture=True,
               headline="Hankel of the log revert of A052547"),
    Experiment("sec6-ic-rs-table", tables.sec6_ic_rs, 5, headline="A052547: Hankel of the initial column"),
    Experiment("sec7-embedded-triangle", families.embedded_triangle, 6, headline="production matrix"),
    Experiment("sec8-param-triangle", families.param_triangle_8, 7,
               headline="coefficient array of the revert transforms"),
    Experiment("sec9-param-triangle", families.param_triangle_9, 6,
               headline="coefficient array of the log revert transforms"),
    Experiment("sec10-robbins-conjecture", conjectures.robbins_conjecture, 9, conjecture=True,
               headline="Hankel of the revert transform of A~(ix)"),
    Experiment("sec11-amalgamation", conjectures.amalgamation, 9, conjecture=True,
               headline="minors of the amalgamation"),
]

REGISTRY: dict[str, Experiment] = {e.name: e for e in _ENTRIES}


def experiment_names() -> list[str]:
    return list(REGISTRY)


def get_experiment(name: str) -> Experiment:
    try:
        return REGISTRY[name]
    except KeyError:
        raise UnknownExperiment(f"no experiment named {name!r}") from None


def run_experiment(name: str, depth: int | None = None, order: int = DEFAULT_ORDER) -> ExperimentReport:
    exp = get_experiment(name)
    depth = exp.default_depth if depth is None else depth
    if depth < 0:
        raise ValueError("depth must be non-negative")
    if exp.need(depth) > order:
        raise InsufficientOrder(f"{name} at depth {depth} needs series order {exp.need(depth)}, have {order}")
    ck = Checks()
    try:
        exp.run(ck, depth, order)
    except (HankelKitError, ArithmeticError, ValueError, IndexError) as exc:
        ck.note(f"aborted: {type(exc).__name__}: {exc}")
        status = ERROR
    else:
        if ck.mismatches:
            status = FAIL
        else:
            status = CONJECTURE_HOLDS_TO_DEPTH if exp.conjecture else PASS
    report = ExperimentReport(
        name=name, status=status, depth=depth, computed=ck.computed, expected=ck.expected,
        mismatches=ck.mismatches, notes=ck.notes, conjecture=exp.conjecture, headline=exp.headline)
    return report


def _run_one(args):
    name, depth, order = args
    return run_experiment(name, depth, order)


def run_all(names=None, depth: int | None = None, order: int = DEFAULT_ORDER, jobs: int = 1) -> list:
    """Reports in registry order; ``jobs > 1`` spreads the work over processes."""
    names = experiment_names() if names is None else list(names)
    for n in names:
        get_experiment(n)
    work = [(n, depth, order) for n in names]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_run_one, work))
    return [_run_one(w) for w in work]

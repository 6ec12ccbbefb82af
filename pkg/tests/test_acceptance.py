"""Acceptance criteria, one test per criterion.

Each test records a ``criterion N: PASS|FAIL ...`` line; the lines are printed
in the terminal summary (see conftest.py) and when the module is run directly.
Comparisons are exact: every value is a Fraction, a Gaussian rational or an int.
"""

from __future__ import annotations

import json
import os
import random
import subprocess
import sys
import time
from fractions import Fraction
from math import comb, prod

import pytest

from hankelkit.contfrac import extract_jfraction, heilermann_j, jfraction_to_series, pad_betas
from hankelkit.experiments import CONJECTURE_HOLDS_TO_DEPTH, PASS, experiment_names, robbins, run_experiment
from hankelkit.experiments import data as D
from hankelkit.experiments.fixtures import fixture_terms
from hankelkit.experiments.tables import _sec9_rows
from hankelkit.linalg import (
    ExactMatrix,
    hankel_gf_matrix,
    hankel_transform,
    lagrange_interpolate,
    poly_eval,
    principal_minors,
    production_matrix,
)
from hankelkit.riordan import RiordanSpec, riordan_inverse, riordan_matrix, symmetrize, vertical_half
from hankelkit.ring import format_scalar, parse_scalar
from hankelkit.series import RationalGF, Series, revert_transform

RESULTS: dict[int, str] = {}


def record(number: int, ok: bool, detail: str = "") -> None:
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'}" + (f"  {detail}" if detail else "")
    RESULTS[number] = line
    print(line)
    assert ok, line


def expand(text: str, order: int = 24) -> Series:
    return RationalGF.parse(text).expand(order)


def show(values) -> str:
    return "[" + ", ".join(format_scalar(v) for v in values) + "]"


def seq(text: str) -> list:
    return [parse_scalar(t) for t in text.split(",")]


# -- 1 ----------------------------------------------------------------------------------------

def test_criterion_1_robbins_numbers():
    start = time.perf_counter()
    values = [robbins(n) for n in range(13)]
    elapsed = time.perf_counter() - start
    fixture = fixture_terms("A005130")[:13]
    ok = values == fixture and values[:10] == [1, 1, 2, 7, 42, 429, 7436, 218348, 10850216, 911835460]
    record(1, ok and elapsed < 0.1, f"{elapsed * 1000:.1f} ms")


# -- 2 ----------------------------------------------------------------------------------------

def test_criterion_2_binomial_minus_shift_minors():
    start = time.perf_counter()
    m = ExactMatrix.from_function(13, 13, lambda n, k: comb(n + k, k) - (1 if k == n + 1 else 0))
    minors = principal_minors(m)
    elapsed = time.perf_counter() - start
    ok = minors == [robbins(n + 1) for n in range(13)]
    record(2, ok and elapsed < 1, f"{elapsed * 1000:.1f} ms")


# -- 3 ----------------------------------------------------------------------------------------

def _table_rows():
    """(label, series, stated Hankel column through n=5) for every printed table row."""
    rows = []
    for label, text, _, _ in D.SEC6_ROWS:
        rows.append((f"A: {label}", expand(text), D.HANKEL_M2))
    for label, text, _, _, shown in D.SEC7_ROWS:
        rows.append((f"B: {label}", expand(text), shown))
    for label, text, _, _ in D.SEC8_ROWS:
        rows.append((f"C: {label}", expand(text), D.HANKEL_3_26))
    # the ternary table lists sequences; their generators are built in the experiment module.
    # 7249 is the printed slip for 7429, so the fixture term is used.
    base = fixture_terms("A051255")[1:7]
    for index, ((label, _, _, printed_h), g) in enumerate(zip(D.SEC9_PRINTED, _sec9_rows(24))):
        if index == 8:
            stated = fixture_terms("A051255")[2:8]
        else:
            scale = 2 if printed_h.startswith("2^n") else 3 if printed_h.startswith("3^n") else 1
            stated = [Fraction(scale) ** n * v for n, v in enumerate(base)]
        rows.append((f"D: {label or 'row 9'}", g, stated))
    return rows


def test_criterion_3_table_hankel_columns():
    assert D.HANKEL_M2 == seq("1,-2,-7,42,429,-7436")
    start = time.perf_counter()
    rows = _table_rows()
    bad = []
    for label, g, stated in rows:
        got = hankel_transform(revert_transform(g), 6)
        if got[:len(stated)] != list(stated)[:6]:
            bad.append(f"{label} gives {','.join(str(v) for v in got)}")
    elapsed = time.perf_counter() - start
    examples = (
        hankel_transform(revert_transform(expand("1,-1 ; 1,-2,-1,1")), 6) == seq("1,-2,-7,42,429,-7436")
        and hankel_transform(revert_transform(expand("1,-2,1")), 5) == seq("1,3,26,646,45885")
        and hankel_transform(revert_transform(expand("1,0,-1")), 6) == seq("1,1,2,6,33,286"))
    ok = not bad and examples and elapsed < 5
    record(3, ok, f"{len(rows)} rows, {elapsed:.2f} s" + ("; mismatched: " + "; ".join(bad) if bad else ""))


# -- 4 ----------------------------------------------------------------------------------------

def _centered(r: int, order: int) -> Series:
    return RationalGF([1, r - 2, 1], [1, -3, 3, -1]).expand(order)


def _scaled_hankel(n: int, r: int) -> Fraction:
    low = comb(n + 1, 2)
    if r:
        return hankel_transform(revert_transform(_centered(r, 2 * n + 2)), n + 1)[n] / Fraction(r) ** low
    # the quotient has degree C(n+1,2); interpolate it on nonzero r and evaluate at 0
    nodes = list(range(1, low + 2))
    values = [_scaled_hankel(n, t) for t in nodes]
    return poly_eval(lagrange_interpolate(nodes, values), 0)


def test_criterion_4_centered_table():
    table = {r: [_scaled_hankel(n, r) for n in range(6)] for r in range(5)}
    ok = all(table[r] == D.CENTERED_TABLE[r] for r in range(5))
    ok = ok and table[3] == seq("1,2,7,42,429,7436") and table[4] == seq("1,3,26,646,45885,9304650")
    bad = [f"r={r}" for r in range(5) if table[r] != D.CENTERED_TABLE[r]]
    record(4, ok, "rows r=0..4" + (f"; mismatched {bad}" if bad else ""))


# -- 5 ----------------------------------------------------------------------------------------

def test_criterion_5_displayed_jfractions():
    bad = []
    for key, text in (("centered-triangle", "1,1,1 ; 1,-3,3,-1"), ("A077998", "1,-1 ; 1,-2,-1,1")):
        g = expand(text, 12)
        _, (mu0, alphas, betas) = D.JFRACTIONS[key]
        alphas, betas = [parse_scalar(a) for a in alphas], [parse_scalar(b) for b in betas]
        cf = extract_jfraction(g, len(alphas))
        got = (cf.mu0, list(cf.alphas[:len(alphas)]), list(cf.betas[:len(betas)]))
        if got != (mu0, alphas, betas):
            bad.append(f"{key}: displayed alphas {show(alphas)} betas {show(betas)}, extracted {show(got[1])} {show(got[2])}")
        deep = extract_jfraction(g, 5)
        if not jfraction_to_series(deep, 12).agrees_with(g, 12):
            bad.append(f"{key}: round trip")
        betas_all = pad_betas(deep, 5)
        direct = hankel_transform(g, 6)
        if [heilermann_j(deep.mu0, betas_all, n) for n in range(6)] != direct:
            bad.append(f"{key}: Heilermann")
    record(5, not bad, "; ".join(bad))


# -- 6 ----------------------------------------------------------------------------------------

def test_criterion_6_gessel_xin():
    bad = []
    for text in ("1,1,1 ; 1,-3,3,-1", "1,0,-1", "1 ; 1,3,3,1"):
        G = expand(text, 24)
        via_matrix = principal_minors(hankel_gf_matrix(G, 6))
        via_revert = hankel_transform(revert_transform(G), 7)
        if via_matrix != via_revert:
            bad.append(text)
    record(6, not bad, "n = 0..6" + (f"; mismatched {bad}" if bad else ""))


# -- 7 ----------------------------------------------------------------------------------------

def test_criterion_7_riordan_suite():
    parts = {}
    a = RiordanSpec(expand("1,-1,1 ; 1,-1", 10), expand("0,1 ; 1,-1", 10))
    want = RiordanSpec(expand("1,1 ; 1,1,1", 10), expand("0,1 ; 1,1", 10))
    parts["inverse"] = riordan_inverse(a).agrees_with(want, 10)

    pascal = RiordanSpec(expand("1 ; 1,-1", 16), expand("0,1 ; 1,-1", 16))
    half = riordan_matrix(vertical_half(pascal), 6)
    parts["vertical half"] = half == ExactMatrix.from_function(
        7, 7, lambda n, k: comb(2 * n - k, n) if k <= n else 0)

    sym = symmetrize(riordan_matrix(pascal, 6))
    parts["symmetrize(Pascal) = C(n+k,k)"] = sym == ExactMatrix.from_function(7, 7, lambda n, k: comb(n + k, k))

    e = _embedded()
    parts["production matrix"] = e.leading(8) == D.SEC7_EMBEDDED and production_matrix(e, 8) == D.SEC7_PRODUCTION
    failed = [k for k, v in parts.items() if not v]
    detail = f"failed: {failed}" if failed else ""
    if "symmetrize(Pascal) = C(n+k,k)" in failed:
        detail += f"; symmetrize gives row 1 = {show(sym.row(1))}"
    record(7, not failed, detail)


def _embedded() -> ExactMatrix:
    """The interleaved triangle whose production matrix is displayed, with enough rows for 8x8."""
    a = riordan_matrix(riordan_inverse(RiordanSpec(expand("1,-1 ; 1,1"), expand("0,1 ; 1,1,1"))), 12)
    b = riordan_matrix(riordan_inverse(RiordanSpec(expand("1,-2,1 ; 1,0,0,-1"), expand("0,1 ; 1,1,1"))), 12)

    def entry(n, k):
        j, odd = divmod(k, 2)
        if k > n:
            return 0
        return b[n - j - 1, j] if odd else a[n - j, j]

    return ExactMatrix.from_function(12, 12, entry)


# -- 8 ----------------------------------------------------------------------------------------

def test_criterion_8_conjecture_probes():
    start = time.perf_counter()
    parts = {}
    r10 = run_experiment("sec10-robbins-conjecture", 9)
    parts["robbins conjecture"] = (
        r10.status == CONJECTURE_HOLDS_TO_DEPTH
        and r10.headline_values == fixture_terms("A005130")[:10]
        and r10.headline_values == seq("1,1,2,7,42,429,7436,218348,10850216,911835460"))
    r11 = run_experiment("sec11-amalgamation", 9)
    parts["amalgamation"] = r11.status == CONJECTURE_HOLDS_TO_DEPTH

    r1 = run_experiment("sec1-two-factorial", 8)
    literal = [prod(2 ** (i - 1) for i in range(1, n + 1)) for n in range(9)]
    parts["two-factorial against prod 2^(i-1)"] = (
        r1.status == CONJECTURE_HOLDS_TO_DEPTH and r1.computed["minors"] == literal)

    r5 = run_experiment("sec5-qn-hankel", 6)
    parts["qn hankel"] = (r5.status == CONJECTURE_HOLDS_TO_DEPTH
                          and r5.headline_values == seq("1,2,5,16,66,352,2431")
                          and r5.headline_values == fixture_terms("A005157")[:7])
    elapsed = time.perf_counter() - start
    statuses = {r.name: r.status for r in (r10, r11, r1, r5)}
    parts["never PASS"] = PASS not in statuses.values()
    parts["runtime < 30 s"] = elapsed < 30
    failed = [k for k, v in parts.items() if not v]
    detail = f"{elapsed:.1f} s"
    if failed:
        detail += f"; failed: {failed}"
    if "two-factorial against prod 2^(i-1)" in failed:
        detail += f"; minors {show(r1.computed['minors'])} vs {show(literal)}"
    record(8, not failed, detail)


# -- 9 ----------------------------------------------------------------------------------------

def test_criterion_9_property_suites():
    import test_properties
    import test_riordan
    import test_ring

    suites = {
        "revert involution": test_properties.test_revert_is_involutory,
        "hankel invariance": lambda: [test_properties.test_hankel_invariance(r) for r in (-2, -1, 1, 2)],
        "riordan group laws": test_riordan.test_group_laws,
        "rational axioms": test_ring.test_rational_axioms,
        "gaussian axioms": test_ring.test_gaussian_axioms,
        "truncated polynomial axioms": test_ring.test_truncated_polynomial_axioms,
        "truncated polynomial brute force": test_ring.test_truncated_polynomial_brute_force,
    }
    failed = []
    for name, run in suites.items():
        try:
            run()
        except AssertionError as exc:
            failed.append(f"{name}: {exc}")

    # an extra seeded pass over 200 random rational series, independent of hypothesis
    rng = random.Random(20261014)
    for _ in range(200):
        num = [Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(rng.randint(1, 4))]
        num[0] = Fraction(rng.choice([-2, -1, 1, 2, 3]))
        den = [Fraction(1)] + [Fraction(rng.randint(-4, 4)) for _ in range(rng.randint(0, 3))]
        g = RationalGF(num, den).expand(12)
        if revert_transform(revert_transform(g)) != g:
            failed.append(f"seeded involution: {num} ; {den}")
            break
    record(9, not failed, "; ".join(failed))


# -- 10 ---------------------------------------------------------------------------------------

def test_criterion_10_paper_all_offline(tmp_path):
    env = dict(os.environ, HANKELKIT_OEIS_CACHE=str(tmp_path / "empty-cache"))
    start = time.perf_counter()
    proc = subprocess.run([sys.executable, "-m", "hankelkit", "paper", "all", "--format", "json"],
                          capture_output=True, text=True, env=env, timeout=120)
    elapsed = time.perf_counter() - start
    ok = proc.returncode == 0 and elapsed < 60
    names = []
    if ok:
        names = [r["name"] for r in json.loads(proc.stdout)["result"]["reports"]]
        ok = names == experiment_names()
    record(10, ok and not (tmp_path / "empty-cache").exists(),
           f"exit {proc.returncode}, {elapsed:.1f} s, {len(names)} reports")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))

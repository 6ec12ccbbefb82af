"""Command-line front end: ``hankelkit <command> ...``.

Every command builds an envelope ``{command, inputs, result}`` and renders
it as text, JSON or CSV.  Scalars are always written in the ring-scalar text
form, so JSON output parses back to the exact values with ``parse_scalar``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import __version__
from .contfrac import GammaFraction, JFraction, extract_gamma, extract_jfraction
from .errors import HankelKitError, NetworkDisabled, ParseError, UnknownSequence
from .linalg import (
    ExactMatrix,
    expand_bivariate,
    hankel_transform,
    mat_power_entry_seq,
    parse_bivariate,
    parse_matrix,
    principal_minors,
)
from .ring import format_scalar, parse_scalar
from .riordan import (
    RiordanSpec,
    amalgamate,
    inversion,
    riordan_inverse,
    riordan_matrix,
    riordan_mul,
    symmetrize,
    vertical_half,
)
from .series import (
    DEFAULT_ORDER,
    RationalGF,
    Series,
    alternate,
    binomial_transform,
    invert_transform,
    log_revert_transform,
    revert_transform,
    scale,
    series_sqrt,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_ENV = 0, 1, 2, 3
CHAIN_TOKENS = ("revert", "logrevert", "binomial:r", "invert:r", "alternate", "sqrt", "compose-scale:c")


class UsageError(HankelKitError):
    """Arguments that parse but make no sense together."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# -- result payloads -------------------------------------------------------------------------

def _seq(values) -> dict:
    return {"kind": "sequence", "values": [format_scalar(v) for v in values]}


def _mat(m: ExactMatrix) -> dict:
    return {"kind": "matrix", "rows": [[format_scalar(a) for a in r] for r in m.to_lists()]}


def _cf(cf) -> dict:
    if isinstance(cf, JFraction):
        return {"kind": "jfraction", "mu0": format_scalar(cf.mu0), "terminated": cf.terminated,
                "alphas": [format_scalar(a) for a in cf.alphas],
                "betas": [format_scalar(b) for b in cf.betas]}
    assert isinstance(cf, GammaFraction)
    return {"kind": "gamma", "mu0": format_scalar(cf.mu0), "terminated": cf.terminated,
            "gammas": [format_scalar(c) for c in cf.gammas]}


# -- argument helpers --------------------------------------------------------------------------

def _order(args) -> int:
    order = getattr(args, "order", None)
    order = DEFAULT_ORDER if order is None else order
    if order < 1:
        raise UsageError("--order must be positive")
    return order


def _depth(args):
    depth = getattr(args, "depth", None)
    if depth is not None and depth < 0:
        raise UsageError("--depth must be non-negative")
    return depth


def _gf(text: str, order: int) -> Series:
    return RationalGF.parse(text).expand(order)


def _terms(text: str) -> list:
    return [parse_scalar(t) for t in text.split(",") if t.strip()]


def _sequence_input(args, order: int) -> Series:
    """A positional term list, or ``--gf`` text (expanded, unless it has no ``;``)."""
    if (args.sequence is None) == (args.gf is None):
        raise UsageError("give exactly one of a sequence or --gf")
    if args.sequence is not None:
        return Series(_terms(args.sequence))
    if ";" in args.gf:
        return _gf(args.gf, order)
    return Series(_terms(args.gf))


def _chain(tokens) -> list:
    out = []
    for tok in tokens or []:
        for part in tok.replace(",", " ").split():
            name, _, arg = part.partition(":")
            if name in ("revert", "logrevert", "alternate", "sqrt"):
                if arg:
                    raise ParseError(f"{name} takes no argument")
                out.append((name, None))
            elif name in ("binomial", "invert", "compose-scale"):
                out.append((name, parse_scalar(arg) if arg else 1))
            else:
                raise ParseError(f"unknown transform {part!r}; expected one of {', '.join(CHAIN_TOKENS)}")
    return out


def apply_chain(g: Series, chain) -> Series:
    for name, arg in chain:
        if name == "revert":
            g = revert_transform(g)
        elif name == "logrevert":
            g = log_revert_transform(g)
        elif name == "binomial":
            g = binomial_transform(g, arg)
        elif name == "invert":
            g = invert_transform(g, arg)
        elif name == "alternate":
            g = alternate(g)
        elif name == "sqrt":
            g = series_sqrt(g)
        else:
            g = scale(g, arg)
    return g


# -- commands --------------------------------------------------------------------------------

def cmd_series(args):
    order = _order(args)
    chain = _chain(args.chain)
    g = apply_chain(_gf(args.gf, order), chain)
    inputs = {"gf": args.gf, "order": order, "chain": [n if a is None else f"{n}:{format_scalar(a)}"
                                                       for n, a in chain]}
    return inputs, _seq(g.tolist()), EXIT_OK


def cmd_hankel(args):
    order = _order(args)
    g = _sequence_input(args, order)
    depth = _depth(args)
    count = (g.order + 1) // 2 if depth is None else depth + 1
    inputs = {"sequence": args.sequence, "gf": args.gf, "order": order, "count": count}
    return inputs, _seq(hankel_transform(g, count)), EXIT_OK


def cmd_cf(args):
    order = _order(args)
    g = _sequence_input(args, order)
    depth = _depth(args)
    if args.form == "j":
        cf = extract_jfraction(g, (g.order - 1) // 2 if depth is None else depth)
    else:
        cf = extract_gamma(g, g.order - 1 if depth is None else depth)
    inputs = {"sequence": args.sequence, "gf": args.gf, "order": order, "form": args.form}
    return inputs, _cf(cf), EXIT_OK


def _spec(g_text, f_text, order, label):
    if g_text is None or f_text is None:
        raise UsageError(f"{label} needs both g and f")
    return RiordanSpec(_gf(g_text, order), _gf(f_text, order))


def cmd_riordan(args):
    order = _order(args)
    size = args.size
    if size < 1:
        raise UsageError("--size must be positive")
    order = max(order, size)
    first = _spec(args.g, args.f, order, "the array")
    inputs = {"action": args.action, "g": args.g, "f": args.f, "size": size}
    if args.action in ("mul", "amalgamate"):
        second = _spec(args.g2, args.f2, order, f"riordan {args.action} (--g2/--f2)")
        inputs.update(g2=args.g2, f2=args.f2)
    act = args.action

    def tri(s):
        return riordan_matrix(s, size - 1).matrix

    if act == "build":
        m = tri(first)
    elif act == "inverse":
        m = tri(riordan_inverse(first))
    elif act == "mul":
        m = tri(riordan_mul(first, second))
    elif act == "vhalf":
        m = tri(vertical_half(first))
    elif act == "symmetrize":
        m = symmetrize(tri(first))
    elif act == "amalgamate":
        m = amalgamate(tri(first), tri(second))
    else:
        m = inversion(first, size - 1)
    return inputs, _mat(m), EXIT_OK


def cmd_minors(args):
    if (args.matrix is None) == (args.bivariate is None):
        raise UsageError("give exactly one of a matrix or --bivariate")
    if args.matrix is not None:
        m = parse_matrix(args.matrix)
        inputs = {"matrix": args.matrix}
    else:
        if args.size < 1:
            raise UsageError("--size must be positive")
        m = expand_bivariate(parse_bivariate(args.bivariate), args.size, args.size)
        inputs = {"bivariate": args.bivariate, "size": args.size}
    return inputs, _seq(principal_minors(m)), EXIT_OK


def cmd_matpow(args):
    m = parse_matrix(args.matrix)
    count = args.count if args.count is not None else _order(args)
    # 1-based on the command line, as matrices are usually indexed in print
    seq = mat_power_entry_seq(m, args.row - 1, args.col - 1, count)
    inputs = {"matrix": args.matrix, "row": args.row, "col": args.col, "count": count}
    return inputs, _seq(seq), EXIT_OK


def cmd_paper(args):
    from .experiments import ERROR, FAIL, experiment_names, run_all

    order = _order(args)
    names = experiment_names() if args.name == "all" else [args.name]
    reports = run_all(names, depth=_depth(args), order=order, jobs=max(1, args.jobs))
    bad = any(r.status in (FAIL, ERROR) for r in reports)
    inputs = {"name": args.name, "order": order, "depth": _depth(args)}
    result = {"kind": "reports", "reports": [r.as_dict() for r in reports]}
    return inputs, result, EXIT_FAIL if bad else EXIT_OK


def cmd_oeis(args):
    from .experiments.fixtures import check_id, fixture_lookup
    from .experiments.oeis import cache_directory, fetch_bfile, parse_bfile
    from .experiments.oracles import ORACLES

    seq_id = check_id(args.id)
    cache = args.cache_dir
    inputs = {"action": args.action, "id": seq_id, "online": bool(args.online)}
    if args.action == "fetch":
        terms = fetch_bfile(seq_id, online=args.online, cache_dir=cache)
        return inputs, _seq(terms), EXIT_OK

    fixture = fixture_lookup(seq_id, online=args.online, cache_dir=cache)
    terms = list(fixture.terms)
    checks = []
    if seq_id in ORACLES:
        want = [ORACLES[seq_id](n) for n in range(len(terms))]
        checks.append({"against": "closed form", "agree": want == terms, "terms": len(terms)})
    cached = cache_directory(cache) / f"b{seq_id[1:]}.txt"
    if cached.exists():
        # fixtures start at the first listed term, so the b-file is compared as a prefix
        bfile = parse_bfile(cached.read_text())[:len(terms)]
        checks.append({"against": "cached b-file", "agree": bfile == terms[:len(bfile)], "terms": len(bfile)})
    if not checks:
        checks.append({"against": "fixture self-check", "agree": len(terms) > 0, "terms": len(terms)})
    ok = all(c["agree"] for c in checks)
    result = {"kind": "check", "id": seq_id, "status": "PASS" if ok else "FAIL", "source": fixture.source,
              "terms": [format_scalar(t) for t in terms], "checks": checks}
    return inputs, result, EXIT_OK if ok else EXIT_FAIL


# -- rendering -------------------------------------------------------------------------------

def _report_text(rep: dict, detail: bool) -> list:
    extra = f", {len(rep['mismatches'])} mismatch(es)" if rep["mismatches"] else ""
    lines = [f"{rep['name']}: {rep['status']} (depth {rep['depth']}{extra})"]
    if not detail:
        return lines
    for label, values in rep["computed"].items():
        lines.append(f"  {label}:")
        if values and isinstance(values[0], list):
            lines.extend("    " + ",".join(r) for r in values)
        else:
            lines.append("    " + ",".join("?" if v is None else v for v in values))
    for note in rep["notes"]:
        lines.append(f"  note: {note}")
    for m in rep["mismatches"]:
        lines.append(f"  MISMATCH {m['check']} at {m['index']}: computed {m['computed']}, "
                     f"expected {m['expected']}")
    return lines


def render_text(env: dict) -> str:
    res = env["result"]
    kind = res["kind"]
    if kind == "sequence":
        return ",".join(res["values"])
    if kind == "matrix":
        return "\n".join(",".join(r) for r in res["rows"])
    if kind == "jfraction":
        return "\n".join([f"mu0: {res['mu0']}", "alpha: " + ",".join(res["alphas"]),
                          "beta: " + ",".join(res["betas"]), f"terminated: {str(res['terminated']).lower()}"])
    if kind == "gamma":
        return "\n".join([f"mu0: {res['mu0']}", "gamma: " + ",".join(res["gammas"]),
                          f"terminated: {str(res['terminated']).lower()}"])
    if kind == "check":
        lines = [f"{res['id']}: {res['status']} ({len(res['terms'])} terms from {res['source']})"]
        lines += [f"  {c['against']}: {'agrees' if c['agree'] else 'DISAGREES'} over {c['terms']} terms"
                  for c in res["checks"]]
        return "\n".join(lines)
    reports = res["reports"]
    detail = len(reports) == 1
    lines = []
    for rep in reports:
        lines += _report_text(rep, detail)
    if not detail:
        counts = {}
        for rep in reports:
            counts[rep["status"]] = counts.get(rep["status"], 0) + 1
        lines.append("total: " + ", ".join(f"{k} {v}" for k, v in sorted(counts.items())))
    return "\n".join(lines)


def render_csv(env: dict) -> str:
    res = env["result"]
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    kind = res["kind"]
    if kind == "sequence":
        w.writerow(["n", "value"])
        w.writerows([n, v] for n, v in enumerate(res["values"]))
    elif kind == "matrix":
        w.writerows(res["rows"])
    elif kind == "jfraction":
        w.writerow(["level", "alpha", "beta"])
        for k, a in enumerate(res["alphas"]):
            w.writerow([k, a, res["betas"][k] if k < len(res["betas"]) else ""])
    elif kind == "gamma":
        w.writerow(["level", "gamma"])
        w.writerows([k + 1, c] for k, c in enumerate(res["gammas"]))
    elif kind == "check":
        w.writerow(["id", "against", "agree", "terms"])
        w.writerows([res["id"], c["against"], c["agree"], c["terms"]] for c in res["checks"])
    else:
        w.writerow(["name", "status", "depth", "mismatches", "notes"])
        w.writerows([r["name"], r["status"], r["depth"], len(r["mismatches"]), len(r["notes"])]
                    for r in res["reports"])
    return buf.getvalue().rstrip("\n")


def render(env: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(env, sort_keys=True, indent=2)
    if fmt == "csv":
        return render_csv(env)
    return render_text(env)


# -- parser ----------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    # SUPPRESS lets the flags appear before or after the subcommand without clobbering
    common.add_argument("--order", type=int, default=argparse.SUPPRESS,
                        help=f"series truncation order (default {DEFAULT_ORDER})")
    common.add_argument("--depth", type=int, default=argparse.SUPPRESS, help="Hankel/CF depth")
    common.add_argument("--format", choices=("text", "json", "csv"), default=argparse.SUPPRESS)
    common.add_argument("--online", action="store_true", default=argparse.SUPPRESS,
                        help="allow fetching from oeis.org")
    common.add_argument("--cache-dir", default=argparse.SUPPRESS,
                        help="b-file cache (default $HANKELKIT_OEIS_CACHE or .oeis-cache)")

    p = _Parser(prog="hankelkit", parents=[common],
                description="Exact Hankel transforms, series reversion and Riordan arrays.")
    p.add_argument("--version", action="version", version=f"hankelkit {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("series", parents=[common], help="expand a rational gf and apply transforms")
    s.add_argument("gf", help='"num ; den" ascending coefficients')
    s.add_argument("--chain", nargs="+", metavar="T", help=" ".join(CHAIN_TOKENS))
    s.set_defaults(func=cmd_series)

    for name, func, text in (("hankel", cmd_hankel, "Hankel transform"),
                             ("cf", cmd_cf, "continued fraction coefficients")):
        c = sub.add_parser(name, parents=[common], help=text)
        c.add_argument("sequence", nargs="?", help="comma separated terms")
        c.add_argument("--gf", help="terms or a rational gf")
        if name == "cf":
            c.add_argument("--form", choices=("j", "gamma"), default="j")
        c.set_defaults(func=func)

    r = sub.add_parser("riordan", parents=[common], help="Riordan array operations")
    r.add_argument("action", choices=("build", "inverse", "mul", "vhalf", "symmetrize", "amalgamate",
                                      "inversion"))
    r.add_argument("--g", required=True)
    r.add_argument("--f", required=True)
    r.add_argument("--g2")
    r.add_argument("--f2")
    r.add_argument("--size", type=int, default=7)
    r.set_defaults(func=cmd_riordan)

    m = sub.add_parser("minors", parents=[common], help="principal minors")
    m.add_argument("matrix", nargs="?", help='rows separated by ";" or newlines, or JSON')
    m.add_argument("--bivariate", help='"num ; den" in x and y')
    m.add_argument("--size", type=int, default=8)
    m.set_defaults(func=cmd_minors)

    w = sub.add_parser("matpow", parents=[common], help="one entry of successive matrix powers")
    w.add_argument("matrix")
    w.add_argument("--row", type=int, default=1)
    w.add_argument("--col", type=int, default=1)
    w.add_argument("--count", type=int)
    w.set_defaults(func=cmd_matpow)

    e = sub.add_parser("paper", parents=[common], help="run a registered experiment, or all")
    e.add_argument("name")
    e.add_argument("--jobs", type=int, default=1)
    e.set_defaults(func=cmd_paper)

    o = sub.add_parser("oeis", parents=[common], help="check a fixture or fetch a b-file")
    o.add_argument("action", choices=("check", "fetch"))
    o.add_argument("id")
    o.set_defaults(func=cmd_oeis)
    return p


def main(argv=None) -> int:
    args = None
    try:
        args = build_parser().parse_args(argv)
        for attr, default in (("order", None), ("depth", None), ("format", "text"),
                              ("online", False), ("cache_dir", None)):
            if not hasattr(args, attr):
                setattr(args, attr, default)
        inputs, result, code = args.func(args)
    except NetworkDisabled as exc:
        print(f"hankelkit: {exc}", file=sys.stderr)
        return EXIT_ENV
    except UnknownSequence as exc:
        print(f"hankelkit: {exc.args[0] if exc.args else exc}", file=sys.stderr)
        return EXIT_USAGE
    except HankelKitError as exc:
        print(f"hankelkit: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"hankelkit: {exc}", file=sys.stderr)
        return EXIT_ENV
    env = {"command": args.command, "inputs": inputs, "result": result}
    print(render(env, args.format))
    return code


if __name__ == "__main__":
    sys.exit(main())

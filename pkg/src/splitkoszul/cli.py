"""Command-line front end: ``splitkoszul <command> [options]``.

Exit codes: 0 success, 64 usage error, 65 bad input data, 70 an internal
consistency check failed.  ``koszul`` instead exits 0 for a Koszul verdict,
1 when the algebra is not numerically Koszul and 2 when undecided.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from itertools import combinations
from typing import Callable, Sequence

from . import builders, dual_algebra, graph_io, hilbert, koszul, oriented
from .graph_core import GraphValidationError, is_uniform
from .poly import IntPolynomial

EX_USAGE, EX_DATAERR, EX_SOFTWARE = 64, 65, 70


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _emit(out, doc: dict, text: Callable[[], list[str]], as_json: bool) -> None:
    if as_json:
        out.write(json.dumps(doc, indent=2, sort_keys=False) + "\n")
    else:
        out.write("\n".join(text()) + "\n")


def _table(rows: Sequence[Sequence], header: Sequence[str]) -> list[str]:
    cells = [list(map(str, header))] + [[str(c) for c in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    fmt = lambda r: "  ".join(c.rjust(w) for c, w in zip(r, widths)).rstrip()  # noqa: E731
    return [fmt(cells[0]), fmt(["-" * w for w in widths])] + [fmt(r) for r in cells[1:]]


def _sums_doc(s: dict) -> dict:
    return {f"{a},{b}": v for (a, b), v in sorted(s.items())}


def _sums_lines(s: dict) -> list[str]:
    rows = [(a, b, v) for (a, b), v in sorted(s.items())]
    return _table(rows, ("a", "b", "s[a,b]"))


# commands

def cmd_validate(args, out) -> int:
    ld = graph_io.load(args.input, strict=args.strict)
    g = ld.graph
    ok, witness = is_uniform(g)
    doc = {
        "kind": ld.kind,
        "vertices": len(g.levels),
        "height": g.height,
        "level_sizes": [len(row) for row in g.by_level],
        "edges": len(g.edges),
        "top": g.top,
        "uniform": ok,
        "non_uniform_at": None if ok else witness[0],
    }
    _emit(out, doc, lambda: [f"{k}: {v}" for k, v in doc.items()], args.json)
    return 0


def cmd_hilbert(args, out) -> int:
    g = graph_io.load(args.input, strict=args.strict).graph
    s = hilbert.chain_sums(g)
    inv = hilbert.hilbert_inverse(g, s)
    if inv != hilbert.grw_inverse(g):
        raise AssertionError("two inverse Hilbert series computations disagree")
    series = hilbert.expand_series(inv, args.order)
    doc = {
        "chain_sums": _sums_doc(s),
        "hilbert_inverse": inv.to_json(),
        "hilbert_inverse_str": str(inv),
        "series": list(series.coeffs),
        "first_negative": series.first_negative,
    }
    _emit(out, doc, lambda: _sums_lines(s) + [
        "", f"H(A,z)^-1 = {inv}",
        f"H(A,z) = {' + '.join(map(str, series.coeffs))} + ... (to order {args.order})",
        "all coefficients non-negative" if series.nonnegative
        else f"first negative coefficient at degree {series.first_negative}"], args.json)
    return 0


def cmd_dual(args, out) -> int:
    g = graph_io.load(args.input, strict=args.strict).graph
    dims = dual_algebra.dual_dims(g, modular=args.modular)
    ok, _ = is_uniform(g)
    poly = IntPolynomial(dims[k] for k in range(len(dims)))
    doc = {"dims": {str(k): v for k, v in dims.items()}, "dual_hilbert": poly.to_json(),
           "dual_hilbert_str": str(poly), "uniform": ok}
    lines = lambda: _table(sorted(dims.items()), ("k", "dim R^(k)")) + ["", f"H(A^!,z) = {poly}"] + (  # noqa: E731
        [] if ok else ["warning: graph is not uniform"])
    _emit(out, doc, lines, args.json)
    return 0


def cmd_koszul(args, out) -> int:
    g = graph_io.load(args.input, strict=args.strict).graph
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        rep = koszul.koszul_verdict(g, modular=args.modular)
    doc = rep.to_json()

    def lines():
        rows = [
            ("H(A,z)^-1", str(rep.hilbert_inverse)),
            ("H(A^!,z)", str(rep.dual_hilbert)),
            ("residual", str(rep.residual)),
            ("b coefficients", " ".join(map(str, rep.b_coeffs))),
            ("positivity screen", "pass" if rep.screen_pass else "fail"),
        ]
        if rep.sufficient_failure is not None:
            f = rep.sufficient_failure
            rows.append(("sufficient condition", f"fails at ({f.v}, j={f.j}, l={f.l}): {f.left_dim} vs {f.right_dim}"))
        if rep.distributive is not None:
            rows.append(("distributive", str(rep.distributive)))
        rows.append(("verdict", rep.verdict.value))
        w = max(len(k) for k, _ in rows)
        return [f"{k.ljust(w)}  {v}" for k, v in rows]

    _emit(out, doc, lines, args.json)
    if rep.verdict.is_koszul:
        return 0
    return 1 if rep.verdict is koszul.Verdict.NOT_NUMERICALLY_KOSZUL else 2


def _require(ld, kind: str):
    if ld.kind != kind:
        raise graph_io.ParseError(f"expected {kind} data, got {ld.kind}", "$")


def cmd_surface(args, out) -> int:
    ld = graph_io.load(args.input)
    _require(ld, "surface")
    s, g = ld.source, ld.graph
    inv = hilbert.hilbert_inverse(g)
    dual = dual_algebra.dual_hilbert(g, modular=args.modular)
    cf_inv, cf_dual = hilbert.surface_closed_forms(s.g, s.h, s.f)
    em = hilbert.euler_mu_report(g)
    nk, residual = koszul.numerical_koszul(g)
    span = oriented.functional_span_check(g)
    doc = {
        "g": s.g, "h": s.h, "f": s.f, "u": s.u, "chi": s.chi,
        "hilbert_inverse": inv.to_json(), "closed_form_inverse": cf_inv.to_json(),
        "inverse_matches": inv == cf_inv,
        "dual_hilbert": dual.to_json(), "closed_form_dual": cf_dual.to_json(),
        "dual_matches": dual == cf_dual,
        "mobius_bottom_top": em.mu, "top_coefficient": em.top_coeff, "euler_consistent": em.consistent,
        "numerically_koszul": nk, "residual": residual.to_json(),
        "cocycle_dim": span.dim_G, "cocycles_spanned_by_vertices": span.contained,
    }

    def lines():
        return [
            f"g={s.g} h={s.h} f={s.f} u={s.u} chi={s.chi}",
            f"H(A,z)^-1     {inv}",
            f"  closed form {cf_inv}  ({'match' if inv == cf_inv else 'MISMATCH'})",
            f"H(A^!,z)      {dual}",
            f"  closed form {cf_dual}  ({'match' if dual == cf_dual else 'MISMATCH'})",
            f"mu(*, M) = {em.mu}, chi - 1 = {s.chi - 1}, top coefficient = {em.top_coeff}"
            f"  ({'consistent' if em.consistent else 'INCONSISTENT'})",
            f"numerically Koszul: {nk}" + ("" if nk else f"  (residual {residual})"),
            f"face-constraint solutions: dim {span.dim_G}, vertex functionals span {span.dim_q}",
        ]

    _emit(out, doc, lines, args.json)
    return 0


def cmd_simplicial(args, out) -> int:
    ld = graph_io.load(args.input, strict=args.strict)
    _require(ld, "simplicial")
    delta, g = ld.source, ld.graph
    dual = dual_algebra.dual_hilbert(g, modular=args.modular)
    formula = dual_algebra.simplicial_dual_formula(delta)
    checked = failed = 0
    first_bad = None
    for A in sorted((f for f in delta.faces if 1 <= len(f) <= args.max_face), key=lambda f: (len(f), builders.face_id(f))):
        for k in range(1, len(A) + 1):
            for B in combinations(sorted(A, key=builders._sort_key), k):
                checked += 1
                if not dual_algebra.membership(g, dual_algebra.simplicial_sab(A, B)):
                    failed += 1
                    first_bad = first_bad or (builders.face_id(A), builders.face_id(B))
    nk, _ = koszul.numerical_koszul(g)
    doc = {
        "f_vector": g.meta["f_vector"], "dual_hilbert": dual.to_json(), "formula": formula.to_json(),
        "matches": dual == formula, "sab_checked": checked, "sab_failed": failed,
        "first_failure": list(first_bad) if first_bad else None, "numerically_koszul": nk,
    }
    _emit(out, doc, lambda: [
        f"f-vector {g.meta['f_vector']}",
        f"H(A^!,z) = {dual}",
        f"binomial formula {formula}  ({'match' if dual == formula else 'MISMATCH'})",
        f"S(A:B) membership: {checked - failed}/{checked} pass (faces of size <= {args.max_face})",
        f"numerically Koszul: {nk}"], args.json)
    return 0 if failed == 0 and dual == formula else EX_SOFTWARE


def cmd_orbits(args, out) -> int:
    ld = graph_io.load(args.input)
    _require(ld, "surface")
    rows = oriented.orbit_table(ld.graph)
    doc = {"contexts": rows, "all_match": all(r["match"] for r in rows)}
    _emit(out, doc, lambda: _table([(r["v"], r["w"], r["admissible"], r["orbits"], r["kernel_dim"],
                                      "yes" if r["match"] else "NO") for r in rows],
                                    ("v", "w", "|A|", "orbits", "kernel", "match")), args.json)
    return 0 if doc["all_match"] else EX_SOFTWARE


def cmd_demo(args, out) -> int:
    if args.name != "cassidy-shelton":
        raise UsageError(f"unknown demo {args.name!r}")
    g = builders.build_cassidy_shelton()
    s = hilbert.chain_sums(g)
    rep = koszul.koszul_verdict(g)
    ok, bad = koszul.positivity_screen(g)
    sc = koszul.sufficient_condition(g, "u", 2, 0)
    series = hilbert.expand_series(rep.hilbert_inverse, args.order)
    doc = {
        "chain_sums": _sums_doc(s),
        "hilbert_inverse_str": str(rep.hilbert_inverse),
        "series": list(series.coeffs),
        "screen_first_failure": bad,
        "dual_hilbert_str": str(rep.dual_hilbert),
        "residual_str": str(rep.residual),
        "sufficient_condition_u_2_0": {"left_dim": sc.left_dim, "right_dim": sc.right_dim, "holds": sc.holds},
        "verdict": rep.verdict.value,
    }
    _emit(out, doc, lambda: ["signed chain sums"] + _sums_lines(s) + [
        "",
        f"H(A,z)^-1 = {rep.hilbert_inverse}",
        f"H(A,z) = {', '.join(map(str, series.coeffs))}, ...",
        f"H(A,-z)^-1 first negative coefficient: degree {bad}",
        f"H(A^!,z) = {rep.dual_hilbert}",
        f"H(A,z)^-1 - H(A^!,-z) = {rep.residual}",
        f"sufficient condition at (u, 2, 0): left {sc.left_dim}, right {sc.right_dim}, holds {sc.holds}",
        f"verdict: {rep.verdict.value}"], args.json)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--order", type=int, default=6, help="series expansion depth (default 6)")
    common.add_argument("--modular", action="store_true", help="try modular ranks before exact elimination")
    common.add_argument("--strict", action="store_true", help="reject simplicial input that is not downward closed")

    p = _Parser(prog="splitkoszul", description="Hilbert series and Koszulness screens for layered graphs.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, fn, help_ in [
        ("validate", cmd_validate, "check a graph, surface or simplicial file"),
        ("hilbert", cmd_hilbert, "chain sums, inverse Hilbert series and its expansion"),
        ("dual", cmd_dual, "graded dimensions of the quadratic dual"),
        ("koszul", cmd_koszul, "full Koszulness report"),
        ("surface", cmd_surface, "closed forms and Euler characteristic checks for a surface"),
        ("simplicial", cmd_simplicial, "binomial dual dimensions and S(A:B) membership"),
        ("orbits", cmd_orbits, "orbit counts against kernel dimensions for a surface"),
    ]:
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.add_argument("input")
        if name == "simplicial":
            sp.add_argument("--max-face", type=int, default=4, help="largest face size for S(A:B) checks")
        sp.set_defaults(func=fn)
    sp = sub.add_parser("demo", parents=[common], help="worked example")
    sp.add_argument("name", choices=["cassidy-shelton"])
    sp.set_defaults(func=cmd_demo)
    return p


def main(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    shown = warnings.showwarning
    warnings.showwarning = lambda msg, *a, **k: err.write(f"warning: {msg}\n")
    try:
        args = build_parser().parse_args(argv)
        if args.order < 0:
            raise UsageError("--order must be non-negative")
        return args.func(args, out)
    except UsageError as exc:
        err.write(f"{exc}\n")
        return EX_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    except (OSError, graph_io.ParseError, GraphValidationError, builders.BuildError,
            hilbert.NonUnitConstant, hilbert.NoUniqueTop, oriented.NotSurfaceGraph,
            oriented.NonUniqueConjugate) as exc:
        err.write(f"error: {exc}\n")
        return EX_DATAERR
    except AssertionError as exc:
        err.write(f"internal check failed: {exc}\n")
        return EX_SOFTWARE
    finally:
        warnings.showwarning = shown


if __name__ == "__main__":
    sys.exit(main())

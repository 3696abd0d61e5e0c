"""Command-line front end: algebra validation, identity suites, and
generator/bracket tables in text, JSON, and LaTeX form.

Exit codes: 0 all requested checks pass, 1 a check failed, 2 usage
error.  JSON bracket tables follow the schema {algebra, k, entries:
[{left, right, lambda_terms: [{degree, expr}]}]} with expressions in
the differential-polynomial text grammar; emission is canonical so that
parse + re-render is byte-identical.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

from . import brst, fractional, zhufin
from .diffpoly import DiffPoly, GenSpace, parse_poly
from .errors import WsuperError
from .lambdabracket import LambdaPoly, lambda_bracket
from .scalar import Scalar
from .superalgebra import builtin, load_algebra
from .wred import (
    ReductionContext,
    express_in_generators,
    named_family,
    w_bracket,
)

USAGE_ERROR = 2
CHECK_FAILED = 1


def _load_algebra(spec: str):
    if spec.startswith("builtin:"):
        return builtin(spec[len("builtin:"):])
    if spec.startswith("file:"):
        return load_algebra(spec[len("file:"):])
    raise argparse.ArgumentTypeError(
        f"algebra source must be builtin:<name> or file:<path>, got {spec!r}"
    )


def _parse_k(value: str):
    if value == "symbolic":
        return "symbolic"
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"k must be a rational or 'symbolic', got {value!r}")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wsuper",
        description="Exact engine for classical affine, finite, and fractional W-superalgebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    commands = {
        "verify-algebra": "check the Lie superalgebra axioms and structure data",
        "brst-check": "run the BRST identity suite",
        "w-gens": "print the W-algebra generators",
        "w-bracket": "print the generator bracket table",
        "zhu": "print the finite W generators and their Poisson brackets",
        "frac-gens": "print the fractional W generators",
        "frac-bracket": "print the fractional generator bracket table",
        "props": "run the randomized property suite",
    }
    for name, help_text in commands.items():
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--algebra", required=True, type=_load_algebra,
                       help="builtin:<name> or file:<path>")
        p.add_argument("--k", type=_parse_k, default="symbolic",
                       help="level: a rational or 'symbolic' (default)")
        p.add_argument("--format", choices=("text", "json", "latex"), default="text")
        p.add_argument("--seed", type=int, default=0)
        if name.startswith("frac-"):
            p.add_argument("--t", type=int, default=1, help="loop truncation depth")
        if name.endswith("bracket"):
            p.add_argument("--golden", default=None,
                           help="golden table to compare against (never overwritten)")
    return parser


# ---------------------------------------------------------------------------
# output helpers
# ---------------------------------------------------------------------------


def _latex_expr(text: str) -> str:
    return (
        text.replace("∂", "\\partial ")
        .replace("*", " \\, ")
        .replace("λ", "\\lambda ")
    )


def _k_str(k) -> str:
    return "symbolic" if k == "symbolic" else str(Fraction(k))


def render_table_json(algebra: str, k, rows) -> str:
    """Canonical JSON for [(left, right, {degree: expr})] rows."""
    doc = {
        "algebra": algebra,
        "k": _k_str(k),
        "entries": [
            {
                "left": left,
                "right": right,
                "lambda_terms": [
                    {"degree": d, "expr": expr} for d, expr in sorted(terms.items())
                ],
            }
            for left, right, terms in rows
        ],
    }
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def reencode_table_json(text: str) -> str:
    """Parse an emitted table and re-render it canonically."""
    doc = json.loads(text)
    rows = [
        (e["left"], e["right"], {t["degree"]: t["expr"] for t in e["lambda_terms"]})
        for e in doc["entries"]
    ]
    return render_table_json(doc["algebra"], doc["k"], rows)


def _lambda_terms_str(terms: dict) -> str:
    if not terms:
        return "0"
    parts = []
    for d, expr in sorted(terms.items()):
        if d == 0:
            parts.append(expr)
        else:
            lam = "λ" if d == 1 else f"λ^{d}"
            body = f"({expr})" if (" + " in expr or " - " in expr) else expr
            parts.append(f"{body}·{lam}")
    return " + ".join(parts).replace("+ -", "- ")


def _print_table(out, algebra, k, rows, fmt):
    if fmt == "json":
        out.write(render_table_json(algebra, k, rows))
        return
    for left, right, terms in rows:
        if fmt == "latex":
            body = " + ".join(
                _latex_expr(expr) + ("" if d == 0 else f" \\lambda^{{{d}}}")
                for d, expr in sorted(terms.items())
            ) or "0"
            out.write(f"\\{{{left}\\,{{}}_\\lambda\\,{right}\\}} = {body}\n")
        else:
            out.write(f"{{{left} λ {right}}} = {_lambda_terms_str(terms)}\n")


def _report_lines(out, results) -> bool:
    """Print 'name : PASS/FAIL' lines; returns overall success."""
    ok_all = True
    for name, ok, *rest in results:
        out.write(f"{name} : {'PASS' if ok else 'FAIL'}\n")
        if not ok and rest and rest[0]:
            out.write(f"  residual: {rest[0]!r}\n")
        ok_all = ok_all and ok
    return ok_all


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def _cmd_verify_algebra(args, out) -> int:
    alg = args.algebra
    alg.validate()
    out.write(f"{alg.name}: dim {alg.dim}, axioms : PASS\n")
    return 0


def _cmd_brst_check(args, out) -> int:
    alg = args.algebra
    bs, el = brst.build_brst(alg, args.k)
    results = []
    results += brst.check_d_squared(bs, el)
    results += brst.check_lemma_formulas(bs, el)
    results += brst.check_K_brackets(bs, el)
    results += brst.check_L_action(bs, el)
    results += brst.check_J_closure(bs, el)
    results += brst.check_dJ_formula(bs, el)
    return 0 if _report_lines(out, results) else CHECK_FAILED


def _family(args):
    ctx = ReductionContext(args.algebra, args.k)
    return ctx, named_family(ctx)


def _cmd_w_gens(args, out) -> int:
    _, fam = _family(args)
    for lab, _, _, elem in fam.entries:
        body = elem.poly.render()
        if args.format == "latex":
            out.write(f"{lab} &= {_latex_expr(body)} \\\\\n")
        elif args.format == "json":
            out.write(json.dumps({"label": lab, "expr": body}, ensure_ascii=False) + "\n")
        else:
            out.write(f"{lab} = {body}\n")
    return 0


def _bracket_rows(ctx, fam):
    """All ordered pairs (i <= j) expressed in generator labels."""
    rows = []
    for i, (la, _, _, ea) in enumerate(fam.entries):
        for lb, _, _, eb in fam.entries[i:]:
            lp = w_bracket(ctx, ea, eb)
            terms = {}
            for d in sorted(lp.coeffs):
                if lp.coeffs[d]:
                    try:
                        terms[d] = express_in_generators(ctx, fam, lp.coeffs[d]).render()
                    except WsuperError:
                        terms[d] = lp.coeffs[d].render()
            rows.append((la, lb, terms))
    return rows


def _compare_golden(out, golden_path, compute, label_space, algebra, k) -> int:
    """Compare engine rows against a golden table, row by row.

    ``compute(left, right)`` returns the engine's {degree: expr} for the
    golden's own orientation, or None for unknown labels.  The golden
    file is read only; verdicts are MATCH / ENGINE-DIFFERS.
    """
    with open(golden_path, encoding="utf-8") as fh:
        doc = json.load(fh)
    if doc.get("algebra") != algebra:
        out.write(f"golden is for {doc.get('algebra')!r}, engine ran {algebra!r}\n")
        return USAGE_ERROR
    if doc.get("k") != _k_str(k):
        out.write(f"golden is at k={doc.get('k')!r}, engine ran k={_k_str(k)}\n")
        return USAGE_ERROR
    failures = 0
    for e in doc["entries"]:
        key = (e["left"], e["right"])
        want = {t["degree"]: t["expr"] for t in e["lambda_terms"]}
        got = compute(*key)
        if got is None:
            out.write(f"{{{key[0]} λ {key[1]}}} : ENGINE-DIFFERS (no engine row)\n")
            failures += 1
            continue
        same = _terms_equal(got, want, label_space)
        if same:
            out.write(f"{{{key[0]} λ {key[1]}}} : MATCH\n")
        else:
            failures += 1
            out.write(f"{{{key[0]} λ {key[1]}}} : ENGINE-DIFFERS\n")
            out.write(f"  engine  : {_lambda_terms_str(got)}\n")
            out.write(f"  expected: {_lambda_terms_str(want)}\n")
    out.write(f"{len(doc['entries']) - failures}/{len(doc['entries'])} MATCH\n")
    return 0 if failures == 0 else CHECK_FAILED


def _terms_equal(got: dict, want: dict, space: GenSpace) -> bool:
    for d in set(got) | set(want):
        a = parse_poly(got.get(d, "0"), space) if got.get(d) else DiffPoly(space)
        b = parse_poly(want.get(d, "0"), space) if want.get(d) else DiffPoly(space)
        if a != b:
            return False
    return True


def _cmd_w_bracket(args, out) -> int:
    ctx, fam = _family(args)
    if args.golden:
        labels = set(fam.labels())

        def compute(left, right):
            if left not in labels or right not in labels:
                return None
            lp = w_bracket(ctx, fam.element(left), fam.element(right))
            return {
                d: express_in_generators(ctx, fam, p).render()
                for d, p in lp.coeffs.items()
                if p
            }

        return _compare_golden(
            out, args.golden, compute, fam.label_space, args.algebra.name, args.k
        )
    rows = _bracket_rows(ctx, fam)
    _print_table(out, args.algebra.name, args.k, rows, args.format)
    return 0


def _cmd_zhu(args, out) -> int:
    ctx, fam = _family(args)
    zc = zhufin.ZhuContext(ctx)
    zc.register_family(fam)
    for lab in fam.labels():
        out.write(f"psi_{lab} = {zc.labels[lab].render()}\n")
    rows = []
    labs = fam.labels()
    for i, la in enumerate(labs):
        for lb in labs[i:]:
            br = zc.finite_bracket(zc.labels[la], zc.labels[lb])
            if br and ctx.k_value is not None:
                expr = zhufin.express_finite(ctx, fam, br).render()
            else:
                expr = br.render()
            rows.append((f"psi_{la}", f"psi_{lb}", {0: expr} if br else {}))
    _print_table(out, args.algebra.name, args.k, rows, args.format)
    return 0


def _frac_family(args):
    ctx = fractional.build_frac(args.algebra, args.t, args.k)
    return ctx, fractional.frac_generators(ctx)


def _cmd_frac_gens(args, out) -> int:
    ctx, fam = _frac_family(args)
    for lab, _, _, poly in fam.entries:
        body = poly.render()
        if args.format == "latex":
            out.write(f"{lab} &= {_latex_expr(body)} \\\\\n")
        elif args.format == "json":
            out.write(json.dumps({"label": lab, "expr": body}, ensure_ascii=False) + "\n")
        else:
            out.write(f"{lab} = {body}\n")
    return 0


def _cmd_frac_bracket(args, out) -> int:
    ctx, fam = _frac_family(args)
    rows = []
    express = ctx.k_value is not None
    for i, (la, _, _, pa) in enumerate(fam.entries):
        for lb, _, _, pb in fam.entries[i:]:
            lp = fractional.frac_bracket(ctx, pa, pb)
            terms = {}
            if express:
                try:
                    exprs = fractional.express_frac(ctx, fam, lp)
                    terms = {d: e.render() for d, e in exprs.items()}
                except WsuperError:
                    terms = {d: p.render() for d, p in lp.coeffs.items() if p}
            else:
                terms = {d: p.render() for d, p in lp.coeffs.items() if p}
            rows.append((la, lb, terms))
    if args.golden:
        space = GenSpace(
            [lab for lab, _, _, _ in fam.entries],
            [p.parity() for _, _, _, p in fam.entries],
        )
        engine = {(l, r): t for l, r, t in rows}

        def compute(left, right):
            return engine.get((left, right))

        return _compare_golden(out, args.golden, compute, space, args.algebra.name, args.k)
    _print_table(out, args.algebra.name, args.k, rows, args.format)
    return 0


def _cmd_props(args, out) -> int:
    alg = args.algebra
    rng = random.Random(args.seed)
    ctx = ReductionContext(alg, args.k)
    space = ctx.space

    def random_poly(parity):
        acc = DiffPoly(space)
        tries = 0
        while acc.is_zero() or acc.parity() != parity:
            if tries > 40:
                return DiffPoly.one(space) if parity == 0 else acc
            tries += 1
            term = DiffPoly.const(space, Fraction(rng.randrange(-4, 5)))
            for _ in range(rng.randrange(1, 3)):
                g = rng.randrange(alg.dim)
                term = term * DiffPoly(space, {((g, rng.randrange(0, 2)),): Scalar.of(1)})
            if term.parity() == parity:
                acc = acc + term
        return acc

    skew_bad = jac_bad = 0
    trials = 60
    for _ in range(trials):
        a = random_poly(rng.randrange(2))
        b = random_poly(rng.randrange(2))
        c = random_poly(rng.randrange(2))
        if not _skew_holds(ctx.base, a, b):
            skew_bad += 1
        if not _jacobi_holds(ctx.base, a, b, c):
            jac_bad += 1
    results = [
        (f"skewsymmetry on {trials} random pairs", skew_bad == 0, skew_bad),
        (f"jacobi on {trials} random triples", jac_bad == 0, jac_bad),
    ]
    return 0 if _report_lines(out, results) else CHECK_FAILED


def _skew_holds(base, a, b) -> bool:
    from .lambdabracket import skew_defect

    return skew_defect(base, a, b).is_zero()


def _jacobi_holds(base, a, b, c) -> bool:
    from .lambdabracket import jacobi_defect

    return not jacobi_defect(base, a, b, c)


_COMMANDS = {
    "verify-algebra": _cmd_verify_algebra,
    "brst-check": _cmd_brst_check,
    "w-gens": _cmd_w_gens,
    "w-bracket": _cmd_w_bracket,
    "zhu": _cmd_zhu,
    "frac-gens": _cmd_frac_gens,
    "frac-bracket": _cmd_frac_bracket,
    "props": _cmd_props,
}


def run(argv, out=None) -> int:
    out = out or sys.stdout
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE_ERROR if exc.code not in (0,) else 0
    if getattr(args, "t", 0) < 0:
        out.write("t must be nonnegative\n")
        return USAGE_ERROR
    try:
        return _COMMANDS[args.command](args, out)
    except WsuperError as exc:
        out.write(f"error: {exc}\n")
        return CHECK_FAILED
    except FileNotFoundError as exc:
        out.write(f"error: {exc}\n")
        return USAGE_ERROR


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()

"""Acceptance gate: one test (and one printed PASS/FAIL line) per
criterion.  Verdicts are computed first and printed before asserting, so
the line appears even when a criterion fails honestly."""

import io
import random
import time
from fractions import Fraction

from wsuper.brst import (
    build_brst,
    check_K_brackets,
    check_d_squared,
    check_lemma_formulas,
)
from wsuper.cli import run
from wsuper.diffpoly import DiffPoly, GenSpace
from wsuper.fractional import (
    build_frac,
    check_frac_table,
    check_shadow_lemmas,
    eta_full,
    frac_bracket,
    frac_generators,
)
from wsuper.lambdabracket import (
    BaseBracket,
    LambdaPoly,
    jacobi_defect,
    lambda_bracket,
    skew_defect,
)
from wsuper.scalar import Scalar
from wsuper.superalgebra import builtin
from wsuper.wred import (
    ReductionContext,
    express_in_generators,
    find_generators,
    minimal_generators,
    named_family,
    w_bracket,
)
from wsuper.zhufin import ZhuContext, finite_minimal_generators, zhu_project

import test_diffpoly
import test_lambda


def report(n, label, ok, detail=""):
    verdict = "PASS" if ok else "FAIL"
    line = f"criterion {n} ({label}): {verdict}"
    if detail:
        line += f" — {detail}"
    print(line, flush=True)
    return ok


def data(name):
    from importlib import resources

    return str(resources.files("wsuper").joinpath(f"data/{name}"))


def test_criterion_1_spo21_bracket_table():
    start = time.monotonic()
    buf = io.StringIO()
    code = run(
        [
            "w-bracket",
            "--algebra",
            "builtin:spo(2|1)",
            "--k",
            "1",
            "--golden",
            data("spo21_table.json"),
        ],
        buf,
    )
    elapsed = time.monotonic() - start
    ok = code == 0 and "3/3 MATCH" in buf.getvalue() and elapsed < 1.0
    assert report(1, "spo(2|1) bracket table at k=1", ok, f"{elapsed:.2f}s")


def test_criterion_2_spo23_suite():
    start = time.monotonic()
    ctx = ReductionContext(builtin("spo(2|3)"), k=1)
    fam = named_family(ctx)  # certifies all four generators at k=1
    invariant = all(ctx.is_w_element(el.poly)[0] for _, _, _, el in fam.entries)

    # the ten-entry table, closed in the generators
    lspace = fam.label_space
    table = {}
    rows = []
    for i in range(len(fam.entries)):
        for j in range(i, len(fam.entries)):
            la, _, _, ea = fam.entries[i]
            lb, _, _, eb = fam.entries[j]
            lp = w_bracket(ctx, ea, eb)
            coeffs = {
                d: express_in_generators(ctx, fam, p)
                for d, p in lp.coeffs.items()
                if p
            }
            table[(i, j)] = LambdaPoly(lspace, coeffs)
            rows.append((la, lb, coeffs))
    closed = len(rows) == 10

    # PVA axioms of the computed table as a bracket on the labels
    label_base = BaseBracket(lspace, {k: v for k, v in table.items()}, complete=True)
    gens = [DiffPoly.gen(lspace, lab) for lab in fam.labels()]
    axioms = all(
        skew_defect(label_base, a, b).is_zero() for a in gens for b in gens
    ) and all(
        not jacobi_defect(label_base, a, b, c)
        for a in gens
        for b in gens
        for c in gens
    )

    # row-by-row comparison against the published table
    buf = io.StringIO()
    run(
        [
            "w-bracket",
            "--algebra",
            "builtin:spo(2|3)",
            "--k",
            "1",
            "--golden",
            data("spo23_table.json"),
        ],
        buf,
    )
    out = buf.getvalue()
    matches = sum(1 for line in out.splitlines() if line.endswith(": MATCH"))
    elapsed = time.monotonic() - start
    ok = invariant and closed and axioms and matches >= 8 and elapsed < 60.0
    detail = (
        f"invariance={invariant}, closure={closed}, pva-axioms={axioms}, "
        f"{matches}/10 MATCH, {elapsed:.1f}s"
    )
    print(out)
    assert report(2, "spo(2|3) suite", ok, detail)


def test_criterion_3_brst_identities():
    start = time.monotonic()
    ok = True
    for name in ("sl(2)", "spo(2|1)", "spo(2|3)"):
        bs, el = build_brst(builtin(name))
        for checker in (check_d_squared, check_lemma_formulas, check_K_brackets):
            ok = ok and all(good for _, good, _ in checker(bs, el))
    elapsed = time.monotonic() - start
    ok = ok and elapsed < 30.0
    assert report(3, "BRST identities, symbolic k", ok, f"{elapsed:.1f}s")


def test_criterion_4_minimal_generator_formulas():
    start = time.monotonic()
    ok = True
    for name in ("sl(2)", "spo(2|1)"):
        ctx = ReductionContext(builtin(name))  # symbolic k
        fam = minimal_generators(ctx)
        fin = finite_minimal_generators(ctx)
        finite = {p for _, p in fin["v"]} | {p for _, p in fin["w"]} | {fin["f"]}
        for _, _, _, el in fam.entries:
            ok = ok and ctx.is_w_element(el.poly)[0]
            ok = ok and zhu_project(el.poly) in finite
    elapsed = time.monotonic() - start
    ok = ok and elapsed < 5.0
    assert report(4, "minimal generators + finite projections", ok, f"{elapsed:.1f}s")


def test_criterion_5_finite_w_brackets():
    ctx = ReductionContext(builtin("spo(2|1)"))
    fam = named_family(ctx)
    zhu = ZhuContext(ctx)
    zhu.register_family(fam)
    fin = finite_minimal_generators(ctx)
    ok = True
    # {psi_v1, psi_v2} = psi_[v1,v2] over g_f(0) (empty for this algebra,
    # so the loop is vacuous and recorded as such)
    vs = fin["v"]
    for v1, p1 in vs:
        for v2, p2 in vs:
            br = ctx.alg.bracket(v1, v2)
            want = next(p for v, p in vs if v == br)
            ok = ok and zhu.finite_bracket(p1, p2) == want
    # {psi_f, .} = 0 on every registered finite generator
    psi_f = fin["f"]
    for finite in zhu.labels.values():
        ok = ok and zhu.finite_bracket(psi_f, finite).is_zero()
        ok = ok and zhu.finite_bracket(finite, psi_f).is_zero()
    assert report(5, "finite W bracket rows on spo(2|1)", ok, f"|v-family|={len(vs)}")


def test_criterion_6_fractional():
    start = time.monotonic()
    alg = builtin("spo(2|1)")
    ok = True
    excluded = ("fz-gzp", "f.z1", "f.z1")
    for t in (1, 2):
        ctx = build_frac(alg, t)
        fam = frac_generators(ctx)  # certifies every eta generator
        for label in fam.labels():
            ok = ok and ctx.is_w_element(fam.element(label))[0]
        for r in check_frac_table(ctx, fam):
            key = (r["row"], r["left"], r["right"])
            if t == 2 and key == excluded:
                continue  # self-pair outside the row's applicable domain
            ok = ok and r["match"]
        for lab, good, _ in check_shadow_lemmas(ctx):
            if t == 2 and lab == "lemB f.z1 f.z1":
                continue
            ok = ok and good
    # on the excluded pair the engine value satisfies skewsymmetry and the
    # row formula cannot: fz is even, so the lambda^0 part of the self-
    # bracket must be its own negative, while -2 eta(x z) is nonzero
    ctx = build_frac(alg, 2)
    fz = eta_full(ctx, alg.f, 1)
    eng = frac_bracket(ctx, fz, fz)
    ok = ok and eng.is_zero()
    claimed = eta_full(ctx, [Fraction(c) for c in alg.x], 1) * Fraction(-2)
    ok = ok and bool(claimed)  # the claimed value cannot equal its negative
    elapsed = time.monotonic() - start
    ok = ok and elapsed < 120.0
    assert report(
        6, "fractional reductions, t=1 and t=2", ok, f"{elapsed:.1f}s"
    )


def _random_poly(rng, space, dim, parity, degrees, orders, terms):
    while True:
        acc = DiffPoly(space)
        for _ in range(rng.randrange(1, terms + 1)):
            term = DiffPoly.const(space, Fraction(rng.randrange(-3, 4)))
            for _ in range(rng.choice(degrees)):
                term = term * DiffPoly(
                    space,
                    {((rng.randrange(dim), rng.choice(orders)),): Scalar.of(1)},
                )
            acc = acc + term
        if acc and acc.parity() == parity:
            return acc


def test_criterion_7_property_suite():
    start = time.monotonic()
    rng = random.Random(20260824)

    heavy = ((1, 1, 2, 2, 3), (0, 0, 1, 2), 2)
    light = ((1, 1, 2), (0, 0, 1), 1)
    samplers = []
    ctx = ReductionContext(builtin("sl(2)"), k=1)
    samplers.extend([(ctx.base, ctx.space, 3, heavy)] * 100)
    bs, _ = build_brst(builtin("sl(2)"), k=1)
    samplers.extend([(bs.base, bs.space, len(bs.space.names), light)] * 200)
    spo = ReductionContext(builtin("spo(2|1)"), k=1)
    samplers.extend([(spo.base, spo.space, spo.alg.dim, light)] * 200)

    violations = 0
    for base, space, dim, shape in samplers:
        parities = sorted({space.parities[g] for g in range(dim)})
        a = _random_poly(rng, space, dim, rng.choice(parities), *shape)
        b = _random_poly(rng, space, dim, rng.choice(parities), *shape)
        c = _random_poly(rng, space, dim, rng.choice(parities), *shape)
        if not skew_defect(base, a, b).is_zero():
            violations += 1
        if jacobi_defect(base, a, b, c):
            violations += 1

    diff_bad = 0
    drng = random.Random(7)
    SP = test_diffpoly.SPACE
    for _ in range(1000):
        A = test_diffpoly.random_poly(drng)
        B = test_diffpoly.random_poly(drng)
        expected = DiffPoly(
            SP, test_diffpoly.oracle_mul(A.terms, B.terms, SP.parities)
        )
        if A * B != expected:
            diff_bad += 1

    elapsed = time.monotonic() - start
    ok = violations == 0 and diff_bad == 0
    assert report(
        7,
        "property suite (500 bracket triples, 1000 product cases)",
        ok,
        f"violations={violations + diff_bad}, {elapsed:.1f}s",
    )


def test_criterion_8_oracle_equivalence():
    rng = random.Random(31415)
    bases = []
    for name in ("sl(2)", "spo(2|1)"):
        ctx = ReductionContext(builtin(name), k=1)
        bases.append((ctx.base, ctx.space, builtin(name).dim))
    agreed = 0
    for i in range(200):
        base, space, dim = bases[i % len(bases)]
        A = test_lambda.random_poly(rng, space, dim)
        B = test_lambda.random_poly(rng, space, dim)
        engine = {
            d: p for d, p in lambda_bracket(base, A, B).coeffs.items() if p
        }
        if engine == test_lambda.naive_bracket(base, A, B):
            agreed += 1
    oracle_ok = agreed == 200

    search_ok = True
    for name in ("sl(2)", "spo(2|1)"):
        ctx = ReductionContext(builtin(name), k=1)
        closed = {
            tuple(Fraction(c) for c in lead): el.poly
            for _, _, lead, el in minimal_generators(ctx).entries
        }
        found = {tuple(lead): el.poly for lead, el in find_generators(ctx)}
        search_ok = search_ok and found == closed

    ok = oracle_ok and search_ok
    assert report(
        8,
        "oracle equivalence + generator search",
        ok,
        f"{agreed}/200 oracle agreements, search={'ok' if search_ok else 'differs'}",
    )

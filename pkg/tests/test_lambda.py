"""Lambda-bracket engine against an independently coded naive expander.

The oracle recursion is deliberately structured differently from the
engine: it peels the *right* argument from the back with the Leibniz
rule, applies sesquilinearity on derivative symbols, and flips
composite-left brackets through skewsymmetry; it never calls into the
engine's recursion.
"""

import random
from fractions import Fraction
from math import comb

from wsuper.brst import build_brst
from wsuper.diffpoly import DiffPoly
from wsuper.lambdabracket import (
    LambdaPoly,
    jacobi_defect,
    lambda_bracket,
    skew_defect,
)
from wsuper.scalar import Scalar
from wsuper.superalgebra import builtin
from wsuper.wred import ReductionContext


# -- oracle ------------------------------------------------------------------


def _mono_parity(space, mono):
    return sum(space.parities[g] for g, _ in mono) % 2


def _add(acc, deg, poly):
    if not poly:
        return
    cur = acc.get(deg)
    cur = poly if cur is None else cur + poly
    if cur:
        acc[deg] = cur
    else:
        acc.pop(deg, None)


def _shift_minus_lambda_minus_partial(space, coeffs):
    """Substitute the bracket variable by (-lambda - d)."""
    out = {}
    for n, poly in coeffs.items():
        ders = [poly]
        for _ in range(n):
            ders.append(ders[-1].partial())
        for j in range(n + 1):
            _add(out, j, ders[n - j] * Fraction((-1) ** n * comb(n, j)))
    return out


def naive_bracket(base, A, B):
    """{A lambda B} as {degree: DiffPoly}, computed naively."""
    space = base.space
    out = {}
    for ma, ca in A.terms.items():
        for mb, cb in B.terms.items():
            part = _naive_mono(base, ma, mb)
            for deg, poly in part.items():
                _add(out, deg, poly * (ca * cb))
    return out


def _naive_mono(base, ma, mb):
    space = base.space
    if len(ma) == 0 or len(mb) == 0:
        return {}
    if len(mb) > 1:
        # {A l C·s} = {A l C}·s + (-1)^{p(A)p(C)} C·{A l s}
        prefix, last = mb[:-1], (mb[-1],)
        out = {}
        for deg, poly in _naive_mono(base, ma, prefix).items():
            _add(out, deg, poly * DiffPoly(space, {last: Scalar.of(1)}))
        sign = (-1) ** (_mono_parity(space, ma) * _mono_parity(space, prefix))
        pre_poly = DiffPoly(space, {prefix: Scalar.of(sign)})
        for deg, poly in _naive_mono(base, ma, last).items():
            _add(out, deg, pre_poly * poly)
        return out
    g, n = mb[0]
    if n > 0:
        # {A l d(b)} = (l + d) {A l b}
        inner = _naive_mono(base, ma, ((g, n - 1),))
        out = {}
        for deg, poly in inner.items():
            _add(out, deg + 1, poly)
            _add(out, deg, poly.partial())
        return out
    if len(ma) == 1 and ma[0][1] == 0:
        lp = base.entry(ma[0][0], g)
        return {d: p for d, p in lp.coeffs.items() if p}
    # composite or derivative left: flip through skewsymmetry
    flipped = _naive_mono_left_gen_target(base, mb, ma)
    sign = -((-1) ** (_mono_parity(base.space, ma) * base.space.parities[g]))
    shifted = _shift_minus_lambda_minus_partial(base.space, flipped)
    return {d: p * Fraction(sign) for d, p in shifted.items()}


def _naive_mono_left_gen_target(base, mb, ma):
    return _naive_mono(base, mb, ma)


def random_poly(rng, space, dim, terms=2, factors=2, order=2):
    acc = DiffPoly(space)
    for _ in range(rng.randrange(1, terms + 1)):
        term = DiffPoly.const(space, Fraction(rng.randrange(-3, 4)))
        for _ in range(rng.randrange(1, factors + 1)):
            term = term * DiffPoly(
                space, {((rng.randrange(dim), rng.randrange(order + 1)),): Scalar.of(1)}
            )
        acc = acc + term
    return acc


def _as_dict(lp: LambdaPoly):
    return {d: p for d, p in lp.coeffs.items() if p}


def test_oracle_agreement_current_and_brst():
    rng = random.Random(20260824)
    bases = []
    for name in ("sl(2)", "spo(2|1)"):
        ctx = ReductionContext(builtin(name), k=1)
        bases.append((ctx.base, ctx.space, builtin(name).dim))
    bs, _ = build_brst(builtin("sl(2)"), k=1)
    bases.append((bs.base, bs.space, len(bs.space.names)))

    checked = 0
    while checked < 210:
        base, space, dim = bases[checked % len(bases)]
        A = random_poly(rng, space, dim)
        B = random_poly(rng, space, dim)
        assert _as_dict(lambda_bracket(base, A, B)) == naive_bracket(base, A, B)
        checked += 1


def test_sesquilinearity_displays():
    ctx = ReductionContext(builtin("sl(2)"))
    e = ctx.poly(ctx.alg.unit("e"))
    f = ctx.poly(ctx.alg.unit("f"))
    de = ctx.poly(ctx.alg.unit("e"), order=1)
    lhs = lambda_bracket(ctx.base, de, f)
    ref = lambda_bracket(ctx.base, e, f)
    want = LambdaPoly(ctx.space, {d + 1: p * Fraction(-1) for d, p in ref.coeffs.items()})
    assert lhs == want
    lhs = lambda_bracket(ctx.base, e, ctx.poly(ctx.alg.unit("f"), order=1))
    want = LambdaPoly(ctx.space, {d + 1: p for d, p in ref.coeffs.items()}) + LambdaPoly(
        ctx.space, {d: p.partial() for d, p in ref.coeffs.items()}
    )
    assert lhs == want


def test_left_leibniz_display():
    ctx = ReductionContext(builtin("spo(2|1)"))
    alg = ctx.alg
    a = ctx.poly(alg.unit("e_od"))
    b = ctx.poly(alg.unit("f_od"))
    c = ctx.poly(alg.unit("h"))
    lhs = lambda_bracket(ctx.base, a, b * c)
    rhs = LambdaPoly(ctx.space)
    ab = lambda_bracket(ctx.base, a, b)
    ac = lambda_bracket(ctx.base, a, c)
    rhs = rhs + LambdaPoly(ctx.space, {d: p * c for d, p in ab.coeffs.items()})
    sign = Fraction((-1) ** (a.parity() * b.parity()))
    rhs = rhs + LambdaPoly(ctx.space, {d: b * p * sign for d, p in ac.coeffs.items()})
    assert lhs == rhs


def test_skew_and_jacobi_randomized():
    rng = random.Random(31)
    ctx = ReductionContext(builtin("spo(2|1)"), k=1)

    def homogeneous(parity):
        while True:
            p = random_poly(rng, ctx.space, ctx.alg.dim, terms=1)
            if p and p.parity() == parity:
                return p

    for _ in range(40):
        a = homogeneous(rng.randrange(2))
        b = homogeneous(rng.randrange(2))
        c = homogeneous(rng.randrange(2))
        assert skew_defect(ctx.base, a, b).is_zero()
        assert not jacobi_defect(ctx.base, a, b, c)

"""Lambda-bracket calculus over free differential supersymmetric algebras.

A base bracket assigns a LambdaPoly to each ordered pair of generators;
`lambda_bracket` extends it to arbitrary polynomials using

* sesquilinearity   {da_l b} = -l {a_l b},   {a_l db} = (l+d){a_l b},
* the left Leibniz rule  {a_l bc} = {a_l b}c + (-1)^{p(a)p(b)} b {a_l c},
* super-skewsymmetry  {A_l B} = -(-1)^{p(A)p(B)} {B_{-l-d} A},

where in the last rule -l-d acts on the coefficients.  The right
Leibniz rule is never hardcoded: a composite left argument is handled by
flipping via skewsymmetry, decomposing the (now right) argument with the
left Leibniz rule, and flipping each single-symbol bracket back.  The
recursion terminates because each flip strictly shortens the monomial
that ends up on the left.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .diffpoly import DiffPoly, GenSpace, mono_parity
from .errors import MixedSpaces
from .scalar import Scalar

__all__ = [
    "LambdaPoly",
    "BaseBracket",
    "lambda_bracket",
    "jacobi_defect",
    "skew_defect",
    "check_skewsymmetry",
    "check_jacobi",
    "conformal_weight",
]


class LambdaPoly:
    """Polynomial in lambda with DiffPoly coefficients."""

    __slots__ = ("space", "coeffs")

    def __init__(self, space: GenSpace, coeffs=None):
        self.space = space
        c = {}
        if coeffs:
            for n, p in coeffs.items():
                if p:
                    c[int(n)] = p
        self.coeffs = c

    @classmethod
    def zero(cls, space):
        return cls(space)

    @classmethod
    def of(cls, poly: DiffPoly, degree: int = 0):
        return cls(poly.space, {degree: poly})

    def is_zero(self) -> bool:
        return not self.coeffs

    def get(self, n: int) -> DiffPoly:
        return self.coeffs.get(n, DiffPoly(self.space))

    def __add__(self, other):
        if self.space != other.space:
            raise MixedSpaces("lambda polynomials over different spaces")
        c = dict(self.coeffs)
        for n, p in other.coeffs.items():
            s = c.get(n)
            s = p if s is None else s + p
            if s:
                c[n] = s
            else:
                c.pop(n, None)
        out = LambdaPoly.__new__(LambdaPoly)
        out.space, out.coeffs = self.space, c
        return out

    def __neg__(self):
        out = LambdaPoly.__new__(LambdaPoly)
        out.space = self.space
        out.coeffs = {n: -p for n, p in self.coeffs.items()}
        return out

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "LambdaPoly":
        return LambdaPoly(self.space, {n: p * c for n, p in self.coeffs.items()})

    def mul_poly(self, poly: DiffPoly, left: bool = False) -> "LambdaPoly":
        """Multiply every coefficient by ``poly`` (on the right, or left)."""
        if left:
            return LambdaPoly(self.space, {n: poly * p for n, p in self.coeffs.items()})
        return LambdaPoly(self.space, {n: p * poly for n, p in self.coeffs.items()})

    def shift_lambda(self, n: int, sign: int = 1) -> "LambdaPoly":
        """Multiply by (sign*lambda)^n."""
        s = 1 if n % 2 == 0 or sign > 0 else -1
        return LambdaPoly(
            self.space, {m + n: (p if s > 0 else -p) for m, p in self.coeffs.items()}
        )

    def map_coeffs(self, fn) -> "LambdaPoly":
        return LambdaPoly(self.space, {n: fn(p) for n, p in self.coeffs.items()})

    def at_lambda_zero(self) -> DiffPoly:
        return self.get(0)

    def __eq__(self, other):
        return (
            isinstance(other, LambdaPoly)
            and self.space == other.space
            and self.coeffs == other.coeffs
        )

    def __repr__(self):
        if not self.coeffs:
            return "LambdaPoly(0)"
        parts = []
        for n in sorted(self.coeffs):
            body = self.coeffs[n].render()
            if n == 0:
                parts.append(body)
            else:
                lam = "λ" if n == 1 else f"λ^{n}"
                parts.append(f"({body})*{lam}")
        return "LambdaPoly(" + " + ".join(parts) + ")"


def _lambda_plus_partial(lp: LambdaPoly, power: int) -> LambdaPoly:
    """Apply (lambda + d)^power, d acting on the coefficients."""
    if power == 0:
        return lp
    out = LambdaPoly(lp.space)
    for n, p in lp.coeffs.items():
        ders = [p]
        for _ in range(power):
            ders.append(ders[-1].partial())
        for j in range(power + 1):
            out = out + LambdaPoly(lp.space, {n + j: ders[power - j] * Fraction(comb(power, j))})
    return out


def _subst_minus_lambda_minus_partial(lp: LambdaPoly) -> LambdaPoly:
    """Substitute the bracket variable by (-lambda - d), d on coefficients."""
    out = LambdaPoly(lp.space)
    for n, p in lp.coeffs.items():
        ders = [p]
        for _ in range(n):
            ders.append(ders[-1].partial())
        sign = -1 if n % 2 else 1
        for j in range(n + 1):
            out = out + LambdaPoly(
                lp.space, {j: ders[n - j] * Fraction(sign * comb(n, j))}
            )
    return out


class BaseBracket:
    """Bracket table on order-0 generator symbols, closed under skewsymmetry.

    ``table`` maps ordered pairs (i, j) of generator indices to
    LambdaPoly values.  Missing orientations are filled from the given
    ones via skewsymmetry at construction time.
    """

    __slots__ = ("space", "table")

    def __init__(self, space: GenSpace, table, complete: bool = True):
        self.space = space
        full = {}
        for (i, j), lp in table.items():
            if lp and not lp.is_zero():
                full[(i, j)] = lp
        if complete:
            par = space.parities
            for (i, j) in list(full):
                if (j, i) not in full:
                    sign = -1 if (par[i] * par[j]) % 2 else 1
                    flipped = _subst_minus_lambda_minus_partial(full[(i, j)])
                    cand = flipped.scale(Fraction(-1)) if sign > 0 else flipped
                    if not cand.is_zero():
                        full[(j, i)] = cand
        self.table = full

    def entry(self, i: int, j: int) -> LambdaPoly:
        return self.table.get((i, j), LambdaPoly(self.space))


def _bracket_gen_left(ctx: BaseBracket, g: int, B: DiffPoly) -> LambdaPoly:
    """{g_l B} for a single order-0 generator g on the left."""
    space = ctx.space
    par = space.parities
    pg = par[g]
    out = LambdaPoly(space)
    one = Scalar.of(1)
    for mono, coeff in B.terms.items():
        pref_parity = 0
        for i, (h, m) in enumerate(mono):
            inner = ctx.entry(g, h)
            if not inner.is_zero():
                inner = _lambda_plus_partial(inner, m)
                prefix = DiffPoly(space, {mono[:i]: one})
                suffix = DiffPoly(space, {mono[i + 1 :]: one})
                term = inner.mul_poly(prefix, left=True).mul_poly(suffix)
                if pg and pref_parity % 2:
                    term = -term
                out = out + term.map_coeffs(lambda p: p * coeff)
            pref_parity += par[h]
    return out


def _bracket_symbol_left(ctx: BaseBracket, sym, B: DiffPoly) -> LambdaPoly:
    """{d^n g _l B} = (-l)^n {g_l B}."""
    g, n = sym
    lp = _bracket_gen_left(ctx, g, B)
    if n:
        lp = lp.shift_lambda(n, sign=-1)
    return lp


def _bracket_mono_symbol(ctx: BaseBracket, mB, sym) -> LambdaPoly:
    """{mB_mu s} for a monomial mB on the left and a single symbol s."""
    space = ctx.space
    if len(mB) == 0:
        return LambdaPoly(space)
    target = DiffPoly(space, {(sym,): Scalar.of(1)})
    if len(mB) == 1:
        return _bracket_symbol_left(ctx, mB[0], target)
    # flip: {mB_mu s} = -(-1)^{p(mB)p(s)} ({s_nu mB})|_{nu -> -mu-d}
    pm = mono_parity(space, mB)
    ps = space.parities[sym[0]]
    inner = _bracket_symbol_left(ctx, sym, DiffPoly(space, {mB: Scalar.of(1)}))
    flipped = _subst_minus_lambda_minus_partial(inner)
    sign = -1 if (pm * ps) % 2 == 0 else 1
    return flipped if sign > 0 else -flipped


def _bracket_mono_right_leibniz(ctx: BaseBracket, mB, mA) -> LambdaPoly:
    """{mB_mu (a1...an)} via the left Leibniz rule on the right argument."""
    space = ctx.space
    par = space.parities
    pB = mono_parity(space, mB)
    out = LambdaPoly(space)
    one = Scalar.of(1)
    pref_parity = 0
    for i, sym in enumerate(mA):
        inner = _bracket_mono_symbol(ctx, mB, sym)
        if not inner.is_zero():
            prefix = DiffPoly(space, {mA[:i]: one})
            suffix = DiffPoly(space, {mA[i + 1 :]: one})
            term = inner.mul_poly(prefix, left=True).mul_poly(suffix)
            if pB and pref_parity % 2:
                term = -term
            out = out + term
        pref_parity += par[sym[0]]
    return out


def lambda_bracket(ctx: BaseBracket, A: DiffPoly, B: DiffPoly) -> LambdaPoly:
    """{A_l B} over the base bracket ``ctx``."""
    if A.space != ctx.space or B.space != ctx.space:
        raise MixedSpaces("bracket arguments must live over the base bracket's space")
    space = ctx.space
    out = LambdaPoly(space)
    for mA, cA in A.terms.items():
        if len(mA) == 0:
            continue
        if len(mA) == 1:
            lp = _bracket_symbol_left(ctx, mA[0], B)
            out = out + lp.map_coeffs(lambda p: p * cA)
            continue
        # composite left argument: flip via skewsymmetry, per B-monomial
        pA = mono_parity(space, mA)
        for mB, cB in B.terms.items():
            if len(mB) == 0:
                continue
            inner = _bracket_mono_right_leibniz(ctx, mB, mA)
            if inner.is_zero():
                continue
            flipped = _subst_minus_lambda_minus_partial(inner)
            pB = mono_parity(space, mB)
            sign = -1 if (pA * pB) % 2 == 0 else 1
            c = cA * cB
            if sign < 0:
                c = -c
            out = out + flipped.map_coeffs(lambda p: p * c)
    return out


# ---------------------------------------------------------------------------
# axiom checks
# ---------------------------------------------------------------------------


def skew_defect(ctx: BaseBracket, A: DiffPoly, B: DiffPoly) -> LambdaPoly:
    """{A_l B} + (-1)^{p(A)p(B)} {B_{-l-d} A}; zero iff skewsymmetry holds."""
    pA, pB = A.parity(), B.parity()
    if pA is None or pB is None:
        raise ValueError("skew check needs parity-homogeneous arguments")
    ab = lambda_bracket(ctx, A, B)
    ba = _subst_minus_lambda_minus_partial(lambda_bracket(ctx, B, A))
    if (pA * pB) % 2:
        return ab - ba
    return ab + ba


def jacobi_defect(ctx: BaseBracket, A: DiffPoly, B: DiffPoly, C: DiffPoly):
    """Two-variable Jacobi defect, as a map (l-degree, mu-degree) -> DiffPoly.

    {A_l {B_mu C}} - (-1)^{p(A)p(B)} {B_mu {A_l C}} - {{A_l B}_{l+mu} C}.
    """
    pA, pB = A.parity(), B.parity()
    if pA is None or pB is None:
        raise ValueError("Jacobi check needs parity-homogeneous A, B")
    space = ctx.space
    acc: dict[tuple[int, int], DiffPoly] = {}

    def put(l, m, poly):
        if not poly:
            return
        key = (l, m)
        s = acc.get(key)
        s = poly if s is None else s + poly
        if s:
            acc[key] = s
        else:
            acc.pop(key, None)

    bc = lambda_bracket(ctx, B, C)
    for m, poly in bc.coeffs.items():
        outer = lambda_bracket(ctx, A, poly)
        for l, q in outer.coeffs.items():
            put(l, m, q)

    sign = -1 if (pA * pB) % 2 == 0 else 1  # minus the Koszul-signed term
    ac = lambda_bracket(ctx, A, C)
    for l, poly in ac.coeffs.items():
        outer = lambda_bracket(ctx, B, poly)
        for m, q in outer.coeffs.items():
            put(l, m, q * Fraction(sign))

    ab = lambda_bracket(ctx, A, B)
    for n, poly in ab.coeffs.items():
        outer = lambda_bracket(ctx, poly, C)
        for r, q in outer.coeffs.items():
            # q * (l+mu)^r * l^n
            for j in range(r + 1):
                put(n + j, r - j, q * Fraction(-comb(r, j)))
    return acc


def check_skewsymmetry(ctx: BaseBracket, samples) -> list:
    """Return a list of (A, B, defect) for violating sample pairs."""
    bad = []
    for A, B in samples:
        d = skew_defect(ctx, A, B)
        if not d.is_zero():
            bad.append((A, B, d))
    return bad


def check_jacobi(ctx: BaseBracket, samples) -> list:
    """Return a list of (A, B, C, defect) for violating sample triples."""
    bad = []
    for A, B, C in samples:
        d = jacobi_defect(ctx, A, B, C)
        if d:
            bad.append((A, B, C, d))
    return bad


def conformal_weight(delta, A: DiffPoly):
    """Common conformal weight of A's monomials or the string 'inhomogeneous'."""
    w = A.weight(delta)
    return w if w is not None else "inhomogeneous"

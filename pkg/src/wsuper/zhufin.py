"""Finite W-superalgebras via the finitization of the affine picture.

The projection p sends every symbol with derivative order >= 1 to zero
and keeps order-0 symbols; finite Poisson brackets are computed through
the affine engine by {p(w1), p(w2)} = p({w1_l w2}|_{l=0}), so no second
bracket implementation (and no second sign-convention surface) exists.
"""

from __future__ import annotations

from fractions import Fraction

from .diffpoly import DiffPoly
from .errors import NoLift
from .lambdabracket import lambda_bracket
from .scalar import Scalar
from .superalgebra import LieSuperalgebra
from .wred import GeneratorFamily, ReductionContext, WElement, w_bracket

__all__ = [
    "zhu_project",
    "express_finite",
    "ZhuContext",
    "finite_minimal_generators",
    "check_zhu_current",
    "finite_ad",
]


def zhu_project(A: DiffPoly) -> DiffPoly:
    """Kill every monomial containing a derivative symbol."""
    terms = {
        m: c for m, c in A.terms.items() if all(n == 0 for _, n in m)
    }
    return DiffPoly(A.space, terms)


class ZhuContext:
    """Registry of finite W-elements together with their affine lifts."""

    def __init__(self, ctx: ReductionContext):
        self.ctx = ctx
        self._lifts = {}  # finite DiffPoly -> certified affine WElement
        self.labels = {}  # label -> finite DiffPoly

    def register(self, finite: DiffPoly, lift: WElement, label=None):
        self._lifts[finite] = lift
        if label is not None:
            self.labels[label] = finite
        return finite

    def register_family(self, family: GeneratorFamily):
        for lab, _, _, elem in family.entries:
            self.register(zhu_project(elem.poly), elem, label=lab)

    def lift(self, finite: DiffPoly) -> WElement:
        try:
            return self._lifts[finite]
        except KeyError:
            raise NoLift("finite element has no registered affine lift")

    def finite_bracket(self, w1: DiffPoly, w2: DiffPoly) -> DiffPoly:
        """{p(w1), p(w2)} = p({w1_l w2}|_{l=0}) through registered lifts."""
        a, b = self.lift(w1), self.lift(w2)
        lp = w_bracket(self.ctx, a, b)
        return zhu_project(lp.at_lambda_zero())


def finite_minimal_generators(ctx: ReductionContext) -> dict:
    """The closed finite generators for a minimal nilpotent.

    Returns {"v": [(lead, poly)], "w": [(lead, poly)], "f": poly}; the v-
    and w-families are the derivative-free parts of the affine formulas,
    and the f-generator is the reduced image of -(1/2k) sum u^a u_a.
    """
    alg = ctx.alg
    md = alg.minimal_data()
    out = {"v": [], "w": [], "f": None}
    for v in (u for u in alg.centralizer() if alg.weight_of(u) == 0):
        acc = ctx.poly(v)
        for z, zs in zip(md.z, md.z_star):
            acc = acc - ctx.poly(zs) * ctx.poly(alg.bracket(z, v)) * Fraction(1, 2)
        out["v"].append((v, ctx.reduce(acc)))
    for w in (u for u in alg.centralizer() if alg.weight_of(u) == Fraction(-1, 2)):
        acc = ctx.poly(w)
        for z, zs in zip(md.z, md.z_star):
            acc = acc - ctx.poly(zs) * ctx.poly(alg.bracket(z, w))
        for za, zsa in zip(md.z, md.z_star):
            for zb, zsb in zip(md.z, md.z_star):
                inner = alg.bracket(zb, alg.bracket(za, w))
                if any(inner):
                    acc = acc + ctx.poly(zsa) * ctx.poly(zsb) * ctx.poly(inner) * Fraction(1, 3)
        out["w"].append((w, ctx.reduce(acc)))
    duals = alg.dual_bases()
    acc = DiffPoly(ctx.space)
    half_inv_k = Scalar.of(Fraction(-1, 2)) / ctx.k
    for a in range(alg.dim):
        acc = acc + ctx.poly(duals.upper[a]) * ctx.poly(alg.unit(a)) * half_inv_k
    out["f"] = ctx.reduce(acc)
    return out


def express_finite(ctx: ReductionContext, family: GeneratorFamily, A: DiffPoly) -> DiffPoly:
    """Rewrite a derivative-free reduced element as a polynomial in the
    finite images of the family's generators (fixed rational k)."""
    from . import linalg
    from .errors import NoSolution, NotTriangular
    from .wred import _enumerate_monomials

    if ctx.k_value is None:
        raise NotTriangular("express_finite needs a fixed rational k")
    lspace = family.label_space
    if A.is_zero():
        return DiffPoly(lspace)
    finite = [zhu_project(elem.poly) for _, _, _, elem in family.entries]

    comps = {}
    cdelta = ctx.delta()
    for mono, coeff in A.terms.items():
        w = sum((cdelta[g] + n for g, n in mono), Fraction(0))
        p = sum(ctx.space.parities[g] for g, _ in mono) % 2
        comps.setdefault((w, p), DiffPoly(ctx.space))
        comps[(w, p)] = comps[(w, p)] + DiffPoly(ctx.space, {mono: coeff})

    out = DiffPoly(lspace)
    for (w, p), target in comps.items():
        candidates = _enumerate_monomials(lspace, family.label_delta, w, p, max_order=0)
        if not candidates:
            raise NoSolution(f"no finite generator monomials of weight {w}")
        evals = []
        for m in candidates:
            acc = DiffPoly.one(ctx.space)
            for g, _ in m:
                acc = acc * finite[g]
            evals.append(acc)
        all_monos = sorted({mm for ev in evals for mm in ev.terms} | set(target.terms))
        mono_idx = {mm: i for i, mm in enumerate(all_monos)}
        mat = [[Fraction(0)] * len(candidates) for _ in all_monos]
        for c, ev in enumerate(evals):
            for mm, cc in ev.terms.items():
                mat[mono_idx[mm]][c] = cc.as_fraction()
        rhs = [Fraction(0)] * len(all_monos)
        for mm, cc in target.terms.items():
            rhs[mono_idx[mm]] = cc.as_fraction()
        sol = linalg.solve(mat, rhs)
        if sol is None:
            raise NoSolution(
                f"finite element of weight {w} is not a polynomial in the generators"
            )
        for c, val in enumerate(sol):
            if val:
                out = out + DiffPoly(lspace, {candidates[c]: Scalar.of(val)})
    return out


def finite_ad(ctx: ReductionContext, n_vec, psi: DiffPoly) -> DiffPoly:
    """Adjoint action of n on a derivative-free reduced element."""
    lp = ctx.ad_lambda(n_vec, psi)
    return zhu_project(lp.at_lambda_zero())


def check_zhu_current(alg: LieSuperalgebra, k="symbolic"):
    """The twisted current bracket {a,b} = [a,b] - j_a k(a|b) is taken to
    {v_a, v_b} = v_[a,b] by v_a = a - k(x|a); checked on all basis pairs.

    Vectors with a constant term are represented as (coeff vector, Scalar).
    """
    kk = Scalar.k() if k in ("symbolic", None) else Scalar.of(Fraction(k))
    report = []
    for a in range(alg.dim):
        for b in range(alg.dim):
            ua, ub = alg.unit(a), alg.unit(b)
            br = alg.bracket(ua, ub)
            # {v_a, v_b} = {a, b} = [a,b] - j_a k (a|b)
            got_vec = br
            got_c = -(kk * Scalar.of(alg.grading[a] * alg.form_value(ua, ub)))
            # v_[a,b] = [a,b] - k(x|[a,b])
            want_vec = br
            want_c = -(kk * Scalar.of(alg.form_value(alg.x, br)))
            ok = got_vec == want_vec and got_c == want_c
            report.append(
                (f"{{v_{alg.names[a]}, v_{alg.names[b]}}} = v_[.,.]", ok,
                 (got_c - want_c))
            )
    return report

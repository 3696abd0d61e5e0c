"""BRST complex for Hamiltonian reduction: currents, charged and neutral
free fermions, the differential element d, the energy-momentum field, and
the building blocks J_a and K_a, together with identity checkers.

Generators of the complex over a Lie superalgebra with basis {u_a}:
currents u_a (all a), charged fermions phi_<name> / phiU_<name> for basis
elements of n = (+)_{i>0} g(i) (parity flipped), and neutral fermions
Phi_<name> for basis elements of g(1/2) (parity kept).  The base bracket
is [a_l b] = [a,b] + kl(a|b) on currents, [phi_a l phiU^b] = (a|b) on
charged fermions, [Phi_c1 l Phi_c2] = (f|[c1,c2]) on neutral fermions,
and zero across kinds.
"""

from __future__ import annotations

from fractions import Fraction

from . import linalg
from .diffpoly import DiffPoly, GenSpace
from .errors import NoSolution
from .lambdabracket import BaseBracket, LambdaPoly, lambda_bracket
from .scalar import Scalar
from .superalgebra import LieSuperalgebra

__all__ = [
    "BrstSpace",
    "BrstElements",
    "build_brst",
    "apply_d0",
    "check_d_squared",
    "check_lemma_formulas",
    "check_K_brackets",
    "check_L_action",
    "check_J_closure",
    "check_dJ_formula",
]


class BrstSpace:
    """Generator space and base bracket of the complex."""

    def __init__(self, alg: LieSuperalgebra, k="symbolic"):
        self.alg = alg
        if k == "symbolic" or k is None:
            self.k = Scalar.k()
            self.k_value = None
        else:
            self.k_value = Fraction(k)
            self.k = Scalar.of(self.k_value)

        n = alg.dim
        self.S = [a for a in range(n) if alg.grading[a] > 0]
        self.S_half = [a for a in range(n) if alg.grading[a] == Fraction(1, 2)]
        names = list(alg.names)
        parities = list(alg.parities)
        self.cur = list(range(n))
        self.phl = {}
        self.phu = {}
        self.phn = {}
        for a in self.S:
            self.phl[a] = len(names)
            names.append(f"phi_{alg.names[a]}")
            parities.append((alg.parities[a] + 1) % 2)
        for a in self.S:
            self.phu[a] = len(names)
            names.append(f"phiU_{alg.names[a]}")
            parities.append((alg.parities[a] + 1) % 2)
        for a in self.S_half:
            self.phn[a] = len(names)
            names.append(f"Phi_{alg.names[a]}")
            parities.append(alg.parities[a])
        self.space = GenSpace(names, parities)
        self.duals = alg.dual_bases()

        table = {}
        for i in range(n):
            for j in range(n):
                coeffs = {}
                br = alg.bracket(alg.unit(i), alg.unit(j))
                if any(br):
                    coeffs[0] = self.cur_poly(br)
                fv = alg.form_value(alg.unit(i), alg.unit(j))
                if fv:
                    coeffs[1] = DiffPoly.const(self.space, self.k * Scalar.of(fv))
                if coeffs:
                    table[(i, j)] = LambdaPoly(self.space, coeffs)
        for a in self.S:
            # (u_a | u^a) = 1 by duality
            table[(self.phl[a], self.phu[a])] = LambdaPoly.of(
                DiffPoly.one(self.space)
            )
        for a in self.S_half:
            for b in self.S_half:
                fv = alg.form_value(alg.f, alg.bracket(alg.unit(a), alg.unit(b)))
                if fv:
                    table[(self.phn[a], self.phn[b])] = LambdaPoly.of(
                        DiffPoly.const(self.space, fv)
                    )
        self.base = BaseBracket(self.space, table, complete=True)

    # -- linear maps from algebra vectors into the complex -------------------

    def cur_poly(self, vec, order: int = 0) -> DiffPoly:
        terms = {}
        for i, c in enumerate(vec):
            if c:
                terms[((i, order),)] = Scalar.of(c)
        return DiffPoly(self.space, terms)

    def phi_lower(self, vec) -> DiffPoly:
        """phi of the projection of ``vec`` onto n."""
        terms = {}
        for a in self.S:
            if vec[a]:
                terms[((self.phl[a], 0),)] = Scalar.of(vec[a])
        return DiffPoly(self.space, terms)

    def phi_upper(self, vec) -> DiffPoly:
        """phiU^a = sum_(b in S) (u_b|a) phiU^b."""
        terms = {}
        for a in self.S:
            c = self.alg.form_value(self.alg.unit(a), vec)
            if c:
                terms[((self.phu[a], 0),)] = Scalar.of(c)
        return DiffPoly(self.space, terms)

    def phi_neutral(self, vec) -> DiffPoly:
        """Phi of the projection of ``vec`` onto g(1/2)."""
        terms = {}
        for a in self.S_half:
            if vec[a]:
                terms[((self.phn[a], 0),)] = Scalar.of(vec[a])
        return DiffPoly(self.space, terms)

    def gen(self, idx, order: int = 0) -> DiffPoly:
        return DiffPoly.gen(self.space, idx, order)


class BrstElements:
    """d, the energy-momentum pieces, and the J/K building blocks."""

    def __init__(self, d, L_g, L_ch, L_ne, J, K):
        self.d = d
        self.L_g = L_g
        self.L_ch = L_ch
        self.L_ne = L_ne
        self.L = L_g + L_ch + L_ne
        self.J = J
        self.K = K


def _sign(p: int) -> Fraction:
    return Fraction(-1 if p % 2 else 1)


def build_brst(alg: LieSuperalgebra, k="symbolic"):
    bs = BrstSpace(alg, k)
    sp = bs.space

    d = DiffPoly(sp)
    for a in bs.S:
        s = _sign(alg.parities[a])
        d = d + bs.gen(bs.phu[a]) * bs.gen(a) * s
    for a in bs.S_half:
        d = d + bs.gen(bs.phu[a]) * bs.gen(bs.phn[a])
    d = d + bs.phi_upper(alg.f)
    for a in bs.S:
        for b in bs.S:
            br = alg.bracket(alg.unit(b), alg.unit(a))
            lower = bs.phi_lower(br)
            if lower:
                s = _sign(alg.parities[a]) * Fraction(1, 2)
                d = d + bs.gen(bs.phu[a]) * bs.gen(bs.phu[b]) * lower * s

    half_inv_k = Scalar.of(Fraction(1, 2)) / bs.k
    L_g = DiffPoly(sp)
    for a in range(alg.dim):
        L_g = L_g + bs.cur_poly(bs.duals.upper[a]) * bs.gen(a) * half_inv_k
    L_g = L_g + bs.cur_poly(alg.x, order=1)

    L_ch = DiffPoly(sp)
    for a in bs.S:
        j = alg.grading[a]
        if j:
            L_ch = L_ch - bs.gen(bs.phu[a]) * bs.gen(bs.phl[a], 1) * j
        if 1 - j:
            L_ch = L_ch + bs.gen(bs.phu[a], 1) * bs.gen(bs.phl[a]) * (1 - j)

    # neutral duals: v^b in g(1/2) with (f|[u_a, v^b]) = delta_ab
    L_ne = DiffPoly(sp)
    if bs.S_half:
        m = [
            [alg.form_value(alg.f, alg.bracket(alg.unit(a), alg.unit(g)))
             for g in bs.S_half]
            for a in bs.S_half
        ]
        inv = linalg.invert(m)
        if inv is None:
            raise NoSolution("neutral fermion pairing is degenerate")
        for bi, b in enumerate(bs.S_half):
            v_up = DiffPoly(sp)
            for gi, g in enumerate(bs.S_half):
                if inv[gi][bi]:
                    v_up = v_up + bs.gen(bs.phn[g], 1) * inv[gi][bi]
            L_ne = L_ne + v_up * bs.gen(bs.phn[b]) * Fraction(1, 2)

    J = {}
    for a in range(alg.dim):
        J[a] = _J_of(bs, alg.unit(a))
    K = {}
    for a in range(alg.dim):
        if alg.grading[a] <= 1:
            K[a] = _K_of(bs, alg.unit(a))

    return bs, BrstElements(d, L_g, L_ch, L_ne, J, K)


def _J_of(bs: BrstSpace, vec) -> DiffPoly:
    alg = bs.alg
    out = bs.cur_poly(vec)
    for a in bs.S:
        lower = bs.phi_lower(alg.bracket(alg.unit(a), vec))
        if lower:
            out = out + bs.gen(bs.phu[a]) * lower
    return out


def _K_of(bs: BrstSpace, vec) -> DiffPoly:
    """K_a = J of the (<=0)-part of a, minus s(a) Phi_a, minus (a|f)."""
    alg = bs.alg
    low = [c if alg.grading[i] <= 0 else Fraction(0) for i, c in enumerate(vec)]
    out = _J_of(bs, low)
    p = alg.parity_of(vec)
    neutral = bs.phi_neutral(vec)
    if neutral:
        out = out - neutral * _sign(p or 0)
    fv = alg.form_value(vec, alg.f)
    if fv:
        out = out - DiffPoly.const(bs.space, fv)
    return out


def apply_d0(bs: BrstSpace, el: BrstElements, A: DiffPoly) -> DiffPoly:
    return lambda_bracket(bs.base, el.d, A).at_lambda_zero()


# ---------------------------------------------------------------------------
# identity checkers; each returns a list of (name, ok, residual)
# ---------------------------------------------------------------------------


def check_d_squared(bs: BrstSpace, el: BrstElements):
    report = []
    dd = lambda_bracket(bs.base, el.d, el.d)
    report.append(("{d_l d} = 0", dd.is_zero(), dd))
    for g in range(len(bs.space)):
        sq = apply_d0(bs, el, apply_d0(bs, el, bs.gen(g)))
        report.append(
            (f"d0^2({bs.space.names[g]}) = 0", sq.is_zero(), sq)
        )
    return report


def check_lemma_formulas(bs: BrstSpace, el: BrstElements):
    """The four closed formulas for {d_l .} on each kind of generator."""
    alg = bs.alg
    sp = bs.space
    report = []
    for a in range(alg.dim):
        got = lambda_bracket(bs.base, el.d, bs.gen(a))
        want = LambdaPoly(sp)
        for b in bs.S:
            br = alg.bracket(alg.unit(b), alg.unit(a))
            if any(br):
                want = want + LambdaPoly.of(
                    bs.gen(bs.phu[b]) * bs.cur_poly(br) * _sign(alg.parities[b])
                )
        up = bs.phi_upper(alg.unit(a))
        if up:
            c = bs.k * Scalar.of(_sign(alg.parities[a]))
            want = want + LambdaPoly(sp, {0: up.partial() * c, 1: up * c})
        report.append((f"{{d_l {alg.names[a]}}}", got == want, got - want))
    for a in bs.S:
        got = lambda_bracket(bs.base, el.d, bs.gen(bs.phl[a]))
        u = alg.unit(a)
        want = bs.cur_poly(u)
        fv = alg.form_value(u, alg.f)
        if fv:
            want = want + DiffPoly.const(sp, fv)
        want = want + bs.phi_neutral(u) * _sign(alg.parities[a])
        for b in bs.S:
            lower = bs.phi_lower(alg.bracket(alg.unit(b), u))
            if lower:
                want = want + bs.gen(bs.phu[b]) * lower
        report.append(
            (f"{{d_l phi_{alg.names[a]}}}", got == LambdaPoly.of(want),
             got - LambdaPoly.of(want))
        )
    for a in bs.S:
        got = lambda_bracket(bs.base, el.d, bs.gen(bs.phu[a]))
        want = DiffPoly(sp)
        for b in bs.S:
            up = bs.phi_upper(alg.bracket(alg.unit(b), bs.duals.upper[a]))
            if up:
                want = want + bs.gen(bs.phu[b]) * up * (
                    _sign(alg.parities[b]) * Fraction(1, 2)
                )
        report.append(
            (f"{{d_l phiU_{alg.names[a]}}}", got == LambdaPoly.of(want),
             got - LambdaPoly.of(want))
        )
    for a in bs.S_half:
        got = lambda_bracket(bs.base, el.d, bs.gen(bs.phn[a]))
        want = bs.phi_upper(alg.bracket(alg.unit(a), alg.f))
        report.append(
            (f"{{d_l Phi_{alg.names[a]}}}", got == LambdaPoly.of(want),
             got - LambdaPoly.of(want))
        )
    return report


def check_K_brackets(bs: BrstSpace, el: BrstElements):
    """Case split for {K_a l K_b} over basis pairs of (+)_{i<=1} g(i)."""
    alg = bs.alg
    sp = bs.space
    report = []
    idx = sorted(el.K)
    for a in idx:
        for b in idx:
            got = lambda_bracket(bs.base, el.K[a], el.K[b])
            ja, jb = alg.grading[a], alg.grading[b]
            if ja <= 0 and jb <= 0:
                want = LambdaPoly.of(
                    _K_of(bs, alg.bracket(alg.unit(a), alg.unit(b)))
                )
                fv = alg.form_value(alg.unit(a), alg.unit(b))
                if fv:
                    want = want + LambdaPoly(
                        sp, {1: DiffPoly.const(sp, bs.k * Scalar.of(fv))}
                    )
                case = "low-low"
            elif ja == Fraction(1, 2) and jb == Fraction(1, 2):
                fv = alg.form_value(alg.bracket(alg.unit(a), alg.unit(b)), alg.f)
                want = LambdaPoly.of(DiffPoly.const(sp, fv)) if fv else LambdaPoly(sp)
                case = "half-half"
            else:
                want = LambdaPoly(sp)
                case = "otherwise"
            report.append(
                (f"{{K_{alg.names[a]} l K_{alg.names[b]}}} [{case}]",
                 got == want, got - want)
            )
    return report


def check_L_action(bs: BrstSpace, el: BrstElements):
    """The displayed actions of L^g, L^ch, L^ne and the weights under L_(1)."""
    alg = bs.alg
    sp = bs.space
    report = []
    for a in range(alg.dim):
        got = lambda_bracket(bs.base, el.L_g, bs.gen(a))
        j = alg.grading[a]
        want = LambdaPoly(sp, {0: bs.gen(a, 1), 1: bs.gen(a) * (1 - j)})
        fv = alg.form_value(alg.x, alg.unit(a))
        if fv:
            want = want + LambdaPoly(
                sp, {2: DiffPoly.const(sp, -(bs.k * Scalar.of(fv)))}
            )
        report.append((f"{{Lg_l {alg.names[a]}}}", got == want, got - want))
    for a in bs.S:
        j = alg.grading[a]
        got = lambda_bracket(bs.base, el.L_ch, bs.gen(bs.phl[a]))
        want = LambdaPoly(sp, {0: bs.gen(bs.phl[a], 1), 1: bs.gen(bs.phl[a]) * (1 - j)})
        report.append((f"{{Lch_l phi_{alg.names[a]}}}", got == want, got - want))
        got = lambda_bracket(bs.base, el.L_ch, bs.gen(bs.phu[a]))
        want = LambdaPoly(sp, {0: bs.gen(bs.phu[a], 1), 1: bs.gen(bs.phu[a]) * j})
        report.append((f"{{Lch_l phiU_{alg.names[a]}}}", got == want, got - want))
    for a in bs.S_half:
        got = lambda_bracket(bs.base, el.L_ne, bs.gen(bs.phn[a]))
        want = LambdaPoly(
            sp, {0: bs.gen(bs.phn[a], 1), 1: bs.gen(bs.phn[a]) * Fraction(1, 2)}
        )
        report.append((f"{{Lne_l Phi_{alg.names[a]}}}", got == want, got - want))
    # conformal weights via H = L_(1)
    for g in range(len(sp)):
        got = lambda_bracket(bs.base, el.L, bs.gen(g)).get(1)
        want = bs.gen(g) * _delta_of(bs, g)
        report.append(
            (f"weight({sp.names[g]}) = {_delta_of(bs, g)}", got == want, got - want)
        )
    return report


def _delta_of(bs: BrstSpace, g: int) -> Fraction:
    alg = bs.alg
    if g < alg.dim:
        return Fraction(1) - alg.grading[g]
    for a in bs.S:
        if bs.phl[a] == g:
            return Fraction(1) - alg.grading[a]
        if bs.phu[a] == g:
            return Fraction(alg.grading[a])
    return Fraction(1, 2)


def check_J_closure(bs: BrstSpace, el: BrstElements):
    """{J_a l J_b} = J_[a,b] + kl(a|b) when a, b are both in the
    nonnegative or both in the nonpositive part of the grading."""
    alg = bs.alg
    sp = bs.space
    report = []
    for a in range(alg.dim):
        for b in range(alg.dim):
            ja, jb = alg.grading[a], alg.grading[b]
            if not ((ja >= 0 and jb >= 0) or (ja <= 0 and jb <= 0)):
                continue
            got = lambda_bracket(bs.base, el.J[a], el.J[b])
            want = LambdaPoly.of(_J_of(bs, alg.bracket(alg.unit(a), alg.unit(b))))
            fv = alg.form_value(alg.unit(a), alg.unit(b))
            if fv:
                want = want + LambdaPoly(
                    sp, {1: DiffPoly.const(sp, bs.k * Scalar.of(fv))}
                )
            report.append(
                (f"{{J_{alg.names[a]} l J_{alg.names[b]}}}", got == want, got - want)
            )
    return report


def check_dJ_formula(bs: BrstSpace, el: BrstElements):
    """d0(J_a) = sum s(u_b) phiU^b K_[u_b,a] + sum k s(u_b)(u_b|a) d(phiU^b)."""
    alg = bs.alg
    report = []
    for a in range(alg.dim):
        got = apply_d0(bs, el, el.J[a])
        want = DiffPoly(bs.space)
        for b in bs.S:
            br = alg.bracket(alg.unit(b), alg.unit(a))
            if any(br):
                want = want + bs.gen(bs.phu[b]) * _K_of(bs, br) * _sign(
                    alg.parities[b]
                )
            fv = alg.form_value(alg.unit(b), alg.unit(a))
            if fv:
                want = want + bs.gen(bs.phu[b], 1) * (
                    bs.k * Scalar.of(_sign(alg.parities[b]) * fv)
                )
        report.append((f"d0(J_{alg.names[a]})", got == want, got - want))
    return report

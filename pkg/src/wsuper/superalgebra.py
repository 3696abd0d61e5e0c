"""Finite-dimensional Lie superalgebras from exact structure constants.

An algebra is stored as a basis with parities, a full bracket table of
rational structure constants, a supersymmetric invariant bilinear form,
an even sl2-triple (e, x, f) with (e|f) = 2(x|x) = 1, and the ad-x
half-integer grading.  Built-in examples are derived from explicit
supermatrix realizations so the structure constants are computed, not
transcribed.
"""

from __future__ import annotations

import json
from fractions import Fraction

from . import linalg
from .diffpoly import GenSpace
from .errors import (
    AxiomViolation,
    DegenerateForm,
    GradingError,
    NotMinimal,
    ParseError,
    UnknownBuiltin,
)

__all__ = ["LieSuperalgebra", "load_algebra", "builtin", "MinimalData", "DualBases"]


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise ParseError(f"expected rational, got {x!r}")


class DualBases:
    """Dual basis vectors: (u_alpha | u^beta) = delta_{alpha beta}."""

    __slots__ = ("upper",)

    def __init__(self, upper):
        self.upper = upper  # list of coefficient vectors


class MinimalData:
    """Basis {z_a} of g(1/2) with dual {z*_a}: [z_a, z*_b] = -delta_{ab} e."""

    __slots__ = ("z", "z_star")

    def __init__(self, z, z_star):
        self.z = z          # list of coefficient vectors
        self.z_star = z_star


class LieSuperalgebra:
    """Immutable validated Lie superalgebra with sl2 data and grading."""

    def __init__(self, name, names, parities, bracket, form, e, x, f, grading):
        self.name = name
        self.names = tuple(names)
        self.parities = tuple(int(p) % 2 for p in parities)
        self.dim = len(self.names)
        self.bracket_table = bracket   # dict (i,j) -> dict {l: Fraction}
        self.form = form               # dim x dim Fraction matrix
        self.e = list(e)               # coefficient vectors over the basis
        self.x = list(x)
        self.f = list(f)
        self.grading = list(grading)   # Fraction per basis index
        self._space = GenSpace(self.names, self.parities)

    # -- basic linear helpers ------------------------------------------------

    def space(self) -> GenSpace:
        return self._space

    def unit(self, i) -> list:
        v = [Fraction(0)] * self.dim
        v[i if isinstance(i, int) else self.names.index(i)] = Fraction(1)
        return v

    def vector(self, combo: dict) -> list:
        """Coefficient vector from a {name: rational} mapping."""
        v = [Fraction(0)] * self.dim
        for nm, c in combo.items():
            v[self.names.index(nm)] = _frac(c)
        return v

    def parity_of(self, vec):
        ps = {self.parities[i] for i, c in enumerate(vec) if c}
        if not ps:
            return 0
        if len(ps) > 1:
            return None
        return ps.pop()

    def bracket(self, a, b) -> list:
        """[a, b] for coefficient vectors a, b."""
        out = [Fraction(0)] * self.dim
        for i, ca in enumerate(a):
            if not ca:
                continue
            for j, cb in enumerate(b):
                if not cb:
                    continue
                entry = self.bracket_table.get((i, j))
                if entry:
                    for l, c in entry.items():
                        out[l] += ca * cb * c
        return out

    def form_value(self, a, b) -> Fraction:
        total = Fraction(0)
        for i, ca in enumerate(a):
            if not ca:
                continue
            for j, cb in enumerate(b):
                if cb:
                    total += ca * cb * self.form[i][j]
        return total

    def grading_component(self, i) -> list:
        j = _frac(i)
        return [a for a in range(self.dim) if self.grading[a] == j]

    def weight_of(self, vec):
        ws = {self.grading[i] for i, c in enumerate(vec) if c}
        if not ws:
            return None
        if len(ws) > 1:
            return None
        return ws.pop()

    # -- derived structures ----------------------------------------------------

    def dual_bases(self) -> DualBases:
        gram = [[self.form[i][j] for j in range(self.dim)] for i in range(self.dim)]
        inv = linalg.invert(gram)
        if inv is None:
            raise DegenerateForm(f"form of {self.name} is singular")
        upper = [[inv[i][b] for i in range(self.dim)] for b in range(self.dim)]
        for a in range(self.dim):
            wa = self.grading[a]
            wu = self.weight_of(upper[a])
            if wu is not None and wu != -wa:
                raise DegenerateForm(
                    f"dual of {self.names[a]} is not in weight {-wa}"
                )
        return DualBases(upper)

    def ad_matrix(self, vec):
        """Matrix of ad(vec): column a = coordinates of [vec, u_a]."""
        cols = [self.bracket(vec, self.unit(a)) for a in range(self.dim)]
        return [[cols[a][r] for a in range(self.dim)] for r in range(self.dim)]

    def centralizer(self, f_vec=None) -> list:
        """Homogeneous basis of ker(ad f), split by (weight, parity)."""
        if f_vec is None:
            f_vec = self.f
        adf = self.ad_matrix(f_vec)
        out = []
        classes = sorted(
            {(self.grading[a], self.parities[a]) for a in range(self.dim)},
            key=lambda t: (t[0], t[1]),
        )
        for w, p in classes:
            cols = [
                a
                for a in range(self.dim)
                if self.grading[a] == w and self.parities[a] == p
            ]
            if not cols:
                continue
            sub = [[adf[r][a] for a in cols] for r in range(self.dim)]
            for ns in linalg.nullspace(sub):
                v = [Fraction(0)] * self.dim
                for c, a in zip(ns, cols):
                    v[a] = c
                out.append(v)
        return out

    def projection_sharp(self, v) -> list:
        """Component of v in g_f(0) along the splitting g = g_f + [e, g]."""
        gf = self.centralizer()
        ade_cols = [self.bracket(self.e, self.unit(a)) for a in range(self.dim)]
        mat = [
            [u[r] for u in gf] + [ade_cols[a][r] for a in range(self.dim)]
            for r in range(self.dim)
        ]
        sol = linalg.solve(mat, v)
        if sol is None:
            raise AxiomViolation("g != g_f + [e, g]; sl2 decomposition failed")
        out = [Fraction(0)] * self.dim
        for c, u in zip(sol[: len(gf)], gf):
            if self.weight_of(u) == 0:
                for r in range(self.dim):
                    out[r] += c * u[r]
        return out

    def is_minimal(self) -> bool:
        if any(abs(j) > 1 for j in self.grading):
            return False
        g1 = self.grading_component(1)
        gm1 = self.grading_component(-1)
        if len(g1) != 1 or len(gm1) != 1:
            return False
        e_support = [i for i, c in enumerate(self.e) if c]
        f_support = [i for i, c in enumerate(self.f) if c]
        return e_support == g1 and f_support == gm1

    def minimal_data(self) -> MinimalData:
        if not self.is_minimal():
            raise NotMinimal(f"{self.name}: f is not a minimal nilpotent")
        half = self.grading_component(Fraction(1, 2))
        z = [self.unit(a) for a in half]
        if not half:
            return MinimalData([], [])
        (e_idx,) = self.grading_component(1)
        e_coeff = self.e[e_idx]
        pairing = [
            [self.bracket(self.unit(a), self.unit(b))[e_idx] / e_coeff for b in half]
            for a in half
        ]
        inv = linalg.invert(pairing)
        if inv is None:
            raise NotMinimal("pairing [z_a, -] on g(1/2) is degenerate")
        z_star = []
        for b in range(len(half)):
            v = [Fraction(0)] * self.dim
            for g in range(len(half)):
                v[half[g]] += -inv[g][b]
            z_star.append(v)
        return MinimalData(z, z_star)

    # -- validation ----------------------------------------------------------

    def validate(self):
        n = self.dim
        par = self.parities

        def brk(i, j):
            return self.bracket_table.get((i, j), {})

        # parity closure and skewsymmetry
        for i in range(n):
            for j in range(n):
                for l, c in brk(i, j).items():
                    if c and par[l] != (par[i] + par[j]) % 2:
                        raise AxiomViolation(
                            f"parity: [{self.names[i]},{self.names[j]}] has "
                            f"{self.names[l]}-component of wrong parity"
                        )
                sign = -1 if (par[i] * par[j]) % 2 == 0 else 1
                lhs = brk(j, i)
                rhs = brk(i, j)
                for l in set(lhs) | set(rhs):
                    if lhs.get(l, Fraction(0)) != sign * rhs.get(l, Fraction(0)):
                        raise AxiomViolation(
                            f"skewsymmetry fails on ({self.names[i]},{self.names[j]})"
                        )
        # Jacobi
        for i in range(n):
            ui = self.unit(i)
            for j in range(n):
                uj = self.unit(j)
                sign = (-1) ** (par[i] * par[j])
                bij = self.bracket(ui, uj)
                for l in range(n):
                    ul = self.unit(l)
                    lhs = self.bracket(ui, self.bracket(uj, ul))
                    rhs = self.bracket(bij, ul)
                    mid = self.bracket(uj, self.bracket(ui, ul))
                    for r in range(n):
                        if lhs[r] != rhs[r] + sign * mid[r]:
                            raise AxiomViolation(
                                f"Jacobi fails on ({self.names[i]},{self.names[j]},{self.names[l]})"
                            )
        # form: supersymmetry, parity-evenness, invariance
        for i in range(n):
            for j in range(n):
                sign = (-1) ** (par[i] * par[j])
                if self.form[i][j] != sign * self.form[j][i]:
                    raise AxiomViolation(
                        f"form not supersymmetric on ({self.names[i]},{self.names[j]})"
                    )
        for i in range(n):
            ui = self.unit(i)
            for j in range(n):
                uj = self.unit(j)
                bij = self.bracket(ui, uj)
                for l in range(n):
                    ul = self.unit(l)
                    if self.form_value(bij, ul) != self.form_value(
                        ui, self.bracket(uj, ul)
                    ):
                        raise AxiomViolation(
                            f"form not invariant on ({self.names[i]},{self.names[j]},{self.names[l]})"
                        )
        # sl2-triple normalization
        two_x = [2 * c for c in self.x]
        checks = [
            (self.bracket(two_x, self.e), [2 * c for c in self.e], "[2x,e]=2e"),
            (self.bracket(two_x, self.f), [-2 * c for c in self.f], "[2x,f]=-2f"),
            (self.bracket(self.e, self.f), two_x, "[e,f]=2x"),
        ]
        for got, want, label in checks:
            if got != want:
                raise AxiomViolation(f"sl2 identity {label} fails")
        if self.form_value(self.e, self.f) != 1:
            raise AxiomViolation("(e|f) != 1")
        if self.form_value(self.x, self.x) != Fraction(1, 2):
            raise AxiomViolation("2(x|x) != 1")
        # grading = ad-x eigendecomposition
        adx = self.ad_matrix(self.x)
        for a in range(n):
            for r in range(n):
                want = self.grading[a] if r == a else Fraction(0)
                if adx[r][a] != want:
                    raise GradingError(
                        f"ad x is not diagonal at basis element {self.names[a]}"
                    )
        return self


# ---------------------------------------------------------------------------
# construction from structure constants
# ---------------------------------------------------------------------------


def _complete_bracket(names, parities, half):
    """Fill the other orientation of each pair by super-skewsymmetry."""
    full = {}
    for (i, j), entry in half.items():
        entry = {l: _frac(c) for l, c in entry.items() if _frac(c)}
        if (i, j) in full and full[(i, j)] != entry:
            raise AxiomViolation(f"conflicting bracket entries for ({names[i]},{names[j]})")
        full[(i, j)] = entry
    for (i, j), entry in list(full.items()):
        sign = -1 if (parities[i] * parities[j]) % 2 == 0 else 1
        flipped = {l: sign * c for l, c in entry.items()}
        if (j, i) in full:
            if full[(j, i)] != flipped:
                raise AxiomViolation(
                    f"skewsymmetry fails on ({names[i]},{names[j]})"
                )
        else:
            full[(j, i)] = flipped
    return full


def from_structure(name, gens, bracket_half, form_entries, sl2, grading=None):
    """Build and validate an algebra from one-orientation structure data."""
    names = [g[0] for g in gens]
    parities = [int(g[1]) % 2 for g in gens]
    n = len(names)
    idx = {nm: i for i, nm in enumerate(names)}

    half = {}
    for (ln, rn), terms in bracket_half.items():
        half[(idx[ln], idx[rn])] = {idx[g]: _frac(c) for g, c in terms.items()}
    full = _complete_bracket(names, parities, half)

    form = [[Fraction(0)] * n for _ in range(n)]
    for (an, bn), val in form_entries.items():
        i, j = idx[an], idx[bn]
        form[i][j] = _frac(val)
        # supersymmetry: (b|a) = (-1)^{p(a)p(b)} (a|b)
        form[j][i] = ((-1) ** (parities[i] * parities[j])) * _frac(val)

    def to_vec(spec):
        if isinstance(spec, str):
            v = [Fraction(0)] * n
            v[idx[spec]] = Fraction(1)
            return v
        v = [Fraction(0)] * n
        for nm, c in spec.items():
            v[idx[nm]] = _frac(c)
        return v

    e, x, f = (to_vec(sl2[key]) for key in ("e", "x", "f"))

    # derive grading from ad x
    tmp = LieSuperalgebra(name, names, parities, full, form, e, x, f, [0] * n)
    adx = tmp.ad_matrix(x)
    derived = []
    for a in range(n):
        for r in range(n):
            if r != a and adx[r][a]:
                raise GradingError(f"ad x not diagonal at {names[a]}")
        derived.append(adx[a][a])
    if grading is not None:
        for nm, jv in grading.items():
            if derived[idx[nm]] != _frac(jv):
                raise GradingError(f"declared grading of {nm} disagrees with ad x")
    alg = LieSuperalgebra(name, names, parities, full, form, e, x, f, derived)
    return alg.validate()


# ---------------------------------------------------------------------------
# construction from supermatrix realizations
# ---------------------------------------------------------------------------


def _mat_mul(a, b):
    n = len(a)
    return [
        [sum((a[r][t] * b[t][c] for t in range(n)), Fraction(0)) for c in range(n)]
        for r in range(n)
    ]


def _supertrace(m, row_par):
    return sum(
        (m[r][r] if row_par[r] == 0 else -m[r][r] for r in range(len(m))),
        Fraction(0),
    )


def from_matrices(name, entries, row_par, sl2, form_factor):
    """Algebra from basis supermatrices; brackets and form are computed.

    entries: list of (name, matrix); parity of each basis matrix is read
    off the block structure.  The form is form_factor * supertrace(ab).
    """
    names = [nm for nm, _ in entries]
    mats = [[[Fraction(x) for x in row] for row in m] for _, m in entries]
    n = len(names)
    size = len(mats[0])

    parities = []
    for nm, m in zip(names, mats):
        ps = {
            (row_par[r] + row_par[c]) % 2
            for r in range(size)
            for c in range(size)
            if m[r][c]
        }
        if len(ps) != 1:
            raise AxiomViolation(f"basis matrix {nm} is not parity-homogeneous")
        parities.append(ps.pop())

    flat = [[m[r][c] for r in range(size) for c in range(size)] for m in mats]
    coord_mat = [[flat[b][t] for b in range(n)] for t in range(size * size)]

    def expand(mat):
        vec = [mat[r][c] for r in range(size) for c in range(size)]
        sol = linalg.solve(coord_mat, vec)
        if sol is None:
            raise AxiomViolation(f"{name}: bracket leaves the span of the basis")
        return sol

    half = {}
    for i in range(n):
        for j in range(n):
            sign = (-1) ** (parities[i] * parities[j])
            ab = _mat_mul(mats[i], mats[j])
            ba = _mat_mul(mats[j], mats[i])
            comm = [
                [ab[r][c] - sign * ba[r][c] for c in range(size)] for r in range(size)
            ]
            coeffs = expand(comm)
            entry = {l: c for l, c in enumerate(coeffs) if c}
            if entry:
                half[(i, j)] = entry

    form = [
        [
            form_factor * _supertrace(_mat_mul(mats[i], mats[j]), row_par)
            for j in range(n)
        ]
        for i in range(n)
    ]

    idx = {nm: i for i, nm in enumerate(names)}

    def to_vec(spec):
        v = [Fraction(0)] * n
        if isinstance(spec, str):
            v[idx[spec]] = Fraction(1)
        else:
            for nm, c in spec.items():
                v[idx[nm]] = _frac(c)
        return v

    e, x, f = (to_vec(sl2[key]) for key in ("e", "x", "f"))
    tmp = LieSuperalgebra(name, names, parities, half, form, e, x, f, [0] * n)
    adx = tmp.ad_matrix(x)
    grading = []
    for a in range(n):
        for r in range(n):
            if r != a and adx[r][a]:
                raise GradingError(f"ad x not diagonal at {names[a]}")
        grading.append(adx[a][a])
    alg = LieSuperalgebra(name, names, parities, half, form, e, x, f, grading)
    return alg.validate()


def _e(size, r, c, val=1):
    m = [[Fraction(0)] * size for _ in range(size)]
    m[r][c] = Fraction(val)
    return m


def _madd(*mats):
    size = len(mats[0])
    return [
        [sum((m[r][c] for m in mats), Fraction(0)) for c in range(size)]
        for r in range(size)
    ]


def _mneg(m):
    return [[-x for x in row] for row in m]


def _build_sl2():
    gens = [("e", 0), ("x", 0), ("f", 0)]
    bracket = {
        ("x", "e"): {"e": 1},
        ("x", "f"): {"f": -1},
        ("e", "f"): {"x": 2},
        ("x", "x"): {},
        ("e", "e"): {},
        ("f", "f"): {},
    }
    form = {("e", "f"): 1, ("x", "x"): Fraction(1, 2)}
    return from_structure("sl(2)", gens, bracket, form, {"e": "e", "x": "x", "f": "f"})


def _build_spo21():
    # gl(2|1): rows/cols 0,1 even, 2 odd
    entries = [
        ("e", _e(3, 0, 1)),
        ("h", _madd(_e(3, 0, 0), _e(3, 1, 1, -1))),
        ("f", _e(3, 1, 0)),
        ("e_od", _madd(_e(3, 0, 2), _e(3, 2, 1))),
        ("f_od", _madd(_e(3, 1, 2), _e(3, 2, 0, -1))),
    ]
    sl2 = {"e": "e", "x": {"h": Fraction(1, 2)}, "f": "f"}
    return from_matrices("spo(2|1)", entries, [0, 0, 1], sl2, Fraction(1))


def _build_spo23():
    # gl(2|3): rows/cols 0,1 even; 2,3,4 odd (indices 1,2,1bar,2bar,3bar)
    E = lambda r, c, v=1: _e(5, r, c, v)
    entries = [
        ("H1", _madd(E(0, 0), E(1, 1, -1))),
        ("H2", _madd(E(2, 2), E(3, 3, -1))),
        ("E11", _madd(E(2, 0), E(1, 3, -1))),
        ("E12", _madd(E(4, 1), E(0, 4))),
        ("E21", E(0, 1)),
        ("E22", _madd(E(2, 4), E(4, 3, -1))),
        ("E3", _madd(E(2, 1), E(0, 3))),
        ("F11", _madd(E(0, 2), E(3, 1))),
        ("F12", _madd(E(4, 0), E(1, 4, -1))),
        ("F21", E(1, 0)),
        ("F22", _madd(E(3, 4), E(4, 2, -1))),
        ("F3", _madd(E(3, 0), E(1, 2, -1))),
    ]
    sl2 = {
        "e": {"E21": 1, "E22": 1},
        "x": {"H1": Fraction(1, 2), "H2": 1},
        "f": {"F21": 1, "F22": -2},
    }
    return from_matrices("spo(2|3)", entries, [0, 0, 1, 1, 1], sl2, Fraction(-1, 3))


_BUILTIN_BUILDERS = {
    "sl(2)": _build_sl2,
    "spo(2|1)": _build_spo21,
    "spo(2|3)": _build_spo23,
}
_BUILTIN_CACHE: dict[str, LieSuperalgebra] = {}


def builtin(name: str) -> LieSuperalgebra:
    if name not in _BUILTIN_BUILDERS:
        raise UnknownBuiltin(
            f"unknown builtin {name!r}; available: {sorted(_BUILTIN_BUILDERS)}"
        )
    if name not in _BUILTIN_CACHE:
        _BUILTIN_CACHE[name] = _BUILTIN_BUILDERS[name]()
    return _BUILTIN_CACHE[name]


# ---------------------------------------------------------------------------
# JSON loader
# ---------------------------------------------------------------------------


def load_algebra(source) -> LieSuperalgebra:
    """Load an algebra from a JSON document (path, file object, or dict)."""
    if isinstance(source, dict):
        doc = source
    elif hasattr(source, "read"):
        try:
            doc = json.load(source)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from exc
    else:
        try:
            with open(source, "r", encoding="utf-8") as fh:
                doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from exc
        except OSError as exc:
            raise ParseError(f"cannot read {source}: {exc}") from exc

    try:
        name = doc["name"]
        gens = [(g["name"], g["parity"]) for g in doc["generators"]]
        bracket = {}
        for b in doc["brackets"]:
            terms = {t["gen"]: t["coeff"] for t in b.get("terms", [])}
            bracket[(b["left"], b["right"])] = terms
        form = {(fe["a"], fe["b"]): fe["value"] for fe in doc.get("form", [])}
        sl2 = doc["sl2"]
        grading = doc.get("grading")
    except (KeyError, TypeError) as exc:
        raise ParseError(f"algebra document missing field: {exc}") from exc
    return from_structure(name, gens, bracket, form, sl2, grading)

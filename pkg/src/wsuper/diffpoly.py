"""Free differential supersymmetric polynomial algebras S(C[d] (x) W).

A generator space W is a finite ordered list of named generators with
parities.  A DiffSymbol is a pair (generator index, derivative order n),
standing for the n-th derivative of the generator.  A Monomial is a
tuple of DiffSymbols sorted by (generator index, order); the Koszul sign
accumulated while sorting a product is folded into the coefficient, and
odd symbols square to zero.  A DiffPoly maps monomials to Scalar
coefficients; this map form is the unique canonical form, so equality is
plain map equality.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import MixedSpaces, ParityMismatch, ParseError
from .scalar import Scalar

__all__ = ["GenSpace", "DiffPoly", "render_poly", "parse_poly"]


class GenSpace:
    """Ordered generator list with parities; identity by content."""

    __slots__ = ("names", "parities", "index")

    def __init__(self, names, parities):
        names = tuple(names)
        parities = tuple(int(p) % 2 for p in parities)
        if len(names) != len(parities):
            raise ValueError("names/parities length mismatch")
        if len(set(names)) != len(names):
            raise ValueError("duplicate generator names")
        self.names = names
        self.parities = parities
        self.index = {n: i for i, n in enumerate(names)}

    def __len__(self):
        return len(self.names)

    def __eq__(self, other):
        return (
            isinstance(other, GenSpace)
            and self.names == other.names
            and self.parities == other.parities
        )

    def __hash__(self):
        return hash((self.names, self.parities))

    def __repr__(self):
        return f"GenSpace({list(self.names)!r})"


def _check_space(a: "DiffPoly", b: "DiffPoly"):
    if a.space != b.space:
        raise MixedSpaces(f"operands over different spaces: {a.space} vs {b.space}")


def mono_parity(space: GenSpace, mono) -> int:
    return sum(space.parities[g] for g, _ in mono) % 2


def mono_mul(space: GenSpace, m1, m2):
    """Merge two canonical monomials.  Returns (sign, monomial) or (0, None)."""
    par = space.parities
    out = []
    sign = 1
    i = j = 0
    n1, n2 = len(m1), len(m2)
    odd_rest = sum(par[g] for g, _ in m1)  # odd symbols still ahead in m1
    while i < n1 or j < n2:
        if j >= n2 or (i < n1 and m1[i] <= m2[j]):
            s = m1[i]
            i += 1
            if par[s[0]]:
                odd_rest -= 1
        else:
            s = m2[j]
            j += 1
            if par[s[0]] and odd_rest % 2:
                sign = -sign
        if par[s[0]] and out and out[-1] == s:
            return 0, None
        out.append(s)
    return sign, tuple(out)


class DiffPoly:
    """Canonical-form differential supersymmetric polynomial."""

    __slots__ = ("space", "terms")

    def __init__(self, space: GenSpace, terms=None):
        self.space = space
        t = {}
        if terms:
            for mono, coeff in terms.items():
                if not isinstance(coeff, Scalar):
                    coeff = Scalar.of(coeff)
                if coeff:
                    t[tuple(mono)] = coeff
        self.terms = t

    # -- constructors --------------------------------------------------

    @classmethod
    def zero(cls, space):
        return cls(space)

    @classmethod
    def one(cls, space):
        return cls(space, {(): Scalar.of(1)})

    @classmethod
    def const(cls, space, c):
        return cls(space, {(): c if isinstance(c, Scalar) else Scalar.of(c)})

    @classmethod
    def gen(cls, space, g, order: int = 0, coeff=1):
        if isinstance(g, str):
            g = space.index[g]
        return cls(space, {((g, order),): coeff})

    @classmethod
    def from_vector(cls, space, coeffs, order: int = 0):
        """Degree-1 element sum_i coeffs[i] * gen_i at the given order."""
        terms = {}
        for i, c in enumerate(coeffs):
            if c:
                terms[((i, order),)] = c if isinstance(c, Scalar) else Scalar.of(c)
        return cls(space, terms)

    # -- queries ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def parity(self):
        """0, 1, or None when parity-inhomogeneous (constants count as even)."""
        ps = {mono_parity(self.space, m) for m in self.terms}
        if not ps:
            return 0
        if len(ps) == 1:
            return ps.pop()
        return None

    def constant_part(self) -> Scalar:
        return self.terms.get((), Scalar())

    def max_order(self) -> int:
        return max((s[1] for m in self.terms for s in m), default=0)

    def degree(self) -> int:
        return max((len(m) for m in self.terms), default=0)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, DiffPoly):
            return NotImplemented
        _check_space(self, other)
        t = dict(self.terms)
        for m, c in other.terms.items():
            s = t.get(m)
            s = c if s is None else s + c
            if s:
                t[m] = s
            else:
                t.pop(m, None)
        out = DiffPoly.__new__(DiffPoly)
        out.space, out.terms = self.space, t
        return out

    def __neg__(self):
        out = DiffPoly.__new__(DiffPoly)
        out.space = self.space
        out.terms = {m: -c for m, c in self.terms.items()}
        return out

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, DiffPoly):
            _check_space(self, other)
            t = {}
            for m1, c1 in self.terms.items():
                for m2, c2 in other.terms.items():
                    sign, m = mono_mul(self.space, m1, m2)
                    if sign == 0:
                        continue
                    c = c1 * c2
                    if sign < 0:
                        c = -c
                    s = t.get(m)
                    s = c if s is None else s + c
                    if s:
                        t[m] = s
                    else:
                        t.pop(m, None)
            out = DiffPoly.__new__(DiffPoly)
            out.space, out.terms = self.space, t
            return out
        # scalar multiplication
        c0 = other if isinstance(other, Scalar) else Scalar.of(other)
        if not c0:
            return DiffPoly(self.space)
        out = DiffPoly.__new__(DiffPoly)
        out.space = self.space
        out.terms = {m: c * c0 for m, c in self.terms.items()}
        return out

    def __rmul__(self, other):
        if isinstance(other, DiffPoly):
            return NotImplemented
        return self.__mul__(other)

    def __eq__(self, other):
        return (
            isinstance(other, DiffPoly)
            and self.space == other.space
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.space, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    # -- differential structure ---------------------------------------------

    def partial(self) -> "DiffPoly":
        """The even derivation sending each symbol d^n a to d^(n+1) a."""
        out = DiffPoly(self.space)
        for mono, coeff in self.terms.items():
            for i, (g, n) in enumerate(mono):
                rest = mono[:i] + mono[i + 1 :]
                bumped = DiffPoly(self.space, {((g, n + 1),): coeff})
                prefix = DiffPoly(self.space, {mono[:i]: Scalar.of(1)})
                suffix = DiffPoly(self.space, {mono[i + 1 :]: Scalar.of(1)})
                del rest
                out = out + prefix * bumped * suffix
        return out

    def substitute(self, rule) -> "DiffPoly":
        """Simultaneous substitution symbol -> DiffPoly, then normalize.

        ``rule`` is a dict or a callable returning the replacement poly
        for a symbol, or None to keep the symbol.  Replacements must
        preserve parity.
        """
        if isinstance(rule, dict):
            lookup = rule.get
        else:
            lookup = rule
        out = DiffPoly(self.space)
        for mono, coeff in self.terms.items():
            acc = DiffPoly.const(self.space, coeff)
            for sym in mono:
                img = lookup(sym)
                if img is None:
                    img = DiffPoly(self.space, {(sym,): Scalar.of(1)})
                else:
                    sp = img.parity()
                    if sp is not None and img and sp != self.space.parities[sym[0]]:
                        raise ParityMismatch(
                            f"substitution for {self.space.names[sym[0]]} flips parity"
                        )
                acc = acc * img
                if acc.is_zero():
                    break
            out = out + acc
        return out

    def evaluate_k(self, k_value) -> "DiffPoly":
        """Evaluate every Scalar coefficient at a rational k."""
        return DiffPoly(
            self.space,
            {m: Scalar.of(c.evaluate(k_value)) for m, c in self.terms.items()},
        )

    def weight(self, delta):
        """Common conformal weight of all monomials under the assignment
        ``delta`` (map generator index -> Fraction), or None if mixed.
        The empty monomial has weight 0."""
        seen = None
        for mono in self.terms:
            w = sum((Fraction(delta[g]) + n for g, n in mono), Fraction(0))
            if seen is None:
                seen = w
            elif seen != w:
                return None
        return seen if seen is not None else Fraction(0)

    # -- rendering -------------------------------------------------------

    def render(self) -> str:
        return render_poly(self)

    def __repr__(self):
        return f"DiffPoly({render_poly(self)})"


# ---------------------------------------------------------------------------
# text rendering / parsing
# ---------------------------------------------------------------------------


def _sym_str(space, sym):
    g, n = sym
    name = space.names[g]
    if n == 0:
        return name
    if n == 1:
        return f"∂({name})"
    return f"∂^{n}({name})"


def _scalar_factor(c: Scalar) -> str:
    """Scalar rendered as a single multiplicative factor."""
    items = list(c.items())
    if len(items) > 1:
        return f"({c.render()})"
    s = c.render()
    if "/" in s and not s.startswith("("):
        # bare fraction like 3/4 -> (3/4); -3/4 -> (-3/4)
        return f"({s})"
    return s


def render_poly(p: DiffPoly) -> str:
    if not p.terms:
        return "0"
    parts = []
    for mono in sorted(p.terms):
        c = p.terms[mono]
        syms = "*".join(_sym_str(p.space, s) for s in mono)
        if not mono:
            body = _scalar_factor(c)
        elif c.is_one():
            body = syms
        elif c == Scalar.of(-1):
            body = "-" + syms
        else:
            body = _scalar_factor(c) + "*" + syms
        parts.append(body)
    text = parts[0]
    for part in parts[1:]:
        if part.startswith("-"):
            text += " - " + part[1:]
        else:
            text += " + " + part
    return text


class _Tokens:
    def __init__(self, text):
        self.toks = self._lex(text)
        self.pos = 0

    @staticmethod
    def _lex(text):
        toks = []
        i = 0
        n = len(text)
        while i < n:
            ch = text[i]
            if ch.isspace():
                i += 1
                continue
            if ch in "+-*/^()":
                toks.append(ch)
                i += 1
                continue
            if ch == "∂":
                toks.append("∂")
                i += 1
                continue
            if ch.isdigit():
                j = i
                while j < n and text[j].isdigit():
                    j += 1
                toks.append(("num", int(text[i:j])))
                i = j
                continue
            if ch.isalpha() or ch == "_":
                j = i
                while j < n and (text[j].isalnum() or text[j] in "_."):
                    j += 1
                toks.append(("name", text[i:j]))
                i = j
                continue
            raise ParseError(f"unexpected character {ch!r} in expression")
        return toks

    def peek(self):
        return self.toks[self.pos] if self.pos < len(self.toks) else None

    def next(self):
        t = self.peek()
        if t is None:
            raise ParseError("unexpected end of expression")
        self.pos += 1
        return t

    def accept(self, tok):
        if self.peek() == tok:
            self.pos += 1
            return True
        return False


def _parse_int(ts: _Tokens) -> int:
    sign = 1
    while ts.peek() == "-":
        ts.next()
        sign = -sign
    t = ts.next()
    if not (isinstance(t, tuple) and t[0] == "num"):
        raise ParseError("expected integer")
    return sign * t[1]


def _parse_rational(ts: _Tokens) -> Fraction:
    num = _parse_int(ts)
    if ts.accept("/"):
        den = _parse_int(ts)
        return Fraction(num, den)
    return Fraction(num)


def _parse_scalar_atom(ts: _Tokens) -> Scalar:
    """number, k-power, or a parenthesized scalar expression."""
    t = ts.peek()
    if t == "(":
        ts.next()
        val = _parse_scalar_sum(ts)
        if not ts.accept(")"):
            raise ParseError("missing ) in scalar")
        return val
    if isinstance(t, tuple) and t[0] == "num":
        return Scalar.of(_parse_rational(ts))
    if isinstance(t, tuple) and t[0] == "name" and t[1] == "k":
        ts.next()
        exp = 1
        if ts.accept("^"):
            exp = _parse_int(ts)
        return Scalar.k(exp)
    raise ParseError(f"expected scalar, got {t!r}")


def _parse_scalar_term(ts: _Tokens) -> Scalar:
    val = _parse_scalar_atom(ts)
    # juxtaposed k-power, e.g. (1/2)k^-1
    t = ts.peek()
    if isinstance(t, tuple) and t[0] == "name" and t[1] == "k":
        val = val * _parse_scalar_atom(ts)
    return val


def _parse_scalar_sum(ts: _Tokens) -> Scalar:
    sign = 1
    while ts.peek() == "-":
        ts.next()
        sign = -sign
    val = _parse_scalar_term(ts) * Scalar.of(sign)
    while ts.peek() in ("+", "-"):
        op = ts.next()
        nxt = _parse_scalar_term(ts)
        val = val + (nxt if op == "+" else -nxt)
    return val


def _is_scalar_start(ts: _Tokens) -> bool:
    t = ts.peek()
    if isinstance(t, tuple) and t[0] == "num":
        return True
    if isinstance(t, tuple) and t[0] == "name" and t[1] == "k":
        return True
    return False


def _parse_factor(ts: _Tokens, space: GenSpace):
    """Returns either ('scalar', Scalar) or ('sym', (g, n))."""
    t = ts.peek()
    if t == "∂" or (isinstance(t, tuple) and t == ("name", "d")):
        ts.next()
        order = 1
        if ts.accept("^"):
            order = _parse_int(ts)
        if not ts.accept("("):
            raise ParseError("expected ( after ∂")
        nm = ts.next()
        if not (isinstance(nm, tuple) and nm[0] == "name"):
            raise ParseError("expected generator name after ∂(")
        if not ts.accept(")"):
            raise ParseError("missing ) after generator name")
        if nm[1] not in space.index:
            raise ParseError(f"unknown generator {nm[1]!r}")
        return ("sym", (space.index[nm[1]], order))
    if t == "(" or _is_scalar_start(ts):
        return ("scalar", _parse_scalar_term(ts) if t != "(" else _parse_scalar_atom(ts))
    if isinstance(t, tuple) and t[0] == "name":
        ts.next()
        if t[1] not in space.index:
            raise ParseError(f"unknown generator {t[1]!r}")
        return ("sym", (space.index[t[1]], 0))
    raise ParseError(f"unexpected token {t!r}")


def parse_poly(text: str, space: GenSpace) -> DiffPoly:
    """Parse the plain-text expression grammar back into a DiffPoly."""
    ts = _Tokens(text)
    result = DiffPoly(space)
    first = True
    while ts.peek() is not None:
        sign = 1
        if ts.accept("+"):
            pass
        elif ts.accept("-"):
            sign = -1
        elif not first:
            raise ParseError(f"expected + or - at token {ts.peek()!r}")
        while ts.peek() in ("+", "-"):
            if ts.next() == "-":
                sign = -sign
        first = False
        term = DiffPoly.const(space, Fraction(sign))
        while True:
            kind, val = _parse_factor(ts, space)
            if kind == "scalar":
                term = term * val
            else:
                term = term * DiffPoly(space, {(val,): Scalar.of(1)})
            if not ts.accept("*"):
                # allow juxtaposed k after a number inside a term
                if _is_scalar_start(ts) and isinstance(ts.peek(), tuple) and ts.peek() == ("name", "k"):
                    continue
                break
        result = result + term
    if text.strip() == "0":
        return DiffPoly(space)
    return result

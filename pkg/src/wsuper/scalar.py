"""Exact scalar ring: Laurent polynomials in the level symbol k over Q.

A Scalar is stored as a map exponent -> Fraction with no zero values
(canonical form).  Ring operations are exact; division is only defined
by monomials c*k^n, which is all the theory ever needs (coefficients
like 1/(2k) are Laurent monomials).
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

__all__ = ["Scalar", "ZERO", "ONE", "K"]


def _coerce(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, Rational):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"cannot coerce {value!r} to an exact rational")


class Scalar:
    """Immutable Laurent polynomial in k with Fraction coefficients."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs=None):
        c = {}
        if coeffs:
            for exp, val in coeffs.items():
                val = _coerce(val)
                if val:
                    c[int(exp)] = val
        self._c = c
        self._hash = None

    # -- constructors ------------------------------------------------

    @classmethod
    def of(cls, q) -> "Scalar":
        """Constant Laurent polynomial from a rational."""
        return cls({0: _coerce(q)})

    @classmethod
    def k(cls, n: int = 1, coeff=1) -> "Scalar":
        """coeff * k^n."""
        return cls({n: _coerce(coeff)})

    # -- queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self._c

    def is_one(self) -> bool:
        return self._c == {0: Fraction(1)}

    def is_monomial(self) -> bool:
        return len(self._c) == 1

    def as_fraction(self) -> Fraction:
        """The value as a plain rational; requires k-degree 0."""
        if not self._c:
            return Fraction(0)
        if set(self._c) == {0}:
            return self._c[0]
        raise ValueError(f"scalar {self} is not a constant")

    def items(self):
        return self._c.items()

    def evaluate(self, k_value) -> Fraction:
        kv = _coerce(k_value)
        return sum((c * kv**e for e, c in self._c.items()), Fraction(0))

    # -- ring operations ----------------------------------------------

    def __add__(self, other):
        other = _as_scalar(other)
        c = dict(self._c)
        for e, v in other._c.items():
            s = c.get(e, Fraction(0)) + v
            if s:
                c[e] = s
            else:
                c.pop(e, None)
        out = Scalar.__new__(Scalar)
        out._c = c
        out._hash = None
        return out

    __radd__ = __add__

    def __neg__(self):
        out = Scalar.__new__(Scalar)
        out._c = {e: -v for e, v in self._c.items()}
        out._hash = None
        return out

    def __sub__(self, other):
        return self + (-_as_scalar(other))

    def __rsub__(self, other):
        return _as_scalar(other) + (-self)

    def __mul__(self, other):
        other = _as_scalar(other)
        c = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                e = e1 + e2
                s = c.get(e, Fraction(0)) + v1 * v2
                if s:
                    c[e] = s
                else:
                    c.pop(e, None)
        out = Scalar.__new__(Scalar)
        out._c = c
        out._hash = None
        return out

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_scalar(other)
        if other.is_zero():
            raise ZeroDivisionError("scalar division by zero")
        if not other.is_monomial():
            raise ValueError(f"can only divide by monomials c*k^n, got {other}")
        ((e0, v0),) = other._c.items()
        out = Scalar.__new__(Scalar)
        out._c = {e - e0: v / v0 for e, v in self._c.items()}
        out._hash = None
        return out

    # -- comparison / hashing ------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (Rational, int)):
            other = Scalar.of(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def __bool__(self):
        return bool(self._c)

    # -- rendering -----------------------------------------------------

    def render(self) -> str:
        """Canonical text form, e.g. ``(1/2)k^-1``, ``-2k^2``, ``3/4``."""
        if not self._c:
            return "0"
        parts = []
        for e in sorted(self._c):
            v = self._c[e]
            if e == 0:
                parts.append(_frac_str(v))
                continue
            kpart = "k" if e == 1 else f"k^{e}"
            if v == 1:
                parts.append(kpart)
            elif v == -1:
                parts.append(f"-{kpart}")
            elif v.denominator == 1:
                parts.append(f"{v}{kpart}")
            else:
                parts.append(f"({v}){kpart}")
        text = parts[0]
        for p in parts[1:]:
            text += p if p.startswith("-") else "+" + p
        return text

    def __repr__(self):
        return f"Scalar({self.render()})"


def _frac_str(v: Fraction) -> str:
    return str(v)


def _as_scalar(x) -> Scalar:
    if isinstance(x, Scalar):
        return x
    if isinstance(x, (Rational, int, str)):
        return Scalar.of(x)
    raise TypeError(f"cannot treat {x!r} as a scalar")


ZERO = Scalar()
ONE = Scalar.of(1)
K = Scalar.k()

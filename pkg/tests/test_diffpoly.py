"""Canonical supersymmetric polynomial arithmetic against a naive
sort-and-count-transpositions oracle, plus grammar round trips."""

import random
from fractions import Fraction

import pytest

from wsuper.diffpoly import DiffPoly, GenSpace, parse_poly, render_poly
from wsuper.errors import ParseError
from wsuper.scalar import Scalar

SPACE = GenSpace(("a", "b", "psi", "chi", "theta"), (0, 0, 1, 1, 1))


# -- independent oracle ------------------------------------------------------


def oracle_sort(symbols, parities):
    """Bubble sort a symbol list, counting odd-odd transpositions; None
    when an odd symbol repeats (square zero)."""
    syms = list(symbols)
    sign = 1
    changed = True
    while changed:
        changed = False
        for i in range(len(syms) - 1):
            if syms[i] > syms[i + 1]:
                if parities[syms[i][0]] and parities[syms[i + 1][0]]:
                    sign = -sign
                syms[i], syms[i + 1] = syms[i + 1], syms[i]
                changed = True
    for i in range(len(syms) - 1):
        if syms[i] == syms[i + 1] and parities[syms[i][0]]:
            return None, 0
    return tuple(syms), sign


def oracle_mul(terms1, terms2, parities):
    out = {}
    for m1, c1 in terms1.items():
        for m2, c2 in terms2.items():
            mono, sign = oracle_sort(list(m1) + list(m2), parities)
            if mono is None:
                continue
            prev = out.get(mono, Scalar())
            val = prev + c1 * c2 * Scalar.of(sign)
            if val.is_zero():
                out.pop(mono, None)
            else:
                out[mono] = val
    return out


def random_poly(rng, max_terms=3, max_factors=3, max_order=2):
    terms = {}
    for _ in range(rng.randrange(1, max_terms + 1)):
        syms = [
            (rng.randrange(len(SPACE.names)), rng.randrange(max_order + 1))
            for _ in range(rng.randrange(0, max_factors + 1))
        ]
        mono, sign = oracle_sort(syms, SPACE.parities)
        if mono is None:
            continue
        coeff = Scalar.of(Fraction(rng.randrange(-5, 6), rng.randrange(1, 4)))
        if rng.randrange(3) == 0:
            coeff = coeff * Scalar.k(rng.randrange(-1, 2))
        prev = terms.get(mono, Scalar())
        val = prev + coeff * Scalar.of(sign)
        if val.is_zero():
            terms.pop(mono, None)
        else:
            terms[mono] = val
    return DiffPoly(SPACE, terms)


def test_product_matches_oracle_thousand_cases():
    rng = random.Random(20260824)
    for _ in range(1000):
        A, B = random_poly(rng), random_poly(rng)
        expected = DiffPoly(SPACE, oracle_mul(A.terms, B.terms, SPACE.parities))
        assert A * B == expected


def test_associativity_and_supercommutativity():
    rng = random.Random(99)
    for _ in range(300):
        A, B, C = (random_poly(rng, max_terms=2) for _ in range(3))
        assert (A * B) * C == A * (B * C)
    for _ in range(300):
        A, B = random_poly(rng, max_terms=1), random_poly(rng, max_terms=1)
        pa, pb = A.parity(), B.parity()
        if pa is None or pb is None:
            continue
        sign = Fraction(-1) if (pa and pb) else Fraction(1)
        assert A * B == B * A * sign


def test_odd_square_is_zero():
    psi = DiffPoly.gen(SPACE, "psi")
    assert (psi * psi).is_zero()
    dpsi = DiffPoly(SPACE, {((2, 1),): Scalar.of(1)})
    assert (dpsi * dpsi).is_zero()
    assert not (psi * dpsi).is_zero()
    a = DiffPoly.gen(SPACE, "a")
    assert a * a == DiffPoly(SPACE, {((0, 0), (0, 0)): Scalar.of(1)})


def test_partial_is_a_derivation():
    rng = random.Random(5)
    for _ in range(300):
        A, B = random_poly(rng, max_terms=2), random_poly(rng, max_terms=2)
        assert (A * B).partial() == A.partial() * B + A * B.partial()


def test_render_parse_round_trip():
    rng = random.Random(6)
    for _ in range(300):
        A = random_poly(rng)
        assert parse_poly(A.render(), SPACE) == A
        assert render_poly(parse_poly(A.render(), SPACE)) == A.render()


def test_parse_grammar_forms():
    assert parse_poly("∂^2(a) + (3/2)*psi*chi - k^-1*b", SPACE) == (
        DiffPoly(SPACE, {((0, 2),): Scalar.of(1)})
        + DiffPoly(SPACE, {((2, 0), (3, 0)): Scalar.of(Fraction(3, 2))})
        - DiffPoly.gen(SPACE, "b") * Scalar.k(-1)
    )
    with pytest.raises(ParseError):
        parse_poly("nosuchgen + 1", SPACE)


def test_weight_and_parity():
    delta = {i: Fraction(1) for i in range(len(SPACE.names))}
    A = DiffPoly(SPACE, {((0, 1), (2, 0)): Scalar.of(1)})
    assert A.weight(delta) == Fraction(3)
    assert A.parity() == 1
    mixed = A + DiffPoly.gen(SPACE, "a")
    assert mixed.parity() is None

"""BRST complex for the Hamiltonian reduction: the differential squares
to zero and the closed-form identities hold symbolically in k."""

import pytest

from wsuper.brst import (
    apply_d0,
    build_brst,
    check_J_closure,
    check_K_brackets,
    check_L_action,
    check_dJ_formula,
    check_d_squared,
    check_lemma_formulas,
)
from wsuper.superalgebra import builtin

ALGEBRAS = ("sl(2)", "spo(2|1)", "spo(2|3)")
CHECKERS = (
    check_d_squared,
    check_lemma_formulas,
    check_K_brackets,
    check_L_action,
    check_J_closure,
    check_dJ_formula,
)


@pytest.mark.parametrize("name", ALGEBRAS)
def test_all_identities_symbolic(name):
    bs, el = build_brst(builtin(name))
    failures = []
    for checker in CHECKERS:
        for label, ok, residual in checker(bs, el):
            if not ok:
                failures.append((checker.__name__, label, residual))
    assert not failures, failures


def test_differential_is_odd_and_nilpotent_on_samples():
    bs, el = build_brst(builtin("spo(2|1)"), k=1)
    assert el.d.parity() == 1
    for g in range(len(bs.space)):
        assert apply_d0(bs, el, apply_d0(bs, el, bs.gen(g))).is_zero()


def test_total_energy_momentum_pieces():
    bs, el = build_brst(builtin("sl(2)"))
    assert el.L == el.L_g + el.L_ch + el.L_ne
    assert el.L.parity() == 0

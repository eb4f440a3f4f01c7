import pytest

from singzeta import corpus
from singzeta.invariants import (delta_qt_from_gaps, double_coefficients, embedding_holds,
                                 hook_substitution_check, mu_from_gaps, mu_superduality,
                                 quasi_rho, refined_witten, rho_11_cable, rho_11_from_gaps,
                                 rho_11_torus, rho_from_gaps, varrho_from_gaps)
from singzeta.polyalg import parse
from singzeta.semigroup import semigroup
from singzeta.superzeta import motivic_bundle


@pytest.fixture(scope="module")
def cable():
    return motivic_bundle(corpus.cable13(), alternates=(corpus.cable13_char2(),))


def test_rho_11_small():
    assert rho_11_from_gaps(semigroup(2, 3)) == 1 == rho_11_torus(2, 3)
    assert rho_11_torus(3, 4) == rho_11_from_gaps(semigroup(3, 4)) == 5
    assert rho_11_cable([(2, 3), (2, 1)]) == 25


def test_rho_routes_on_the_cable(cable):
    rb = quasi_rho(cable)
    assert rb.rho_11 == 25
    assert rb.rho == corpus.printed("CABLE13_RHO")
    assert rb.R == corpus.printed("CABLE13_R")
    assert rb.rho == rho_from_gaps(semigroup(4, 6, 13))
    assert embedding_holds(rho_from_gaps(semigroup(2, 3)), 1, rb.rho)


def test_varrho_duality():
    G = semigroup(4, 6, 13)
    vr = varrho_from_gaps(G)
    flipped = vr.substitute({"q": (1, (0, -1, 0)), "t": (1, (-1, 0, 0))}).shift(7, 7, 0)
    assert flipped == vr


def test_mu_of_the_cable(cable):
    G = semigroup(4, 6, 13)
    w = refined_witten(G, cable.H)
    assert w.mu == corpus.printed("CABLE13_MU")
    assert w.mu.subs(q=1, t=1, a=1) == 16
    assert mu_superduality(w.mu, 8)
    assert len(double_coefficients(G)) == G.num_segments == 6
    assert delta_qt_from_gaps(G).subs(q=1, t=1, a=1) == 8


def test_mu_of_the_trefoil():
    # x = 0, 1: v = 1, 1 and g = 0, 0
    assert mu_from_gaps(semigroup(2, 3)) == parse("2")


def test_witten_needs_gorenstein():
    with pytest.raises(ValueError):
        refined_witten(semigroup(3, 4, 5))


def test_hook_row_quotient(cable):
    ok, quot = hook_substitution_check(cable.H, 2)
    assert ok and quot == corpus.printed("CABLE13_HOOK2")

from singzeta import corpus
from singzeta.formulas import (bh_closedform_torus2, bh_printed_torus2,
                               colored_torus2_superpoly, homfly_specializations, qbinom,
                               torus2_superpoly, trefoil_colored_sum)
from singzeta.polyalg import parse
from singzeta.semigroup import hopf_spec
from singzeta.superzeta import motivic_bundle


def test_torus2_closed_form():
    assert torus2_superpoly(1) == parse("1 + q*t + a*q")
    assert torus2_superpoly(2) == parse("1 + q*t + q^2*t^2 + a*q*(1 + q*t)")


def test_gaussian_binomial():
    assert qbinom(4, 2) == parse("1 + q + 2*q^2 + q^3 + q^4")
    assert qbinom(3, 5).is_zero()


def test_colored_m1_is_uncolored():
    for p in (1, 2, 3):
        assert colored_torus2_superpoly(p, 1) == torus2_superpoly(p)


def test_two_colored_formulas_agree():
    assert colored_torus2_superpoly(1, 2) == trefoil_colored_sum(2)


def test_bh_geometric_sum():
    assert bh_closedform_torus2(1) == parse("1 + q*t^2")
    assert bh_closedform_torus2(2) == parse("1 + q*t^2 + q^2*t^4")
    x = parse("q*t^2")
    for p in range(1, 5):
        assert bh_closedform_torus2(p) == (1 - x ** (p + 1)).exact_div(1 - x)
    # the p - 1 exponent reading does not reproduce the a = 0 part
    assert bh_printed_torus2(2) != bh_closedform_torus2(2)


def test_trefoil_specializations():
    sp = homfly_specializations(torus2_superpoly(1))
    assert sp["HOM"] == parse("1 + t^2 - t*a")
    assert sp["Jones"] == parse("1 + t^2 - t^3")
    assert sp["Al"] == parse("1 - t + t^2")


def test_hopf_alexander_is_one():
    H = motivic_bundle(hopf_spec(2)).H
    assert homfly_specializations(H, kappa=2)["Al"] == parse("1")

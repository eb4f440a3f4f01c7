import pytest

from singzeta import corpus
from singzeta.polyalg import PolynomialityViolation, parse
from singzeta.semigroup import hopf_spec, semigroup
from singzeta.superzeta import (L_at_q, coincidence_check, colored_delta, flagged_L,
                                functional_equation_at_q, functional_equation_check,
                                good_fields, motivic_at_q, motivic_bundle, principal_L,
                                t_one_identity, zeta_from_L, zuniga_L)


def test_trefoil_bundle():
    b = motivic_bundle(corpus.trefoil())
    assert b.H == parse("1 + q*t + a*q")
    assert b.Hbold == parse("1 + q*t^2 + a*q*t")
    assert b.fields == (2, 3, 4)


def test_hopf_bundle():
    assert motivic_bundle(hopf_spec(2)).H == parse("(q - 1)*t + 1 + a*q")


def test_colored_degree_bounds():
    assert colored_delta(hopf_spec(2, (3, 1))) == 3
    assert colored_delta(hopf_spec(3, (2, 1, 1))) == 5
    assert colored_delta(corpus.double_trefoil()) == 8


def test_good_fields_skip_bad_characteristic():
    assert good_fields(corpus.cable13(), 4) == [3, 5, 7, 9]
    assert good_fields(corpus.cable13(), 4, alternates=(corpus.cable13_char2(),)) == [2, 3, 4, 5]


def test_too_few_fields_for_the_degree_bound():
    with pytest.raises(ValueError):
        motivic_bundle(corpus.torus2(2), fields=(2, 3))


def test_wrong_degree_bound_is_caught_by_the_holdout():
    with pytest.raises(PolynomialityViolation):
        motivic_bundle(corpus.torus2(2), fields=(2, 3, 4), degbound=1)


def test_trefoil_L_and_functional_equation():
    L = flagged_L(corpus.trefoil())
    assert L == parse("1 + q*t^2 + a*q*t")
    assert L.subs(a=0) == parse("1 + q*t^2")
    assert functional_equation_check(L, 1)[0]
    Z = zeta_from_L(L, 1, 6)
    assert not functional_equation_check(Z, 1)[0]


def test_zuniga_specialization_matches_principal_ideals():
    for p in (1, 2, 3):
        spec = corpus.torus2(p)
        assert zuniga_L(flagged_L(spec)) == principal_L(semigroup(2, 2 * p + 1))


def test_double_trefoil_at_q3():
    spec = corpus.double_trefoil()
    L = L_at_q(spec, 3)
    H, rec = motivic_at_q(spec, 3)
    assert H == corpus.printed("T64_HMOT").subs(q=3)
    assert L == corpus.printed("T64_L").subs(q=3)
    assert functional_equation_at_q(L, 8, 3)[0]
    assert t_one_identity(L, H)


def test_coincidence_report():
    rep = coincidence_check(parse("1 + q*t^2"), parse("1 + q*t^2"))
    assert rep.equal
    rep = coincidence_check(parse("1 + q*t^2"), parse("1 + q*t"))
    assert not rep.equal and rep.first_difference

from fractions import Fraction

import pytest

from singzeta.polyalg import (PolynomialityViolation, TriPoly, check_superduality,
                              interpolate_q, interpolate_series, normalize_circ, parse, qpoch)


def test_parse_and_render_roundtrip():
    p = parse("1 + q*t + a*q")
    assert p.render() == "1 + q*t + a*q"
    assert parse(p.render()) == p
    assert parse("2q^3t - (1+a)^2") == parse("2*q^3*t - 1 - 2*a - a^2")


def test_subs_and_substitute():
    p = parse("1 + q*t + a*q")
    assert p.subs(q=2) == parse("1 + 2*t + 2*a")
    assert p.subs(q=1, t=1, a=1) == 3
    assert p.substitute({"q": parse("q*t")}) == parse("1 + q*t^2 + a*q*t")
    assert p.substitute({"a": (-1, (-1, 0, 0))}) == parse("q*t")


def test_exact_division():
    num = parse("1 - q^3")
    assert num.exact_div(parse("1 - q")) == parse("1 + q + q^2")
    with pytest.raises(ArithmeticError):
        parse("1 + q^2").exact_div(parse("1 - q"))


def test_qpochhammer():
    assert qpoch(parse("q"), parse("q"), 2) == parse("(1 - q)*(1 - q^2)")


def test_interpolation_with_holdout():
    vals = {q: 3 * q * q - q + 5 for q in (2, 3, 4, 5)}
    assert interpolate_series(vals, 2) == [5, -1, 3]
    vals[5] += 1
    with pytest.raises(PolynomialityViolation):
        interpolate_series(vals, 2)
    tabs = {q: {("x",): q ** 2, ("y",): 1} for q in (2, 3, 4)}
    out = interpolate_q(tabs, 2, holdout=False)
    assert out[("x",)] == parse("q^2") and out[("y",)] == parse("1")


def test_non_integral_interpolation_rejected():
    with pytest.raises(PolynomialityViolation):
        interpolate_series({2: 1, 3: 2, 4: 4}, 2, holdout=False)


def test_normalize_circ_and_superduality():
    assert normalize_circ(parse("-a*q^2 - a*q^3*t")) == parse("1 + q*t")
    ok, _ = check_superduality(parse("1 + q*t^2 + a*q*t"), 1)
    assert ok
    ok, witness = check_superduality(parse("1 + q*t + a*q*t"), 1)
    assert not ok and witness


def test_fraction_coefficients_survive():
    p = TriPoly.mono(0, 1, 0, Fraction(1, 2))
    assert (p + p) == parse("t")

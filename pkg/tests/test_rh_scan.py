import math

import pytest

from singzeta.formulas import torus2_superpoly
from singzeta.polyalg import parse
from singzeta.rh_scan import (lee_yang_1d, poly_roots, rh_threshold, rh_verdict,
                              t_coefficients)

QT = parse("q*t")


def bold(H):
    return H.substitute({"q": QT})


@pytest.mark.parametrize("p", [1, 2, 3, 4])
@pytest.mark.parametrize("q", [0.1, 0.5, 0.9, 0.99])
def test_torus2_zeros_on_the_circle(p, q):
    v = rh_verdict(bold(torus2_superpoly(p)), q, 0)
    assert v.holds and v.max_residual < 1e-8
    assert all(abs(s - 1) < 1e-6 for s in v.scaled_moduli)


def test_coefficients_and_roots():
    coeffs = t_coefficients(parse("1 + q*t^2"), 0.25)
    assert [float(c) for c in coeffs] == [1.0, 0.0, 0.25]
    roots, res = poly_roots(coeffs)
    assert sorted(abs(z) for z in roots) == pytest.approx([2.0, 2.0])


def test_hopf_has_one_exceptional_pair():
    v = rh_verdict(parse("1 + a*q*t + (q*t - 1)*t"), 0.1, 0)
    assert not v.holds and v.exceptional_pairs == 1


def test_threshold_needs_anchor():
    with pytest.raises(ValueError):
        rh_threshold(parse("1 + a*q*t + (q*t - 1)*t"), 0)


def test_lee_yang_closed_form():
    zeros, on_circle, bound = lee_yang_1d(4, -0.2)
    assert bound == pytest.approx(-math.tan(math.pi / 8) ** 2)
    assert not on_circle
    zeros, on_circle, _ = lee_yang_1d(4, 0.3)
    assert on_circle and all(abs(abs(z) - 1) < 1e-12 for z in zeros)

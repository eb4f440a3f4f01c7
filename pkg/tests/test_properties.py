"""Randomized property suites (at least 100 instances each)."""

from math import gcd

from hypothesis import HealthCheck, assume, given, settings
from hypothesis import strategies as st

from singzeta.acceptance import (FLAG_CASES, FIELD_SIZES, field_axioms, gorenstein_symmetric,
                                 interpolation_roundtrip, rank_product_agrees,
                                 reciprocity_involutive)
from singzeta.polyalg import TriPoly
from singzeta.semigroup import Branch, SingularitySpec

SLOW = settings(max_examples=100, deadline=None, suppress_health_check=[HealthCheck.too_slow])
FAST = settings(max_examples=200, deadline=None)

coeff = st.integers(-2, 2)


@st.composite
def small_branches(draw):
    r, s = draw(st.sampled_from(FLAG_CASES))
    x = [(r, 1)] + [(e, draw(coeff)) for e in range(r + 1, r + 4)]
    y = [(s, 1)] + [(e, draw(coeff)) for e in range(s + 1, s + 4)]
    return SingularitySpec((Branch(x, y),))


@SLOW
@given(small_branches(), st.sampled_from([2, 3]))
def test_rank_product_equals_flag_oracle(spec, q):
    verdict = rank_product_agrees(spec, q)
    assume(verdict is not None)
    assert verdict


@FAST
@given(st.lists(st.integers(-50, 50), min_size=1, max_size=7), st.data())
def test_interpolation_exact_with_holdout(coeffs, data):
    qs = sorted(data.draw(st.lists(st.sampled_from(FIELD_SIZES), min_size=len(coeffs) + 1,
                                   max_size=len(coeffs) + 1, unique=True)))
    assert interpolation_roundtrip(coeffs, qs)


@FAST
@given(st.lists(st.integers(2, 15), min_size=2, max_size=3))
def test_gorenstein_gap_symmetry(gens):
    assume(gcd(*gens) == 1)
    assert gorenstein_symmetric(tuple(gens))


@FAST
@given(st.integers(2, 5), st.integers(3, 9), st.integers(0, 10 ** 6))
def test_reciprocity_is_an_involution(r, s, index):
    assume(r < s and gcd(r, s) == 1)
    assert reciprocity_involutive(r, s, index)


@FAST
@given(st.sampled_from(FIELD_SIZES), st.integers(0, 10 ** 4), st.integers(0, 10 ** 4),
       st.integers(0, 10 ** 4))
def test_field_axioms(q, x, y, z):
    assert field_axioms(q, x, y, z)


monomial = st.tuples(st.integers(0, 3), st.integers(-2, 3), st.integers(0, 2))
polys = st.dictionaries(monomial, st.integers(-5, 5), max_size=6).map(TriPoly)


@FAST
@given(polys, polys, polys)
def test_tripoly_ring_axioms(f, g, h):
    assert (f + g) * h == f * h + g * h
    assert (f * g) * h == f * (g * h)
    assert f - f == TriPoly()


@FAST
@given(polys)
def test_duality_substitution_is_an_involution(f):
    rule = {"q": (1, (0, -1, 0)), "t": (1, (-1, 0, 0))}
    assert f.substitute(rule).substitute(rule) == f

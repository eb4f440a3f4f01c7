import pytest

from singzeta import corpus
from singzeta.semigroup import (Branch, SemigroupError, SingularitySpec, alexander_from_semigroup,
                                cable_delta, check_good_reduction, hopf_spec, parse_branches,
                                parse_newton, ring_invariants, semigroup,
                                semigroup_from_branch, semigroup_from_newton_pairs, torus_spec,
                                vg_profiles)
from singzeta.polyalg import parse


def test_newton_pairs_of_the_cable():
    G = semigroup_from_newton_pairs([(2, 3), (2, 1)])
    assert G.generators == (4, 6, 13)
    assert G.delta == 8 and cable_delta([(2, 3), (2, 1)]) == 8
    assert G.gaps == (1, 2, 3, 5, 7, 9, 11, 15)


def test_branch_semigroup_matches_newton_pairs():
    assert semigroup_from_branch(corpus.cable13().branches[0]) == semigroup(4, 6, 13)
    assert semigroup_from_branch(corpus.cable13_char2().branches[0]) == semigroup(4, 6, 13)


@pytest.mark.parametrize("r,s", [(r, s) for r in range(2, 12) for s in range(r + 1, 13)
                                 if __import__("math").gcd(r, s) == 1])
def test_sylvester_delta(r, s):
    assert semigroup(r, s).delta == (r - 1) * (s - 1) // 2


def test_segments_and_symmetry():
    G = semigroup(4, 6, 13)
    assert G.is_symmetric
    assert G.num_segments == 6
    assert not semigroup(3, 4, 5).is_symmetric


def test_vg_profiles_follow_strict_gap_count():
    # v(x) = #members <= x, g(x) = #gaps < x
    v, g = vg_profiles(semigroup(4, 6, 13))
    assert v[15] == 8 and g[15] == 7
    v, g = vg_profiles(semigroup(2, 5))
    assert v == [1, 1, 2, 2] and g == [0, 0, 1, 1]
    for x in range(4):
        assert v[x] - 1 + g[x] == x - (x in (1, 3))


def test_alexander_from_semigroup():
    assert alexander_from_semigroup(semigroup(2, 3)) == parse("1 - t + t^2")
    assert alexander_from_semigroup(semigroup(2, 5)) == parse("1 - t + t^2 - t^3 + t^4")


def test_linking_numbers():
    inv = ring_invariants(corpus.double_trefoil())
    assert inv.deltas == (1, 1) and inv.linking[0][1] == 6 and inv.delta == 8
    inv = ring_invariants(hopf_spec(3))
    assert inv.delta == 3 and inv.linking[0][1] == inv.linking[1][2] == 1


def test_reduction_verdicts():
    bad = check_good_reduction(corpus.cable13(), 2)
    assert not bad.good and "y^2 - x^3" in str(bad)
    assert check_good_reduction(corpus.cable13(), 3).good
    assert check_good_reduction(corpus.cable13_char2(), 2).good
    assert not check_good_reduction(corpus.cable13_char2(), 3).good
    assert not check_good_reduction(corpus.double_trefoil(), 2).good


def test_parsers_and_json_roundtrip():
    (b,) = parse_branches("x=z^4;y=z^6+z^7")
    assert b == Branch(((4, 1),), ((6, 1), (7, 1)))
    assert parse_newton("(2,3)(2,1)") == [(2, 3), (2, 1)]
    spec = corpus.cable13()
    assert SingularitySpec.from_json(spec.to_json()) == spec
    assert SingularitySpec.from_json({"newton": [[2, 3], [2, 1]]}).branches == spec.branches


def test_invalid_input_rejected():
    with pytest.raises(SemigroupError):
        torus_spec(2, 4)
    with pytest.raises(SemigroupError):
        parse_branches("w=z^2")
    with pytest.raises(SemigroupError):
        SingularitySpec((Branch(((1, 1),), ()), Branch((), ((1, 1),))), (1, 2))

from singzeta.gamma_modules import (GammaModule, enumerate_standard_deltas,
                                    enumerate_standard_flags, rational_catalan, reciprocity)
from singzeta.semigroup import semigroup


def test_trefoil_has_two_standard_modules():
    mods = enumerate_standard_deltas(semigroup(2, 3))
    assert [m.D for m in mods] == [(), (1,)]


def test_cable_has_25_standard_modules():
    mods = enumerate_standard_deltas(semigroup(4, 6, 13))
    assert len(mods) == 25
    Ds = {m.D for m in mods}
    assert (2, 15) in Ds and (2, 11, 15) in Ds and (2, 9) not in Ds


def test_rational_catalan_small_cases():
    for (r, s), n in {(2, 3): 2, (2, 5): 3, (3, 4): 5, (3, 5): 7, (4, 5): 14}.items():
        assert rational_catalan(r, s) == n
        assert len(enumerate_standard_deltas(semigroup(r, s))) == n


def test_level_one_flags():
    flags = enumerate_standard_flags(semigroup(2, 3), 1)
    assert sum(f.level == 0 for f in flags) == 2 and sum(f.level == 1 for f in flags) == 1
    flags = enumerate_standard_flags(semigroup(2, 5), 1)
    ones = sorted((f.base.D, f.added) for f in flags if f.level == 1)
    assert ones == [((), (3,)), ((3,), (1,))]


def test_reciprocity_examples():
    G = semigroup(4, 6, 13)
    assert reciprocity(GammaModule(G, (15,))).D == (2, 9, 15)
    assert reciprocity(GammaModule(G, (2, 9, 15))).D == (15,)
    assert reciprocity(GammaModule(G, (2, 9, 11, 15))).D == (2, 9, 11, 15)
    assert reciprocity(GammaModule(G, ())).D == ()
    fixed = [m for m in enumerate_standard_deltas(G) if reciprocity(m) == m]
    assert len(fixed) == 13


def test_module_helpers():
    G = semigroup(2, 5)
    M = GammaModule(G, (3,))
    assert M.is_module() and M.missing == (1,) and M.dev == 1
    assert not GammaModule(G, (1,)).is_module()

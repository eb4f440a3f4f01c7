import pytest

from singzeta import corpus
from singzeta.enumerate import (BadReduction, L_terms, build_ring_model, count_cell,
                                count_standard_modules, flag_oracle, read_checkpoint,
                                shift_set)
from singzeta.gamma_modules import GammaModule, GuardExceeded, enumerate_standard_deltas
from singzeta.semigroup import hopf_spec, semigroup, torus_spec


def test_trefoil_model_and_counts():
    m = build_ring_model(corpus.trefoil(), 2)
    assert m.dim == 2 and m.rk_min == 1 and m.rk_max == 2
    # exhaustive over subspaces of F_2^2: O itself, and the two invertible (1 + lambda z)
    assert count_standard_modules(m).counts == {(0, 2): 1, (1, 1): 2}


def test_hopf_counts_at_q3():
    m = build_ring_model(hopf_spec(2), 3)
    assert count_standard_modules(m).counts == {(0, 2): 1, (1, 1): 2}


def test_cable_needs_the_alternate_model_in_char_2():
    with pytest.raises(BadReduction):
        build_ring_model(corpus.cable13(), 2)
    assert build_ring_model(corpus.cable13_char2(), 2).dim == 16


@pytest.mark.parametrize("q", [2, 3])
def test_trefoil_cells(q):
    m = build_ring_model(corpus.trefoil(), q)
    G = semigroup(2, 3)
    assert sum(count_cell(m, GammaModule(G, (1,))).values()) == 1
    assert sum(count_cell(m, GammaModule(G, ())).values()) == q


@pytest.mark.parametrize("q", [3, 5])
def test_cable_cells(q):
    m = build_ring_model(corpus.cable13(), q)
    G = semigroup(4, 6, 13)
    assert sum(count_cell(m, GammaModule(G, (15,))).values()) == q ** 7
    assert sum(count_cell(m, GammaModule(G, (2, 15))).values()) == 0


@pytest.mark.parametrize("r,s", [(2, 3), (2, 5), (3, 4), (3, 5)])
def test_torus_cells_are_affine(r, s):
    G = semigroup(r, s)
    dims = {}
    for q in (2, 3, 4, 5):
        m = build_ring_model(torus_spec(r, s), q)
        for D in enumerate_standard_deltas(G):
            n = sum(count_cell(m, D).values())
            d = 0
            while q ** d < n:
                d += 1
            assert n == q ** d
            assert dims.setdefault(D.D, d) == d


def test_shift_sets_for_the_trefoil():
    m = build_ring_model(corpus.trefoil(), 3)
    assert shift_set(m, [[1, 0], [0, 1]]) == []  # M = O: only m >= 2
    assert shift_set(m, [[1, 0]]) == [0]  # M = R
    assert shift_set(m, [[1, 2]]) == []  # M = (1 + 2z)


def test_trefoil_L_terms():
    m = build_ring_model(corpus.trefoil(), 3)
    # 1 - t + t (1 + a q) + q t^2 at q = 3
    assert L_terms(m) == {(0, 1): 1, (1, 1): -1, (1, 2): 1, (2, 1): 3}


def test_flag_oracle_examples():
    m = build_ring_model(corpus.trefoil(), 2)
    assert flag_oracle(m, 1) == {(0, 0): 1, (1, 0): 2, (0, 1): 2}
    m = build_ring_model(corpus.trefoil(), 3)
    assert flag_oracle(m) == {(0, 0): 1, (1, 0): 3, (0, 1): 3}
    m = build_ring_model(corpus.torus2(2), 2)
    # 1 + qt + q^2 t^2 + aq(1 + qt) at q = 2
    assert flag_oracle(m) == {(0, 0): 1, (1, 0): 2, (2, 0): 4, (0, 1): 2, (1, 1): 4}


def test_flag_oracle_guard():
    m = build_ring_model(corpus.cable13(), 3)
    with pytest.raises(GuardExceeded):
        flag_oracle(m)


def test_checkpoint_roundtrip(tmp_path):
    path = tmp_path / "ck.tsv"
    m = build_ring_model(torus_spec(3, 4), 3)
    first = count_standard_modules(m, checkpoint=str(path))
    saved = read_checkpoint(str(path))
    assert {D for (_, D) in saved} == {D.D for D in enumerate_standard_deltas(semigroup(3, 4))}
    again = count_standard_modules(m, checkpoint=str(path))
    assert again.counts == first.counts

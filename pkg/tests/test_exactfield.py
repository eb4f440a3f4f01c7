from fractions import Fraction

import pytest

from singzeta.exactfield import (QQ, field_of_size, is_irreducible, is_prime, make_field,
                                 prime_power, rank, solve_affine)


def test_prime_power_detection():
    assert prime_power(2) == (2, 1)
    assert prime_power(27) == (3, 3)
    assert prime_power(64) == (2, 6)
    assert prime_power(12) is None
    assert prime_power(1) is None
    assert [n for n in range(2, 30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


def test_f9_uses_smallest_irreducible_quadratic():
    # X^2, X^2+1, X^2+2, ... : the first irreducible monic quadratic over F_3 is X^2 + 1
    assert make_field(3, 2).modulus == (1, 0, 1)
    assert not is_irreducible([0, 0, 1], 3)
    assert is_irreducible([1, 0, 1], 3)
    assert make_field(2, 2).modulus == (1, 1, 1)
    assert field_of_size(8).modulus == (1, 1, 0, 1)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 16, 25, 27])
def test_multiplicative_group_is_complete(q):
    F = field_of_size(q)
    nonzero = list(range(1, q))
    for x in nonzero:
        assert F.mul(x, F.inv(x)) == 1
        assert sorted(F.mul(x, y) for y in nonzero) == nonzero
    assert all(F.pow(x, q - 1) == 1 for x in nonzero)


def test_frobenius_fixes_prime_field():
    F = field_of_size(9)
    assert [x for x in range(9) if F.frobenius(x) == x] == [0, 1, 2]


def test_from_int_reduces_mod_p():
    F = field_of_size(9)
    assert F.from_int(7) == 1
    assert F.from_int(-1) == 2


def test_tables_match_operations():
    F = field_of_size(4)
    for x in range(4):
        for y in range(4):
            assert F.add_table[x][y] == F.add(x, y)
            assert F.mul_table[x][y] == F.mul(x, y)


def test_solve_affine_over_f5():
    F = make_field(5)
    sol, kernel = solve_affine([([1, 1], 2), ([1, 4], 0)], 2, F)
    assert sol == [1, 1] and kernel == []
    assert solve_affine([([1, 1], 1), ([2, 2], 3)], 2, F) is None


def test_rank_over_rationals():
    rows = [[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)]]
    assert rank(rows, QQ, 2) == 1

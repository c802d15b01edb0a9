"""Chebyshev polynomials: recursions, duality, golden values, constant
terms, and the inverse relation with the d-table."""

import pytest

from nhedral.chebyshev import (NPoly, constant_terms, d_table,
                               duality_check, recursion_check,
                               sympower_check, u_poly)
from nhedral.weights import alcove, central_char


@pytest.mark.parametrize("N,s", [(2, 8), (3, 6), (4, 5), (5, 4)])
def test_recursion_and_duality(N, s):
    assert recursion_check(N, s) == []
    assert duality_check(N, s) == []


@pytest.mark.parametrize("N,s", [(2, 10), (3, 7), (4, 6)])
def test_d_table_is_inverse_to_u(N, s):
    assert d_table(N, s).check_inverse()


@pytest.mark.parametrize("N,s", [(3, 8), (4, 8)])
def test_symmetric_power_recursion(N, s):
    assert sympower_check(N, s)


def _poly(N, terms):
    return NPoly(N, dict(terms))


def test_rank2_matches_classical_chebyshev():
    # U_m(x) with x = X_1 are the normalized Chebyshev polynomials of the
    # second kind: U_4 = x^4 - 3x^2 + 1
    assert u_poly((4,), 2) == _poly(2, {(4,): 1, (2,): -3, (0,): 1})
    assert u_poly((5,), 2) == _poly(2, {(5,): 1, (3,): -4, (1,): 3})


def test_color_zero_is_necessary_for_constant_terms():
    for N in (2, 3, 4):
        for m in alcove(N, 6):
            U = u_poly(m, N)
            if central_char(m) % N != 0:
                assert U.constant_term() == 0


@pytest.mark.parametrize("N", [2, 3, 4])
def test_all_constant_terms_vanish_iff_level_divisible(N):
    for e in range(0, 9):
        ct = constant_terms(N, e)
        vanish = all(v == 0 for v in ct["constant_terms"].values())
        assert vanish == (e % N == 0)

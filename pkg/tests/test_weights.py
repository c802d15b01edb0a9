"""Alcove combinatorics: sizes, rotation, stabilizer censuses."""

from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from nhedral.weights import (alcove, central_char, fund_weights, orbit,
                             p_number, rotate, stab_census, stab_formula,
                             stabilizer_order, transpose)

NE = [(N, e) for N in (2, 3, 4, 5) for e in range(0, 7)]


@pytest.mark.parametrize("N,e", NE)
def test_alcove_size_is_simplicial_polytopic(N, e):
    assert len(alcove(N, e)) == p_number(N, e) == comb(e + N - 1, N - 1)


@pytest.mark.parametrize("N,e", NE)
def test_rotation_is_a_z_mod_n_action(N, e):
    alc = set(alcove(N, e))
    for m in alc:
        cur = m
        for _ in range(N):
            cur = rotate(cur, e)
            assert cur in alc
        assert cur == m
        # rotation shifts the color by e (tensoring with the generator)
        assert central_char(rotate(m, e)) % N == \
            (central_char(m) + e) % N


@pytest.mark.parametrize("N,e", NE)
def test_orbit_sizes_divide_n(N, e):
    for m in alcove(N, e):
        s = stabilizer_order(m, e)
        assert N % s == 0
        assert len(orbit(m, e)) == N // s


@pytest.mark.parametrize("N,e", NE)
def test_stab_census_agrees_with_mobius_formula(N, e):
    census = stab_census(N, e)
    assert census["agree"]
    for s, cnt in census["counts"].items():
        assert cnt == stab_formula(N, e, s)
    assert sum(census["counts"].values()) == p_number(N, e)


@given(st.integers(2, 5), st.integers(0, 6))
def test_transpose_is_an_involution(N, e):
    for m in alcove(N, e):
        assert transpose(transpose(m)) == m
        assert central_char(transpose(m)) % N == (-central_char(m)) % N


def test_fund_weights_are_subset_weights():
    # the i-th fundamental representation has C(N, i) weights, summing to 0
    for N in (2, 3, 4, 5):
        for i in range(1, N - 1 + 1):
            ws = fund_weights(N, i)
            assert len(ws) == comb(N, i)
            assert [sum(c) for c in zip(*ws)] == [0] * (N - 1)

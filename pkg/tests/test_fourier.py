"""Pre-Fourier matrices: dual-route oracles and the comparison check."""

from math import comb

import pytest

from nhedral.fourier import (Symbol, compare, epsilon, frobenius_exponent,
                             frobenius_exponent_reduced, prefourier,
                             prefourier_oracle, stabilizer_census,
                             symbol_orbits, symbols)

PAIRS = [(N, M) for N in (2, 3) for M in range(N + 1, 9)]


@pytest.mark.parametrize("N,M", PAIRS)
def test_orbits_partition_the_symbols(N, M):
    assert sum(M // s for _, s in symbol_orbits(N, M)) == \
        len(symbols(N, M))


@pytest.mark.parametrize("N,M", PAIRS)
def test_rotation_number_is_integral(N, M):
    # sum(top) - sum(fbar) is divisible by M for every symbol, so the
    # rotation number r(f) is a well-defined integer
    for f in symbols(N, M):
        assert (sum(f.top) - sum(f.fbar)) % M == 0
        assert f.shift(1) in symbols(N, M)


@pytest.mark.parametrize("N,M", PAIRS)
def test_minor_route_equals_sum_route(N, M):
    orbits, mat = prefourier(N, M)
    for a, (f, _) in enumerate(orbits):
        for b, (g, _) in enumerate(orbits):
            assert mat[a][b] == prefourier_oracle(N, M, f, g)


@pytest.mark.parametrize("N,M", PAIRS)
def test_frobenius_routes_agree_mod_2m(N, M):
    for f, _ in symbol_orbits(N, M):
        assert (frobenius_exponent(f)
                - frobenius_exponent_reduced(f)) % (2 * M) == 0


@pytest.mark.parametrize("N,M", PAIRS)
def test_epsilon_is_a_sign(N, M):
    for f in symbols(N, M):
        assert epsilon(f) in (1, -1)


@pytest.mark.parametrize("N,M", PAIRS)
def test_orbit_stabilizers(N, M):
    assert stabilizer_census(N, M)["agree"]

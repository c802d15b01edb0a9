"""Drinfeld-center data: rank formulas, S/T identities, split blocks."""

from fractions import Fraction

import pytest

from nhedral.center import (center_modular, center_rank, center_simples,
                            cm_numerology)
from nhedral.exactnum import CycQ


@pytest.mark.parametrize("N", [2, 3, 4, 5, 6])
def test_rank_formula_vs_enumeration(N):
    for M in range(N + 1, 13):
        assert center_rank(N, M)["agree"]


def test_simples_split_counts():
    # (3,3): 11 free orbits + 1 split orbit -> 11 + 3 = 14 simples
    simples = center_simples(3, 3)
    assert len(simples) == 14
    assert sum(1 for a in simples if a.s > 1) == 3


@pytest.mark.parametrize("N,e", [(2, 2), (2, 4), (3, 3), (5, 5)])
def test_t_matrix_entries_are_roots_of_unity(N, e):
    cd = center_modular(N, e)
    for t in cd.T:
        assert t * t.conjugate() == CycQ.from_rational(cd.n, 1)


@pytest.mark.parametrize("N,e", [(2, 2), (3, 3)])
def test_s_matrix_is_symmetric(N, e):
    cd = center_modular(N, e)
    r = len(cd.S)
    for i in range(r):
        for j in range(r):
            if cd.S[i][j] is not None and cd.S[j][i] is not None:
                assert cd.S[i][j] == cd.S[j][i]


@pytest.mark.parametrize("N,e", [(2, 2), (2, 4), (3, 3)])
def test_row_sums(N, e):
    assert center_modular(N, e).check_row_sum()


def test_cm_numerology_runs():
    out = cm_numerology(3, 6)
    assert isinstance(out, dict) and out

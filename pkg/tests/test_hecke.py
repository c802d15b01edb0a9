"""Hecke algebras on N colors: relations, representations, positivity."""

import random

import pytest

from nhedral.exactnum import LaurentZ
from nhedral.hecke import (check_sigma_rep, dim_nhecke, hecke, one_dim_reps,
                           rep_census)
from nhedral.weights import alcove, p_number

SMALL = [(2, 2), (2, 3), (3, 2), (3, 3), (4, 2)]


@pytest.mark.parametrize("N,e", SMALL)
def test_dimension_formula(N, e):
    assert dim_nhecke(N, e) == 1 + N * p_number(N, e)


@pytest.mark.parametrize("N,e", SMALL)
def test_defining_relations(N, e):
    assert hecke(N, e).check_relations()


@pytest.mark.parametrize("N,e", SMALL)
def test_associativity_on_random_triples(N, e):
    H = hecke(N, e)
    rng = random.Random(11 * N + e)

    def elt():
        return {rng.choice(H.keys): LaurentZ({rng.randint(-1, 1):
                                              rng.randint(1, 3)})}

    triples = [(elt(), elt(), elt()) for _ in range(40)]
    assert H.check_associativity(triples)


@pytest.mark.parametrize("N,e", SMALL)
def test_unit_is_neutral(N, e):
    H = hecke(N, e)
    for key in H.keys:
        x = {key: LaurentZ(1)}
        assert H.multiply(H.unit(), x) == x
        assert H.multiply(x, H.unit()) == x


@pytest.mark.parametrize("N,e", [(2, 2), (2, 4), (3, 3), (3, 4), (4, 4)])
def test_one_dim_rep_count(N, e):
    out = one_dim_reps(N, e)
    assert out["count"] == out["expected"] == \
        (N + 1 if e % N == 0 else 1)


@pytest.mark.parametrize("N,e", [(2, 2), (3, 3), (4, 2)])
def test_variety_point_reps_satisfy_relations_and_ideal(N, e):
    for k in alcove(N, e)[:3]:
        assert check_sigma_rep(N, e, k)


@pytest.mark.parametrize("N,e", [(2, 4), (3, 3), (4, 4), (3, 5)])
def test_artin_wedderburn_census(N, e):
    assert rep_census(N, e)["agree"]


@pytest.mark.parametrize("N,e", [(2, 4), (3, 3)])
def test_kl_positivity_small(N, e):
    assert hecke(N, e).check_positivity()

"""N-colored graphs: generation, verification, file format, negative
controls, and the bridge back to the Hecke algebra."""

import numpy as np
import pytest

from nhedral.graphs import (BUNDLED, NGraph, bundled_graph, format_graph,
                            gen_type_a, gen_type_d, joint_spectrum,
                            parse_graph, verify)
from nhedral.weights import alcove


@pytest.mark.parametrize("N,e", [(2, 3), (3, 2), (3, 4), (4, 2)])
def test_type_a_verifies_with_simple_spectrum(N, e):
    g = gen_type_a(N, e)
    rep = verify(g, e)
    assert rep["ok"]
    assert rep["spectrum"] == {k: 1 for k in alcove(N, e)}


@pytest.mark.parametrize("N,e", [(2, 2), (2, 6), (3, 3), (4, 2), (4, 4)])
def test_type_d_generator_succeeds(N, e):
    g = gen_type_d(N, e)
    assert verify(g, e)["ok"]


def test_type_d_needs_common_divisor():
    with pytest.raises(ValueError):
        gen_type_d(3, 4)


def test_n2_type_d_is_the_dynkin_diagram():
    # N=2, e=6: D_5 Dynkin diagram (5 = 2 + 6/2 vertices, all simple edges)
    g = gen_type_d(2, 6)
    assert g.size == 2 + 6 // 2
    assert all(m == 1 for m in g.edges.values())
    degs = sorted(int(d) for d in g.adjacency().sum(axis=0))
    assert degs == [1, 1, 1, 2, 3]


@pytest.mark.parametrize("name", BUNDLED)
def test_bundled_graphs_verify(name):
    g = bundled_graph(name)
    assert verify(g, g.level)["ok"]


def test_format_parse_roundtrip():
    for g in (gen_type_a(3, 3), gen_type_d(4, 4), bundled_graph("E4")):
        h = parse_graph(format_graph(g))
        assert h.N == g.N and h.colors == g.colors and h.edges == g.edges


def test_malformed_files_are_rejected():
    good = format_graph(gen_type_a(2, 2))
    with pytest.raises(ValueError):
        parse_graph(good.replace("nhedral-graph 1", "nhedral-graph 9"))
    with pytest.raises(ValueError):
        parse_graph(good.replace("e 0 1 1", "e 0 1 -1"))
    with pytest.raises(ValueError):
        parse_graph(good.replace("e 0 1 1", "e 0 9 1"))


def test_wrong_coloring_fails_verification():
    # a 3-colored path with a same-color edge cannot carry the level-1
    # representation: color grading of the step matrices fails
    g = NGraph(3, [0, 0, 1], {(0, 1): 1, (1, 2): 1}, level=1)
    assert not verify(g, 1)["ok"]


def test_wrong_level_fails_vanishing():
    # the type A graph of level 3 does not satisfy the level-2 ideal
    g = gen_type_a(2, 3)
    rep = verify(g, 2)
    assert not rep["vanishing_ok"] and not rep["ok"]


def test_spectrum_counts_vertices():
    for N, e in [(2, 5), (3, 3), (4, 4)]:
        g = gen_type_a(N, e)
        spec = joint_spectrum(g, e)
        assert sum(spec.values()) == g.size


@pytest.mark.parametrize("N,e", [(3, 3), (4, 4)])
def test_step_matrices_decompose_the_adjacency(N, e):
    for g in (gen_type_a(N, e), gen_type_d(N, e)):
        A = g.adjacency()
        # A is symmetric; each step matrix pairs with its opposite step
        assert (A == A.T).all()
        for i in range(1, N):
            assert (g.step_matrix(i).T == g.step_matrix(N - i)).all()
        # no edges inside a color class
        V = g.size
        for c in range(N):
            cols = [v for v in range(V) if g.colors[v] == c]
            assert not A[np.ix_(cols, cols)].any()

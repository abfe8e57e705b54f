from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cliquereg.errors import BoringParametersError, HypothesisError, ParameterError
from cliquereg.families import complete_bipartite, complete_graph, path_graph, rook_graph, triangular_graph
from cliquereg.graph import SrgParams, is_strongly_regular
from cliquereg.intlinalg import IntMatrix
from cliquereg.poly import IntPoly, char_poly_bareiss
from cliquereg.spectral import (Spectrum, adjacency_charpoly, check_counting_identity, clique_graph_charpoly_identity,
                                clique_srg_classification, clique_srg_condition, closed_walk_count,
                                eigen_bounds_check, feasible_params, numeric_spectrum, predicted_clique_spectrum,
                                quadrangles_at, satisfies_absolute_bound, spectra_match, srg_spectrum, trace_power,
                                triangle_quadrangle_per_vertex, triangles_at, walk_divisibility_check,
                                walk_expression)
from cliquereg.srg_search import enumerate_feasible_locally_linear
from cliquereg.transforms import clique_graph
from conftest import CORPUS


def test_adjacency_charpoly_examples():
    assert adjacency_charpoly(complete_graph(3)) == IntPoly((-2, -3, 0, 1))
    assert adjacency_charpoly(complete_bipartite(1, 3)) == IntPoly((0, 0, -3, 0, 1))
    from cliquereg.graph import Graph
    assert adjacency_charpoly(Graph(2, ())) == IntPoly((0, 0, 1))


def test_charpoly_transfer_rook9(rook9):
    r = clique_graph_charpoly_identity(rook9, 3)
    assert r.ok
    # p(C_3) = (x - 3) x^4 (x + 3)
    assert adjacency_charpoly(clique_graph(rook9, 3)) == IntPoly.from_roots([3, 0, 0, 0, 0, -3])


def test_charpoly_transfer_k4():
    assert clique_graph_charpoly_identity(complete_graph(4), 4).ok


@pytest.mark.parametrize("name, build, omega", CORPUS)
def test_charpoly_transfer_corpus(name, build, omega):
    r = clique_graph_charpoly_identity(build(), omega)
    assert r.ok
    assert r.data["lhs"] == r.data["rhs"]


def test_charpoly_transfer_needs_regular():
    with pytest.raises(HypothesisError):
        clique_graph_charpoly_identity(path_graph(3), 2)


def test_charpoly_transfer_oracle_on_small_clique_graph(gq22_graph):
    # both sides through the slow interpolation route
    c = clique_graph(gq22_graph, 3)
    assert char_poly_bareiss(IntMatrix.from_rows(c.adjacency_rows())) == adjacency_charpoly(c)


def test_predicted_spectrum_examples(rook9, gq22_graph):
    pred = predicted_clique_spectrum(numeric_spectrum(rook9), 4, 3, 9)
    assert pred == Spectrum(((3, 1), (0, 4), (-3, 1)))
    pred = predicted_clique_spectrum(numeric_spectrum(gq22_graph), 6, 3, 15)
    assert pred == Spectrum(((6, 1), (1, 9), (-3, 5)))
    for n in (5, 6, 7):
        t = triangular_graph(n)
        pred = predicted_clique_spectrum(numeric_spectrum(t), 2 * (n - 2), n - 1, t.n)
        assert pred == Spectrum(((n - 1, 1), (-1, n - 1)))


@pytest.mark.parametrize("name, build, omega", CORPUS)
def test_predicted_spectrum_matches_numeric(name, build, omega):
    g = build()
    k = g.degrees[0]
    pred = predicted_clique_spectrum(numeric_spectrum(g), k, omega, g.n)
    assert spectra_match(pred, numeric_spectrum(clique_graph(g, omega)))


def test_eigen_bounds_examples(rook9, gq22_graph, t5):
    assert eigen_bounds_check(rook9, 3).ok
    r = eigen_bounds_check(gq22_graph, 3)
    assert r.ok and abs(r.data["smallest"] + 3) < 1e-9
    assert eigen_bounds_check(t5, 4).ok


@pytest.mark.parametrize("name, build, omega", CORPUS)
def test_eigen_bounds_corpus(name, build, omega):
    assert eigen_bounds_check(build(), omega).ok


@pytest.mark.parametrize("p, expected", [
    ((9, 4, 1, 2), (1, 4, -2, 4)),
    ((99, 14, 1, 2), (3, 54, -4, 44)),
    ((81, 20, 1, 6), (2, 60, -7, 20)),
    ((5, 2, 0, 1), None),
])
def test_srg_spectrum(p, expected):
    assert srg_spectrum(*p) == expected


def test_srg_spectrum_matches_numeric(rook9):
    r, f, s, g = srg_spectrum(9, 4, 1, 2)
    assert numeric_spectrum(rook9) == Spectrum(((4, 1), (r, f), (s, g)))


def test_counting_identity_rejected():
    with pytest.raises(ParameterError):
        check_counting_identity(10, 3, 1, 1)


def test_classification_examples():
    assert clique_srg_classification(feasible_params(15, 6, 1, 3), 3).as_tuple() == (15, 6, 1, 3)
    assert clique_srg_classification(feasible_params(27, 10, 1, 5), 3).as_tuple() == (45, 12, 3, 3)
    assert clique_srg_classification(feasible_params(81, 20, 1, 6), 3) is None
    with pytest.raises(BoringParametersError):
        clique_srg_classification(SrgParams(6, 3, 0, 3), 2)


def test_classification_against_built_graphs(bh):
    for g, w in [(rook_graph(3), 3), (rook_graph(4), 4), (bh, 3)]:
        p = is_strongly_regular(g)
        pred = clique_srg_classification(p, w)
        actual = is_strongly_regular(clique_graph(g, w))
        assert (pred.as_tuple() if pred else None) == (actual.as_tuple() if actual else None)


def test_condition_with_absolute_bound_gives_three_sets():
    hits = [p for p in enumerate_feasible_locally_linear(200) if clique_srg_condition(p, 3)]
    assert {p.as_tuple() for p in hits if satisfies_absolute_bound(p)} == {(9, 4, 1, 2), (15, 6, 1, 3), (27, 10, 1, 5)}


def test_closed_walks_examples(bh, gq22_graph):
    p = is_strongly_regular(bh)
    assert closed_walk_count(p, 3, 2) == 27
    c = clique_graph(bh, 3)
    delta, xi = triangle_quadrangle_per_vertex(p, 3)
    assert closed_walk_count(p, 3, 3) == 2 * delta
    assert {triangles_at(c, v) for v in range(c.n)} == {delta}
    assert {quadrangles_at(c, v) for v in range(0, c.n, 27)} == {xi}
    q = is_strongly_regular(gq22_graph)
    cq = clique_graph(gq22_graph, 3)
    assert closed_walk_count(q, 3, 4) == trace_power(cq, 4) // 15
    d2, x2 = triangle_quadrangle_per_vertex(q, 3)
    assert {triangles_at(cq, v) for v in range(15)} == {d2}
    assert {quadrangles_at(cq, v) for v in range(15)} == {x2}


@pytest.mark.parametrize("ell", range(1, 8))
def test_walk_expression_is_trace(gq22_graph, ell):
    q = is_strongly_regular(gq22_graph)
    assert walk_expression(q, 3, ell) == trace_power(clique_graph(gq22_graph, 3), ell)


def test_triangle_free_has_no_triangles():
    # rook 9: C_3 is K_{3,3}, bipartite, so theta_3 = 0
    p = feasible_params(9, 4, 1, 2)
    assert triangle_quadrangle_per_vertex(p, 3)[0] == 0


def test_walk_divisibility_examples():
    for p in [(99, 14, 1, 2), (81, 20, 1, 6)]:
        assert walk_divisibility_check(feasible_params(*p), 3, 20).ok
    p = feasible_params(81, 20, 1, 6)
    assert walk_expression(p, 3, 0) == 270


@given(st.sampled_from(enumerate_feasible_locally_linear(120)), st.integers(1, 25))
def test_walk_sum_divisible(p, ell):
    assert walk_expression(p, 3, ell) % (p.n * p.k // 6) == 0

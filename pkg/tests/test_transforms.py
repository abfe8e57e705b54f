from __future__ import annotations

import networkx as nx
import pytest
from hypothesis import given

from cliquereg.errors import DisconnectedGraphError, EmptyEdgeSetError, NotCliqueRegularError, NotRCAError
from cliquereg.families import (complete_bipartite, complete_graph, cycle_graph, path_graph, rook_graph,
                                triangular_graph)
from cliquereg.graph import Graph, is_rca
from cliquereg.isomorphism import is_isomorphic
from cliquereg.transforms import (clique_graph, clique_incidence, clique_subdivision, line_clique_inverse_predicate,
                                  line_clique_inverse_truth, line_clique_regular_predicate,
                                  line_clique_regular_truth, line_graph, predicted_clique_rca, rca_roundtrip,
                                  verify_incidence_identities)
from conftest import CORPUS, from_nx, graphs, to_nx


def iso(a: Graph, b: Graph) -> bool:
    return is_isomorphic(a, b) is not None


def test_line_graph_examples():
    assert iso(line_graph(complete_bipartite(1, 3)), complete_graph(3))
    assert iso(line_graph(complete_graph(3)), complete_graph(3))
    assert iso(line_graph(complete_bipartite(4, 4)), rook_graph(4))
    with pytest.raises(EmptyEdgeSetError):
        line_graph(Graph(2, ()))


@given(graphs(min_n=2, max_n=8))
def test_line_graph_matches_networkx(g):
    if g.m == 0:
        return
    theirs = nx.line_graph(to_nx(g))
    assert iso(line_graph(g), from_nx(theirs))


@given(graphs(min_n=2, max_n=8))
def test_line_graph_equals_2_clique_graph(g):
    if g.m:
        assert line_graph(g) == clique_graph(g, 2)


def test_clique_graph_examples(rook9, t5):
    assert iso(clique_graph(rook9, 3), complete_bipartite(3, 3))
    assert iso(clique_graph(t5, 4), complete_graph(5))
    assert clique_graph(complete_graph(3), 3) == Graph(1, ())
    with pytest.raises(NotCliqueRegularError):
        clique_graph(complete_graph(4), 3)


def test_subdivision_examples(rook9):
    assert iso(clique_subdivision(complete_graph(3), 3), complete_bipartite(1, 3))
    s = clique_subdivision(rook9, 3)
    assert (s.n, s.m) == (15, 18)
    # omega = 2 gives the classical edge subdivision
    c5 = cycle_graph(5)
    assert iso(clique_subdivision(c5, 2), cycle_graph(10))


@given(graphs(min_n=2, max_n=8))
def test_2_subdivision_is_edge_subdivision(g):
    if g.m == 0:
        return
    s = clique_subdivision(g, 2)
    assert s.n == g.n + g.m and s.m == 2 * g.m
    assert sorted(s.degrees[g.m:]) == sorted(g.degrees)


def test_incidence_examples(rook9, gq22_graph):
    assert clique_incidence(complete_graph(3), 3).matrix.to_lists() == [[1], [1], [1]]
    r = clique_incidence(rook9, 3).matrix
    assert r.shape == (9, 6) and all(sum(row) == 2 for row in r.to_lists())
    r = clique_incidence(gq22_graph, 3).matrix
    assert r.shape == (15, 15)
    assert all(sum(row) == 3 for row in r.to_lists())
    assert all(sum(r.column(j)) == 3 for j in range(15))


@pytest.mark.parametrize("name, build, omega", CORPUS)
def test_incidence_identities_on_corpus(name, build, omega):
    assert verify_incidence_identities(build(), omega).ok


@given(graphs(min_n=2, max_n=8))
def test_incidence_identities_whenever_clique_regular(g):
    if g.m == 0:
        return
    from cliquereg.graph import clique_regular_witness
    for w in (2, 3, 4):
        if clique_regular_witness(g, w) is not None:
            assert verify_incidence_identities(g, w).ok


def test_line_regular_predicate_examples():
    assert line_clique_regular_predicate(complete_bipartite(4, 4), 4)
    assert not line_clique_regular_predicate(complete_graph(4), 3)
    assert line_clique_regular_predicate(complete_graph(3), 3)
    with pytest.raises(ValueError):
        line_clique_regular_predicate(complete_graph(3), 2)


def pendant_triangles() -> Graph:
    # two triangles, one degree-2 vertex each, joined by a perfect matching on the rest
    return Graph(6, ((0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (1, 4), (2, 5)))


def test_inverse_predicate_examples():
    assert line_clique_inverse_predicate(complete_graph(5), 4)
    assert line_clique_inverse_truth(complete_graph(5), 4)
    g = pendant_triangles()
    assert line_clique_inverse_predicate(g, 3) and line_clique_inverse_truth(g, 3)
    assert not line_clique_inverse_predicate(cycle_graph(6), 3)
    assert not line_clique_inverse_truth(cycle_graph(6), 3)
    with pytest.raises(DisconnectedGraphError):
        line_clique_inverse_predicate(Graph(4, ((0, 1), (2, 3))), 3)


@given(graphs(min_n=1, max_n=9))
def test_line_regular_predicate_matches_truth(g):
    for w in (3, 4, 5):
        assert line_clique_regular_predicate(g, w) == line_clique_regular_truth(g, w)


@given(graphs(min_n=1, max_n=9, connected=True))
def test_inverse_predicate_matches_truth(g):
    for w in (3, 4, 5):
        assert line_clique_inverse_predicate(g, w) == line_clique_inverse_truth(g, w)


def test_rca_roundtrip_examples(rook9, gq22_graph):
    r = rca_roundtrip(gq22_graph)
    assert r.ok and str(r.data["expected"]) == "rca(15,6,3)"
    r = rca_roundtrip(rook9)
    assert r.ok and str(r.data["expected"]) == "rca(6,3,2)"
    assert rca_roundtrip(complete_graph(4)).ok
    with pytest.raises(NotRCAError):
        rca_roundtrip(path_graph(4))


@pytest.mark.parametrize("name, build, omega", [c for c in CORPUS if not c[0].startswith("T")])
def test_rca_closed_under_clique_graph(name, build, omega):
    g = build()
    assert is_rca(g).omega == omega
    assert rca_roundtrip(g).ok


@pytest.mark.parametrize("n", [5, 6])
def test_triangular_graphs_are_not_rca(n):
    assert is_rca(triangular_graph(n)) is None


def test_predicted_clique_rca_formula():
    from cliquereg.graph import RcaParams
    assert predicted_clique_rca(RcaParams(81, 20, 3)) == RcaParams(270, 27, 10)

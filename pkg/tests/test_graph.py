from __future__ import annotations

from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given

from cliquereg.errors import EmptyEdgeSetError, EmptyGraphError, NotRCAError
from cliquereg.families import (complete_bipartite, complete_graph, cycle_graph, path_graph, petersen_graph,
                                rook_graph)
from cliquereg.graph import (Graph, clique_number, clique_regular_witness, enumerate_cliques, is_clique_regular,
                             is_edge_regular, is_rca, is_strongly_regular, maximal_cliques,
                             nonadjacent_common_neighbor_bound, srg_matrix_identity)
from conftest import graphs, to_nx


def test_graph_validation():
    with pytest.raises(EmptyGraphError):
        Graph(0, ())
    with pytest.raises(ValueError):
        Graph(2, ((0, 0),))
    with pytest.raises(ValueError):
        Graph(2, ((0, 2),))
    with pytest.raises(ValueError):
        Graph(3, ((0, 1), (1, 0)))


def test_edges_are_canonical():
    g = Graph(3, ((2, 1), (1, 0)))
    assert g.edges == ((0, 1), (1, 2))
    assert g.degrees == (1, 2, 1)


@given(graphs())
def test_maximal_cliques_match_networkx(g):
    ours = sorted(maximal_cliques(g))
    theirs = sorted(tuple(sorted(c)) for c in nx.find_cliques(to_nx(g)))
    assert ours == theirs


@given(graphs(max_n=8))
def test_enumerate_cliques_brute_force(g):
    for w in (2, 3, 4):
        brute = [c for c in combinations(range(g.n), w) if all(g.has_edge(u, v) for u, v in combinations(c, 2))]
        assert enumerate_cliques(g, w) == brute


@given(graphs())
def test_components_match_networkx(g):
    ours = sorted(sorted(c) for c in g.components())
    theirs = sorted(sorted(c) for c in nx.connected_components(to_nx(g)))
    assert ours == theirs


def test_clique_counts():
    assert len(enumerate_cliques(complete_graph(4), 3)) == 4
    assert len(enumerate_cliques(rook_graph(3), 3)) == 6


def test_clique_number_examples():
    assert clique_number(complete_graph(5)) == 5
    assert clique_number(petersen_graph()) == 2
    assert clique_number(rook_graph(3)) == 3


@given(graphs())
def test_clique_number_matches_networkx(g):
    assert clique_number(g) == max(len(c) for c in nx.find_cliques(to_nx(g)))


@given(graphs(max_n=8))
def test_every_graph_with_edges_is_2_clique_regular(g):
    if g.m:
        w = clique_regular_witness(g, 2)
        assert w is not None and len(w.cliques) == g.m


@given(graphs(max_n=8))
def test_witness_partitions_edges(g):
    if not g.m:
        return
    for w in (3, 4):
        wit = clique_regular_witness(g, w)
        # brute force: every edge lies in exactly one w-clique
        cliques = enumerate_cliques(g, w)
        counts = [sum(1 for c in cliques if u in c and v in c) for u, v in g.edges]
        assert (wit is not None) == all(x == 1 for x in counts)
        if wit is not None:
            for (u, v) in g.edges:
                c = wit.cliques[wit.clique_of(u, v)]
                assert u in c and v in c


def test_witness_examples():
    assert len(clique_regular_witness(rook_graph(3), 3).cliques) == 6
    assert clique_regular_witness(complete_graph(4), 3) is None
    with pytest.raises(EmptyEdgeSetError):
        clique_regular_witness(Graph(3, ()), 3)
    with pytest.raises(ValueError):
        is_clique_regular(complete_graph(3), 1)


def test_edge_regular_examples():
    assert is_edge_regular(rook_graph(3)) == (9, 4, 1)
    assert is_edge_regular(path_graph(3)) is None
    assert is_edge_regular(complete_graph(5)) == (5, 4, 3)


def test_strongly_regular_examples(gq22_graph):
    assert is_strongly_regular(gq22_graph).as_tuple() == (15, 6, 1, 3)
    p = is_strongly_regular(rook_graph(3))
    assert p.as_tuple() == (9, 4, 1, 2) and (p.r, p.f, p.s, p.g) == (1, 4, -2, 4)
    assert is_strongly_regular(cycle_graph(6)) is None
    assert is_strongly_regular(complete_graph(4)) is None


def test_conference_parameters_have_no_integral_spectrum():
    # the 5-cycle is srg(5,2,0,1) with irrational eigenvalues
    p = is_strongly_regular(cycle_graph(5))
    assert p.as_tuple() == (5, 2, 0, 1) and p.r is None


@given(graphs(max_n=9))
def test_srg_agrees_with_matrix_identity(g):
    p = is_strongly_regular(g)
    if p is not None:
        assert srg_matrix_identity(g, p)


def test_rca_examples(gq22_graph):
    assert str(is_rca(gq22_graph)) == "rca(15,6,3)"
    r = is_rca(complete_graph(4))
    assert (r.n, r.k, r.omega) == (4, 3, 4)
    r = is_rca(rook_graph(4))
    assert (r.n, r.k, r.omega) == (16, 6, 4)
    assert is_rca(path_graph(3)) is None


@given(graphs(max_n=9))
def test_rca_routes_agree(g):
    # is_rca raises if its two definitions disagree
    is_rca(g)


def test_nonadjacent_bound(gq22_graph):
    r = nonadjacent_common_neighbor_bound(gq22_graph)
    assert r.ok and r.data["max"] == 3 and r.data["bound"] == 3
    r = nonadjacent_common_neighbor_bound(rook_graph(3))
    assert r.ok and r.data["max"] == 2 and r.data["bound"] == 2
    assert "vacuous" in nonadjacent_common_neighbor_bound(complete_graph(5)).message
    with pytest.raises(NotRCAError):
        nonadjacent_common_neighbor_bound(path_graph(4))


@given(graphs(max_n=9))
def test_nonadjacent_bound_holds_on_every_rca(g):
    if is_rca(g) is not None:
        assert nonadjacent_common_neighbor_bound(g).ok


def test_complete_bipartite_is_rca():
    r = is_rca(complete_bipartite(3, 3))
    assert (r.n, r.k, r.omega) == (6, 3, 2)

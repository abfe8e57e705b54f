from __future__ import annotations

import random

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from cliquereg.errors import SizeGuardError
from cliquereg.families import (complete_bipartite, complete_graph, complete_multipartite, petersen_graph,
                                rook_graph)
from cliquereg.graph import Graph
from cliquereg.isomorphism import check_isomorphism, is_isomorphic
from cliquereg.transforms import clique_graph
from conftest import graphs, to_nx


def test_examples():
    perm = is_isomorphic(complete_bipartite(3, 3), clique_graph(rook_graph(3), 3))
    assert perm is not None
    assert check_isomorphism(complete_bipartite(3, 3), clique_graph(rook_graph(3), 3), perm)
    assert is_isomorphic(complete_graph(3), complete_bipartite(1, 3)) is None
    assert is_isomorphic(petersen_graph(), complete_graph(5)) is None


@given(graphs(max_n=9), st.randoms(use_true_random=False))
def test_relabelled_graph_is_isomorphic(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    h = g.relabel(perm)
    found = is_isomorphic(g, h)
    assert found is not None and check_isomorphism(g, h, found)


@given(graphs(min_n=5, max_n=7), graphs(min_n=5, max_n=7))
def test_agrees_with_networkx(a, b):
    assert (is_isomorphic(a, b) is not None) == nx.is_isomorphic(to_nx(a), to_nx(b))


def test_regular_nonisomorphic_pair():
    # two 3-regular graphs on 6 vertices: K_{3,3} and the prism
    prism = Graph(6, ((0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)))
    assert is_isomorphic(prism, complete_bipartite(3, 3)) is None


def test_multipartite_fast_path():
    a = complete_multipartite([2, 3, 3])
    b = complete_multipartite([3, 2, 3])
    perm = is_isomorphic(a, b)
    assert perm is not None and check_isomorphism(a, b, perm)
    assert is_isomorphic(a, complete_multipartite([2, 2, 4])) is None


def test_strongly_regular_relabel():
    g = rook_graph(4)
    perm = list(range(g.n))
    random.Random(3).shuffle(perm)
    h = g.relabel(perm)
    assert check_isomorphism(g, h, is_isomorphic(g, h))


def test_size_guard():
    big = Graph(2001, ((0, 1),))
    with pytest.raises(SizeGuardError):
        is_isomorphic(big, big)

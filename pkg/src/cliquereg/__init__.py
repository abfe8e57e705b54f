"""Exact computations for clique regular graphs, their clique graphs and critical groups."""

from .critical import (AbelianGroupInvariants, critical_group, critical_group_via_edges, h_matrix,
                       kernel_invariants, spanning_forest_count, verify_induced_and_scalar, verify_order_theorem)
from .errors import (CliqueRegError, EmptyEdgeSetError, EmptyGraphError, HypothesisError, NotCliqueRegularError,
                     ParameterError, ParseError)
from .graph import Graph, RcaParams, SrgParams, clique_regular_witness, is_rca, is_strongly_regular
from .transforms import clique_graph, clique_subdivision, line_graph

__all__ = [
    "AbelianGroupInvariants", "CliqueRegError", "EmptyEdgeSetError", "EmptyGraphError", "Graph",
    "HypothesisError", "NotCliqueRegularError", "ParameterError", "ParseError", "RcaParams", "SrgParams",
    "clique_graph", "clique_regular_witness", "clique_subdivision", "critical_group", "critical_group_via_edges",
    "h_matrix", "is_rca", "is_strongly_regular", "kernel_invariants", "line_graph", "spanning_forest_count",
    "verify_induced_and_scalar", "verify_order_theorem",
]

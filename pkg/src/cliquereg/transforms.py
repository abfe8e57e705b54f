"""Line graphs, clique graphs, clique subdivisions and the clique incidence matrix."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import DisconnectedGraphError, EmptyEdgeSetError, NotCliqueRegularError, NotRCAError
from .graph import CliqueSet, Graph, RcaParams, clique_regular_witness, enumerate_cliques, is_rca
from .intlinalg import IntMatrix
from .isomorphism import is_isomorphic
from .report import Report


def line_graph(g: Graph) -> Graph:
    if g.m == 0:
        raise EmptyEdgeSetError("line graph of an edgeless graph")
    incident: list[list[int]] = [[] for _ in range(g.n)]
    for i, (u, v) in enumerate(g.edges):
        incident[u].append(i)
        incident[v].append(i)
    edges = set()
    for inc in incident:
        edges.update(combinations(inc, 2))
    return Graph(g.m, tuple(edges))


def require_witness(g: Graph, omega: int) -> CliqueSet:
    w = clique_regular_witness(g, omega)
    if w is None:
        raise NotCliqueRegularError(omega)
    return w


def _intersection_graph(n_vertices: int, cliques: list[tuple[int, ...]] | tuple[tuple[int, ...], ...]) -> Graph:
    containing: dict[int, list[int]] = {}
    for j, c in enumerate(cliques):
        for v in c:
            containing.setdefault(v, []).append(j)
    edges = set()
    for js in containing.values():
        edges.update(combinations(js, 2))
    return Graph(len(cliques), tuple(edges))


def clique_graph(g: Graph, omega: int, witness: CliqueSet | None = None) -> Graph:
    """Vertices are the omega-cliques in canonical order; adjacent when they meet."""
    w = witness if witness is not None else require_witness(g, omega)
    return _intersection_graph(g.n, w.cliques)


def clique_intersection_graph(g: Graph, omega: int) -> Graph | None:
    """Intersection graph of all omega-cliques, whether or not g is clique regular."""
    cliques = enumerate_cliques(g, omega)
    if not cliques:
        return None
    return _intersection_graph(g.n, cliques)


def clique_subdivision(g: Graph, omega: int, witness: CliqueSet | None = None) -> Graph:
    """Bipartite graph: cliques 0..m-1, original vertex i becomes m+i."""
    w = witness if witness is not None else require_witness(g, omega)
    m = len(w.cliques)
    edges = [(j, m + v) for j, c in enumerate(w.cliques) for v in c]
    return Graph(m + g.n, tuple(edges))


@dataclass(frozen=True)
class CliqueIncidence:
    matrix: IntMatrix
    omega: int

    @property
    def n(self) -> int:
        return self.matrix.rows

    @property
    def m(self) -> int:
        return self.matrix.cols


def clique_incidence(g: Graph, omega: int, witness: CliqueSet | None = None) -> CliqueIncidence:
    w = witness if witness is not None else require_witness(g, omega)
    m = len(w.cliques)
    rows = [[0] * m for _ in range(g.n)]
    for j, c in enumerate(w.cliques):
        for v in c:
            rows[v][j] = 1
    return CliqueIncidence(IntMatrix.from_rows(rows, cols=m), omega)


def _first_mismatch(x: IntMatrix, y: IntMatrix) -> tuple[int, int, int, int] | None:
    for i in range(x.rows):
        for j in range(x.cols):
            if x[i, j] != y[i, j]:
                return (i, j, x[i, j], y[i, j])
    return None


def verify_incidence_identities(g: Graph, omega: int) -> Report:
    """R^T R = A_C + omega I and (omega-1) R R^T = (omega-1) A + D, exactly."""
    w = require_witness(g, omega)
    r = clique_incidence(g, omega, w).matrix
    c = clique_graph(g, omega, w)
    m = r.cols
    lhs1 = r.T @ r
    rhs1 = IntMatrix.from_rows(c.adjacency_rows(), cols=m) + IntMatrix.identity(m, omega)
    bad = _first_mismatch(lhs1, rhs1)
    if bad:
        i, j, x, y = bad
        return Report("incidence-identities", False, f"R^T R differs at ({i},{j}): {x} != {y}")
    a = IntMatrix.from_rows(g.adjacency_rows(), cols=g.n)
    lhs2 = (r @ r.T).scale(omega - 1)
    rhs2 = a.scale(omega - 1) + IntMatrix.diagonal(g.degrees)
    bad = _first_mismatch(lhs2, rhs2)
    if bad:
        i, j, x, y = bad
        return Report("incidence-identities", False, f"(w-1) R R^T differs at ({i},{j}): {x} != {y}")
    return Report("incidence-identities", True, f"n={g.n} m={m}")


# ---------------------------------------------------------------------------
# when is a line graph clique regular, and when does C_w undo L
# ---------------------------------------------------------------------------

def _nonisolated_degrees(g: Graph) -> set[int]:
    return {d for d in g.degrees if d > 0}


def _triangles(g: Graph) -> list[tuple[int, ...]]:
    return enumerate_cliques(g, 3)


def line_clique_regular_predicate(g: Graph, omega: int) -> bool:
    """Structural test for L(g) being omega-clique regular (omega >= 3).

    Isolated vertices of g do not affect L(g) and are ignored. The line graph
    must also have at least one edge to be clique regular at all.
    """
    if omega < 3:
        raise ValueError("omega must be at least 3")
    if omega >= 4:
        ds = _nonisolated_degrees(g)
        return omega in ds and ds <= {1, omega}
    has_edge_in_line = False
    for comp in g.components():
        if len(comp) == 1:
            continue
        h = g.induced(comp)
        if h.n == 3 and h.m == 3:
            has_edge_in_line = True
            continue
        if _triangles(h):
            return False
        if not set(h.degrees) <= {1, 3}:
            return False
        if 3 in h.degrees:
            has_edge_in_line = True
    return has_edge_in_line


def line_clique_regular_truth(g: Graph, omega: int) -> bool:
    """Direct computation: build L(g) and look for an omega-clique partition."""
    if g.m == 0:
        return False
    lg = line_graph(g)
    if lg.m == 0:
        return False
    return clique_regular_witness(lg, omega) is not None


def line_clique_inverse_predicate(g: Graph, omega: int) -> bool:
    """Structural test for C_omega(L(g)) being isomorphic to a connected g (omega >= 3)."""
    if omega < 3:
        raise ValueError("omega must be at least 3")
    if not g.is_connected():
        raise DisconnectedGraphError("graph must be connected")
    if omega >= 4:
        return set(g.degrees) == {omega}
    degs = g.degrees
    if not set(degs) <= {2, 3}:
        return False
    tris = _triangles(g)
    in_triangle = set(v for t in tris for v in t)
    if any(degs[v] == 2 and v not in in_triangle for v in range(g.n)):
        return False
    if any(sum(1 for v in t if degs[v] == 2) != 1 for t in tris):
        return False
    for s, t in combinations(tris, 2):
        if set(s) & set(t):
            return False
    return True


def line_clique_inverse_truth(g: Graph, omega: int) -> bool:
    """Direct computation: intersection graph of all omega-cliques of L(g) versus g."""
    if g.m == 0:
        return False
    c = clique_intersection_graph(line_graph(g), omega)
    if c is None:
        return False
    return is_isomorphic(c, g) is not None


# ---------------------------------------------------------------------------
# regular clique assemblies are closed under the clique graph
# ---------------------------------------------------------------------------

def predicted_clique_rca(p: RcaParams) -> RcaParams:
    return RcaParams(
        p.n * p.k // (p.omega * (p.omega - 1)),
        p.omega * (p.k // (p.omega - 1) - 1),
        p.k // (p.omega - 1),
    )


def rca_roundtrip(g: Graph) -> Report:
    params = is_rca(g)
    if params is None:
        raise NotRCAError("graph is not a regular clique assembly")
    expected = predicted_clique_rca(params)
    c = clique_graph(g, params.omega)
    if expected.omega == 1:
        # g is a disjoint union of K_omega: the clique graph has no edges
        ok = c.n == expected.n and c.m == 0
        return Report("rca-roundtrip", ok, f"degenerate: C is edgeless on {c.n} vertices",
                      {"expected": expected})
    got = is_rca(c)
    if got != expected:
        return Report("rca-roundtrip", False, f"clique graph is {got}, expected {expected}")
    back = clique_graph(c, expected.omega)
    perm = is_isomorphic(back, g)
    if perm is None:
        return Report("rca-roundtrip", False, "second clique graph not isomorphic to the input")
    return Report("rca-roundtrip", True, f"C is {expected}; round trip closes", {"expected": expected, "perm": perm})

"""Finite simple graphs, clique enumeration and regularity predicates."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from math import isqrt
from typing import Iterable, Iterator

import numpy as np

from .errors import EmptyEdgeSetError, EmptyGraphError, NotRCAError
from .report import Report

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1 with a canonical sorted edge list."""

    n: int
    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        if self.n <= 0:
            raise EmptyGraphError("a graph needs at least one vertex")
        canon = set()
        for e in self.edges:
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={self.n}")
            key = (u, v) if u < v else (v, u)
            if key in canon:
                raise ValueError(f"duplicate edge {key}")
            canon.add(key)
        object.__setattr__(self, "edges", tuple(sorted(canon)))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Iterable[int]]) -> Graph:
        return cls(n, tuple(tuple(e) for e in edges))  # type: ignore[arg-type]

    @classmethod
    def from_adjacency(cls, adj) -> Graph:
        a = np.asarray(adj)
        n = a.shape[0]
        return cls(n, tuple((i, j) for i in range(n) for j in range(i + 1, n) if a[i, j]))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def nbr_bits(self) -> tuple[int, ...]:
        bits = [0] * self.n
        for u, v in self.edges:
            bits[u] |= 1 << v
            bits[v] |= 1 << u
        return tuple(bits)

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(_iter_bits(b)) for b in self.nbr_bits)

    @cached_property
    def edge_index(self) -> dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edges)}

    def degree(self, v: int) -> int:
        return self.nbr_bits[v].bit_count()

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(b.bit_count() for b in self.nbr_bits)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.nbr_bits[u] >> v & 1)

    def common_neighbors(self, u: int, v: int) -> int:
        return (self.nbr_bits[u] & self.nbr_bits[v]).bit_count()

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.int64)
        for u, v in self.edges:
            a[u, v] = a[v, u] = 1
        return a

    def adjacency_rows(self) -> list[list[int]]:
        return self.adjacency_matrix().tolist()

    def components(self) -> list[list[int]]:
        seen = 0
        out = []
        for s in range(self.n):
            if seen >> s & 1:
                continue
            comp = 1 << s
            frontier = comp
            while frontier:
                nxt = 0
                for v in _iter_bits(frontier):
                    nxt |= self.nbr_bits[v]
                frontier = nxt & ~comp
                comp |= nxt
            seen |= comp
            out.append(list(_iter_bits(comp)))
        return out

    def is_connected(self) -> bool:
        return len(self.components()) == 1

    def induced(self, vertices: Iterable[int]) -> Graph:
        vs = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(vs)}
        return Graph(len(vs), tuple((pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos))

    def relabel(self, perm: list[int]) -> Graph:
        """Graph with vertex v renamed perm[v]."""
        return Graph(self.n, tuple((perm[u], perm[v]) for u, v in self.edges))

    def complement(self) -> Graph:
        return Graph(self.n, tuple((u, v) for u, v in combinations(range(self.n), 2) if not self.has_edge(u, v)))


def _iter_bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


# ---------------------------------------------------------------------------
# cliques
# ---------------------------------------------------------------------------

def maximal_cliques(g: Graph) -> list[tuple[int, ...]]:
    """All maximal cliques (Bron-Kerbosch with Tomita pivoting), each sorted."""
    nb = g.nbr_bits
    out: list[tuple[int, ...]] = []

    def expand(r: list[int], p: int, x: int) -> None:
        if not p and not x:
            out.append(tuple(sorted(r)))
            return
        # pivot maximising |P & N(u)|
        best, pivot = -1, 0
        for u in _iter_bits(p | x):
            c = (p & nb[u]).bit_count()
            if c > best:
                best, pivot = c, u
        for v in _iter_bits(p & ~nb[pivot]):
            r.append(v)
            expand(r, p & nb[v], x & nb[v])
            r.pop()
            p &= ~(1 << v)
            x |= 1 << v

    expand([], (1 << g.n) - 1, 0)
    out.sort()
    return out


def enumerate_cliques(g: Graph, omega: int) -> list[tuple[int, ...]]:
    """Every clique of exactly omega vertices, sorted lexicographically."""
    if omega < 1:
        raise ValueError("omega must be positive")
    found = set()
    for c in maximal_cliques(g):
        if len(c) >= omega:
            found.update(combinations(c, omega))
    return sorted(found)


def clique_number(g: Graph) -> int:
    return max(len(c) for c in maximal_cliques(g))


@dataclass(frozen=True)
class CliqueSet:
    """Witness that every edge lies in exactly one omega-clique."""

    omega: int
    cliques: tuple[tuple[int, ...], ...]
    edge_to_clique: dict[Edge, int]

    def clique_of(self, u: int, v: int) -> int:
        return self.edge_to_clique[(u, v) if u < v else (v, u)]

    def cliques_at(self, n: int) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(n)]
        for j, c in enumerate(self.cliques):
            for v in c:
                out[v].append(j)
        return out


def clique_regular_witness(g: Graph, omega: int) -> CliqueSet | None:
    """The omega-clique partition of the edges, or None when it does not exist."""
    if omega < 2:
        raise ValueError("omega must be at least 2")
    if g.m == 0:
        raise EmptyEdgeSetError("an edgeless graph is not clique regular")
    cliques = enumerate_cliques(g, omega)
    owner: dict[Edge, int] = {}
    for j, c in enumerate(cliques):
        for e in combinations(c, 2):
            if e in owner:
                return None
            owner[e] = j
    if len(owner) != g.m:
        return None
    return CliqueSet(omega, tuple(cliques), owner)


def is_clique_regular(g: Graph, omega: int) -> bool:
    return clique_regular_witness(g, omega) is not None


# ---------------------------------------------------------------------------
# regularity
# ---------------------------------------------------------------------------

def regular_degree(g: Graph) -> int | None:
    ds = set(g.degrees)
    return ds.pop() if len(ds) == 1 else None


def is_edge_regular(g: Graph) -> tuple[int, int, int] | None:
    """(n, k, lambda) when g is regular and every edge has lambda common neighbours."""
    k = regular_degree(g)
    if k is None or g.m == 0:
        return None
    lams = {g.common_neighbors(u, v) for u, v in g.edges}
    if len(lams) != 1:
        return None
    return (g.n, k, lams.pop())


@dataclass(frozen=True)
class SrgParams:
    """Parameters of a strongly regular graph.

    The restricted eigenvalues r > s and their multiplicities f, g are filled in
    when they are integers; they are None for conference-type parameters with
    irrational eigenvalues and for complete or edgeless graphs.
    """

    n: int
    k: int
    lam: int
    mu: int
    r: int | None = None
    f: int | None = None
    s: int | None = None
    g: int | None = None

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.n, self.k, self.lam, self.mu)

    def __str__(self) -> str:
        return f"{self.n} {self.k} {self.lam} {self.mu}"


def srg_eigen_data(n: int, k: int, lam: int, mu: int) -> tuple[int, int, int, int] | None:
    """Integral (r, f, s, g) with k > r > s and f, g >= 1, or None."""
    disc = (lam - mu) ** 2 + 4 * (k - mu)
    if disc <= 0:
        return None
    root = isqrt(disc)
    if root * root != disc:
        return None
    if (lam - mu + root) % 2:
        return None
    r = (lam - mu + root) // 2
    s = (lam - mu - root) // 2
    if r >= k:
        return None
    num_f = -k - (n - 1) * s
    if num_f % (r - s):
        return None
    f = num_f // (r - s)
    g = n - 1 - f
    if f <= 0 or g <= 0:
        return None
    return (r, f, s, g)


def is_strongly_regular(g: Graph) -> SrgParams | None:
    """Srg parameters when g is strongly regular and neither complete nor edgeless."""
    k = regular_degree(g)
    if k is None:
        return None
    lams = {g.common_neighbors(u, v) for u, v in g.edges}
    mus = {g.common_neighbors(u, v) for u, v in combinations(range(g.n), 2) if not g.has_edge(u, v)}
    if len(lams) > 1 or len(mus) > 1:
        return None
    lam = lams.pop() if lams else 0
    mu = mus.pop() if mus else 0
    if k == 0 or k == g.n - 1:
        return None
    eig = srg_eigen_data(g.n, k, lam, mu)
    if eig is None:
        return SrgParams(g.n, k, lam, mu)
    r, f, s, gg = eig
    return SrgParams(g.n, k, lam, mu, r, f, s, gg)


def srg_matrix_identity(g: Graph, params: SrgParams) -> bool:
    """A^2 = k I + lambda A + mu (J - I - A), checked with integer matrices."""
    a = g.adjacency_matrix()
    n = g.n
    eye = np.eye(n, dtype=np.int64)
    j = np.ones((n, n), dtype=np.int64)
    rhs = params.k * eye + params.lam * a + params.mu * (j - eye - a)
    return bool(np.array_equal(a @ a, rhs))


# ---------------------------------------------------------------------------
# regular clique assemblies
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RcaParams:
    n: int
    k: int
    omega: int

    def __str__(self) -> str:
        return f"rca({self.n},{self.k},{self.omega})"


def _rca_direct(g: Graph) -> RcaParams | None:
    """Regular, every edge in exactly one maximal clique, all maximal cliques of one size >= 2."""
    k = regular_degree(g)
    if k is None or g.m == 0:
        return None
    maxi = maximal_cliques(g)
    sizes = {len(c) for c in maxi}
    if len(sizes) != 1:
        return None
    w = sizes.pop()
    if w < 2:
        return None
    seen: set[Edge] = set()
    for c in maxi:
        for e in combinations(c, 2):
            if e in seen:
                return None
            seen.add(e)
    if len(seen) != g.m:
        return None
    return RcaParams(g.n, k, w)


def _rca_via_edge_regular(g: Graph) -> RcaParams | None:
    """omega(g)-clique regular and edge regular with lambda = omega - 2."""
    if g.m == 0:
        return None
    w = clique_number(g)
    erg = is_edge_regular(g)
    if erg is None or erg[2] != w - 2:
        return None
    if clique_regular_witness(g, w) is None:
        return None
    return RcaParams(g.n, erg[1], w)


def is_rca(g: Graph) -> RcaParams | None:
    """Regular clique assembly parameters, decided by two independent routes."""
    a = _rca_direct(g)
    b = _rca_via_edge_regular(g)
    if a != b:
        raise AssertionError(f"rca routes disagree: {a} vs {b}")
    return a


def nonadjacent_common_neighbor_bound(g: Graph) -> Report:
    """Common neighbours of non-adjacent vertices never exceed k/(omega-1) in an rca."""
    params = is_rca(g)
    if params is None:
        raise NotRCAError("graph is not a regular clique assembly")
    bound = Fraction(params.k, params.omega - 1)
    pairs = [(u, v) for u, v in combinations(range(g.n), 2) if not g.has_edge(u, v)]
    if not pairs:
        return Report("nonadjacent-common-neighbours", True, "vacuous: no non-adjacent pairs",
                      {"max": None, "bound": bound})
    worst = max(g.common_neighbors(u, v) for u, v in pairs)
    ok = worst <= bound
    return Report("nonadjacent-common-neighbours", ok, f"max {worst} vs bound {bound}",
                  {"max": worst, "bound": bound})

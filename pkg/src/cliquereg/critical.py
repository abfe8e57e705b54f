"""Critical groups, spanning forests, and the maps between a graph and its clique subdivision."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .graph import CliqueSet, Graph, regular_degree
from .intlinalg import IntMatrix, Lattice, det, integer_kernel, modular_det, snf_diagonal
from .report import Report
from .transforms import clique_graph, clique_subdivision, require_witness


def laplacian(g: Graph) -> IntMatrix:
    rows = [[0] * g.n for _ in range(g.n)]
    for u, v in g.edges:
        rows[u][v] = rows[v][u] = -1
    for v, d in enumerate(g.degrees):
        rows[v][v] = d
    return IntMatrix.from_rows(rows, cols=g.n)


@dataclass(frozen=True)
class AbelianGroupInvariants:
    """Z^free_rank plus cyclic factors Z/d_i with d_1 | d_2 | ... (all d_i > 1)."""

    free_rank: int
    torsion: tuple[int, ...]

    @classmethod
    def from_diagonal(cls, diag: list[int], ambient: int) -> AbelianGroupInvariants:
        nonzero = [abs(d) for d in diag if d != 0]
        return cls(ambient - len(nonzero), tuple(d for d in nonzero if d > 1))

    @property
    def order(self) -> int:
        out = 1
        for d in self.torsion:
            out *= d
        return out

    @property
    def exponent(self) -> int:
        return self.torsion[-1] if self.torsion else 1

    def __str__(self) -> str:
        return f"rank {self.free_rank}; " + " ".join(str(d) for d in self.torsion)


def critical_group(g: Graph) -> AbelianGroupInvariants:
    """Cokernel of the Laplacian: free part of rank c, torsion part the critical group."""
    inv = AbelianGroupInvariants.from_diagonal(snf_diagonal(laplacian(g)), g.n)
    if inv.free_rank != len(g.components()):
        raise AssertionError("Laplacian cokernel rank differs from component count")
    return inv


def spanning_forest_count(g: Graph) -> int:
    """Product over components of a reduced Laplacian determinant."""
    lap = laplacian(g).to_lists()
    total = 1
    for comp in g.components():
        if len(comp) == 1:
            continue
        keep = comp[1:]
        sub = [[lap[i][j] for j in keep] for i in keep]
        total *= det(sub) if len(keep) <= 40 else modular_det(sub, psd=True)
    return total


# ---------------------------------------------------------------------------
# spanning-forest counts of the subdivision and the clique graph
# ---------------------------------------------------------------------------

def verify_order_theorem(g: Graph, omega: int) -> Report:
    """kappa(S) = w^(m-n+c) kappa(g); and for k-regular g also
    kappa(C) = (k/(w-1))^(m-n-c) w^(m-n+c) kappa(g). Compared as exact rationals."""
    w = require_witness(g, omega)
    n, m, c = g.n, len(w.cliques), len(g.components())
    kg = spanning_forest_count(g)
    ks = spanning_forest_count(clique_subdivision(g, omega, w))
    e = m - n + c
    data = {"n": n, "m": m, "c": c, "kappa": kg, "kappa_S": ks}
    if Fraction(ks) != Fraction(omega) ** e * kg:
        return Report("order-subdivision", False, f"kappa(S)={ks} but w^{e} kappa={Fraction(omega) ** e * kg}", data)
    k = regular_degree(g)
    if k is None:
        return Report("order-theorem", True, f"subdivision identity holds (m-n+c={e}); g not regular", data)
    kc = spanning_forest_count(clique_graph(g, omega, w))
    data["kappa_C"] = kc
    rhs = Fraction(k, omega - 1) ** (m - n - c) * Fraction(omega) ** e * kg
    if Fraction(kc) != rhs:
        return Report("order-clique", False, f"kappa(C)={kc} but formula gives {rhs}", data)
    return Report("order-theorem", True, f"both identities hold (m-n+c={e})", data)


# ---------------------------------------------------------------------------
# the oriented edge lattice: bonds and cycles
# ---------------------------------------------------------------------------

@dataclass
class OrientedEdgeLattice:
    """Z^E with every edge oriented low -> high; bond and fundamental-cycle generators."""

    graph: Graph
    bonds: list[list[int]] = field(init=False)
    cycles: list[list[int]] = field(init=False)

    def __post_init__(self) -> None:
        g = self.graph
        idx = g.edge_index
        ne = g.m
        self.bonds = []
        for v in range(g.n):
            b = [0] * ne
            for u in g.neighbors[v]:
                b[idx[(min(u, v), max(u, v))]] = 1 if v < u else -1
            self.bonds.append(b)
        self.cycles = self._fundamental_cycles()

    def _signed(self, x: int, y: int) -> tuple[int, int]:
        """Index and sign of the oriented edge (x, y)."""
        if x < y:
            return self.graph.edge_index[(x, y)], 1
        return self.graph.edge_index[(y, x)], -1

    def _fundamental_cycles(self) -> list[list[int]]:
        g = self.graph
        parent = [-1] * g.n
        depth = [-1] * g.n
        tree: set[tuple[int, int]] = set()
        for root in range(g.n):
            if depth[root] >= 0:
                continue
            depth[root] = 0
            queue = deque([root])
            while queue:
                v = queue.popleft()
                for u in g.neighbors[v]:
                    if depth[u] < 0:
                        depth[u] = depth[v] + 1
                        parent[u] = v
                        tree.add((min(u, v), max(u, v)))
                        queue.append(u)
        cycles = []
        for x, y in g.edges:
            if (x, y) in tree:
                continue
            # cycle: x -> y, then tree path y -> x
            vec = [0] * g.m
            i, s = self._signed(x, y)
            vec[i] += s
            a, b = y, x
            up_a, up_b = [], []
            while a != b:
                if depth[a] >= depth[b]:
                    up_a.append((a, parent[a]))
                    a = parent[a]
                else:
                    up_b.append((parent[b], b))
                    b = parent[b]
            for p, q in up_a + list(reversed(up_b)):
                i, s = self._signed(p, q)
                vec[i] += s
            cycles.append(vec)
        return cycles

    def generators(self) -> list[list[int]]:
        return self.bonds + self.cycles

    def orthogonal(self) -> bool:
        return all(sum(a * b for a, b in zip(bv, zv)) == 0 for bv in self.bonds for zv in self.cycles)

    def lattice(self, modulus: int | None = None) -> Lattice:
        return Lattice(self.graph.m, modulus).add_all(self.generators())


def critical_group_via_edges(g: Graph) -> AbelianGroupInvariants:
    """Z^E / (B + Z) from the SNF of the bond|cycle generator matrix."""
    if g.m == 0:
        return AbelianGroupInvariants(0, ())
    oel = OrientedEdgeLattice(g)
    gens = oel.generators()
    mat = IntMatrix.from_rows(gens, cols=g.m).T
    return AbelianGroupInvariants.from_diagonal(snf_diagonal(mat), g.m)


# ---------------------------------------------------------------------------
# h : Z^{E_S} -> Z^E and its adjoint
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SubdivisionMaps:
    """Matrix of h (rows: edges of g, columns: edges of S) with the graphs it refers to."""

    graph: Graph
    subdivision: Graph
    witness: CliqueSet
    h: IntMatrix

    @property
    def omega(self) -> int:
        return self.witness.omega


def _s_edge(m: int, clique: int, v: int) -> tuple[int, int]:
    # cliques are 0..m-1, vertices m..m+n-1, so (clique, vertex) is already low -> high
    return (clique, m + v)


def h_matrix(g: Graph, omega: int) -> SubdivisionMaps:
    """h sends (v, C) to the sum of (v, u) over u in C - v.

    The basis edge of S is oriented clique -> vertex, i.e. it is -(v, C).
    The adjoint h^T, (x, y) -> (x, C_xy) + (C_xy, y), is built separately and
    checked against the transpose.
    """
    w = require_witness(g, omega)
    s = clique_subdivision(g, omega, w)
    m = len(w.cliques)
    e_idx, s_idx = g.edge_index, s.edge_index
    cols = [[0] * s.m for _ in range(g.m)]
    for j, clique in enumerate(w.cliques):
        for v in clique:
            col = s_idx[_s_edge(m, j, v)]
            for u in clique:
                if u == v:
                    continue
                sign = 1 if v < u else -1
                cols[e_idx[(min(u, v), max(u, v))]][col] -= sign
    h = IntMatrix.from_rows(cols, cols=s.m)

    adj = [[0] * g.m for _ in range(s.m)]
    for (x, y), i in e_idx.items():
        j = w.clique_of(x, y)
        adj[s_idx[_s_edge(m, j, x)]][i] -= 1  # (x, C) = -(C, x)
        adj[s_idx[_s_edge(m, j, y)]][i] += 1  # (C, y)
    if IntMatrix.from_rows(adj, cols=g.m) != h.T:
        raise AssertionError("h and h^T are not adjoint")
    return SubdivisionMaps(g, s, w, h)


# ---------------------------------------------------------------------------
# the induced maps and multiplication by omega
# ---------------------------------------------------------------------------

def _check_images(name: str, mat: IntMatrix, gens: list[list[int]], target: Lattice) -> Report | None:
    for t, v in enumerate(gens):
        if mat.apply(v) not in target:
            return Report(name, False, f"generator {t} leaves the target lattice")
    return None


def verify_induced_and_scalar(g: Graph, omega: int) -> Report:
    """h(B_S + Z_S) in B + Z, h^T(B + Z) in B_S + Z_S, and h h^T, h^T h are omega mod the lattices."""
    maps = h_matrix(g, omega)
    h, ht = maps.h, maps.h.T
    og, os_ = OrientedEdgeLattice(g), OrientedEdgeLattice(maps.subdivision)
    if not (og.orthogonal() and os_.orthogonal()):
        return Report("bond-cycle", False, "bond and cycle generators are not orthogonal")
    lat = og.lattice(spanning_forest_count(g))
    lat_s = os_.lattice(spanning_forest_count(maps.subdivision))
    bad = (_check_images("h-induced", h, os_.generators(), lat)
           or _check_images("hT-induced", ht, og.generators(), lat_s))
    if bad:
        return bad
    ne, ns = g.m, maps.subdivision.m
    hht = (h @ ht) - IntMatrix.identity(ne, omega)
    hth = (ht @ h) - IntMatrix.identity(ns, omega)
    unit = lambda d, i: [1 if j == i else 0 for j in range(d)]  # noqa: E731
    bad = (_check_images("h-hT-scalar", hht, [unit(ne, i) for i in range(ne)], lat)
           or _check_images("hT-h-scalar", hth, [unit(ns, i) for i in range(ns)], lat_s))
    if bad:
        return bad
    return Report("induced-and-scalar", True, f"|E|={ne} |E_S|={ns}")


# ---------------------------------------------------------------------------
# kernels of the induced maps
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class KernelResult:
    direction: str  # "h" or "hT"
    excess: int  # m - n + c
    group: AbelianGroupInvariants
    omega: int

    @property
    def conjecture_holds(self) -> bool:
        e = abs(self.excess)
        return self.group.torsion == (self.omega,) * e if self.omega > 1 else not self.group.torsion


def _solve_upper(basis: list[list[int]], row: list[int]) -> list[int]:
    """Integer x with x @ basis = row, basis square upper triangular."""
    n = len(basis)
    x = [0] * n
    rest = list(row)
    for j in range(n):
        q, r = divmod(rest[j], basis[j][j])
        if r:
            raise AssertionError("vector is not in the lattice")
        x[j] = q
        if q:
            rest = [a - q * b for a, b in zip(rest, basis[j])]
    return x


def _quotient(sup: Lattice, sub: Lattice) -> AbelianGroupInvariants:
    """Invariants of sup / sub for full-rank lattices sub <= sup."""
    big = sup.basis_rows()
    coords = [_solve_upper(big, r) for r in sub.basis_rows()]
    return AbelianGroupInvariants.from_diagonal(snf_diagonal(coords), len(big))


def _preimage(mat: IntMatrix, target: Lattice, modulus: int) -> Lattice:
    """{y : mat y in target} as a lattice (containing modulus * Z^cols)."""
    tgt = target.basis_rows()
    # [mat | -T^T] (y, z) = 0
    rows = [list(mat.to_lists()[i]) + [-t[i] for t in tgt] for i in range(mat.rows)]
    ker = integer_kernel(IntMatrix.from_rows(rows, cols=mat.cols + len(tgt)))
    return Lattice(mat.cols, modulus).add_all(v[:mat.cols] for v in ker)


def kernel_invariants(g: Graph, omega: int) -> KernelResult:
    """Structure of ker(h) when m - n + c >= 0, otherwise of ker(h^T).

    Hard checks: omega^|m-n+c| divides the kernel order and every invariant
    factor divides omega.
    """
    maps = h_matrix(g, omega)
    n, m, c = g.n, len(maps.witness.cliques), len(g.components())
    excess = m - n + c
    kg = spanning_forest_count(g)
    ks = spanning_forest_count(maps.subdivision)
    lat = OrientedEdgeLattice(g).lattice(kg)
    lat_s = OrientedEdgeLattice(maps.subdivision).lattice(ks)
    if excess >= 0:
        direction = "h"
        group = _quotient(_preimage(maps.h, lat, ks), lat_s)
        expected_order = Fraction(ks, kg)
    else:
        direction = "hT"
        group = _quotient(_preimage(maps.h.T, lat_s, kg), lat)
        expected_order = Fraction(kg, ks)
    if group.free_rank:
        raise AssertionError("kernel has a free part")
    if group.order % omega ** abs(excess):
        raise AssertionError(f"omega^{abs(excess)} does not divide kernel order {group.order}")
    if any(omega % d for d in group.torsion):
        raise AssertionError(f"kernel factor does not divide omega: {group.torsion}")
    # image order divides the target order, so the kernel order is a multiple of the ratio
    if (group.order / expected_order).denominator != 1:
        raise AssertionError("kernel order inconsistent with spanning-forest counts")
    return KernelResult(direction, excess, group, omega)


def group_gcd_check(inv: AbelianGroupInvariants) -> bool:
    """Invariant factors form a divisibility chain."""
    t = inv.torsion
    return all(gcd(a, b) == a for a, b in zip(t, t[1:]))

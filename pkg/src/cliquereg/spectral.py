"""Spectra of clique regular graphs, strongly regular parameters and closed walks."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

import numpy as np

from .errors import BoringParametersError, HypothesisError, ParameterError
from .graph import Graph, SrgParams, regular_degree, srg_eigen_data
from .intlinalg import IntMatrix
from .poly import IntPoly, char_poly
from .report import Report
from .transforms import clique_graph, line_graph, require_witness

CLUSTER_RADIUS = 1e-6
SNAP_RADIUS = 1e-6

Number = int | float | Fraction


@dataclass(frozen=True)
class Spectrum:
    """(eigenvalue, multiplicity) pairs, eigenvalues in decreasing order."""

    pairs: tuple[tuple[Number, int], ...]

    @property
    def size(self) -> int:
        return sum(m for _, m in self.pairs)

    def values(self) -> list[float]:
        out: list[float] = []
        for v, m in self.pairs:
            out.extend([float(v)] * m)
        return out

    def __str__(self) -> str:
        return ", ".join(f"{v}^{m}" for v, m in self.pairs)


def _snap(x: float) -> Number:
    r = round(x)
    return int(r) if abs(x - r) <= SNAP_RADIUS else x


def spectrum_from_values(values) -> Spectrum:
    vals = sorted(float(v) for v in values)
    groups: list[list[float]] = []
    for v in vals:
        if groups and v - groups[-1][-1] <= CLUSTER_RADIUS:
            groups[-1].append(v)
        else:
            groups.append([v])
    pairs = [(_snap(sum(g) / len(g)), len(g)) for g in groups]
    pairs.sort(key=lambda p: -float(p[0]))
    return Spectrum(tuple(pairs))


def numeric_eigenvalues(g: Graph) -> np.ndarray:
    return np.linalg.eigvalsh(g.adjacency_matrix().astype(float))


def numeric_spectrum(g: Graph) -> Spectrum:
    return spectrum_from_values(numeric_eigenvalues(g))


def spectra_match(a: Spectrum, b: Spectrum, tol: float = 1e-9) -> bool:
    va, vb = sorted(a.values()), sorted(b.values())
    if len(va) != len(vb):
        return False
    # clustering snaps to the mean, so compare against the clustering radius
    slack = max(tol, CLUSTER_RADIUS)
    return all(abs(x - y) <= slack for x, y in zip(va, vb))


def adjacency_charpoly(g: Graph) -> IntPoly:
    return char_poly(IntMatrix.from_rows(g.adjacency_rows(), cols=g.n))


# ---------------------------------------------------------------------------
# transfer from a graph to its clique graph
# ---------------------------------------------------------------------------

def _clique_shift(k: int, omega: int) -> int:
    if k % (omega - 1):
        raise ParameterError(f"omega-1 = {omega - 1} does not divide k = {k}")
    return k // (omega - 1)


def predicted_clique_spectrum(spec: Spectrum, k: int, omega: int, n: int) -> Spectrum:
    """Shift every eigenvalue by k/(omega-1) - omega and add -omega with multiplicity m - n."""
    per_vertex = _clique_shift(k, omega)
    if (n * k) % (omega * (omega - 1)):
        raise ParameterError("omega(omega-1) does not divide nk")
    m = n * k // (omega * (omega - 1))
    shift = per_vertex - omega
    pairs: list[list] = [[_snap(float(v) + shift) if isinstance(v, float) else v + shift, a] for v, a in spec.pairs]
    extra = m - n
    if extra:
        for p in pairs:
            if abs(float(p[0]) + omega) <= SNAP_RADIUS:
                p[1] += extra
                break
        else:
            pairs.append([-omega, extra])
    if any(a < 0 for _, a in pairs):
        raise ParameterError("shifted spectrum has a negative multiplicity")
    out = [(v, a) for v, a in pairs if a > 0]
    out.sort(key=lambda p: -float(p[0]))
    return Spectrum(tuple(out))


def clique_graph_charpoly_identity(g: Graph, omega: int) -> Report:
    """p(C; x) (x+w)^max(0,n-m) == (x+w)^max(0,m-n) p(G; x + w - k/(w-1)), exactly."""
    k = regular_degree(g)
    if k is None:
        raise HypothesisError("graph is not regular")
    w = require_witness(g, omega)
    c = clique_graph(g, omega, w)
    n, m = g.n, c.n
    shift = omega - _clique_shift(k, omega)
    factor = IntPoly((omega, 1))
    lhs = adjacency_charpoly(c) * factor ** max(0, n - m)
    rhs = factor ** max(0, m - n) * adjacency_charpoly(g).shift(shift)
    ok = lhs == rhs
    msg = f"degree {lhs.degree}, m-n={m - n}" if ok else "polynomials differ"
    return Report("charpoly-transfer", ok, msg, {"lhs": lhs, "rhs": rhs})


def eigen_bounds_check(g: Graph, omega: int, tol: float = 1e-9) -> Report:
    """Interlacing bounds on the clique graph spectrum and the smallest-eigenvalue floor."""
    w = require_witness(g, omega)
    c = clique_graph(g, omega, w)
    lg = line_graph(g)
    mu = numeric_eigenvalues(lg)
    lam_c = numeric_eigenvalues(c)
    scale = omega / (omega - 1)
    lo = scale * (mu.min() / 2 - omega + 2)
    hi = scale * (mu.max() / 2 - omega + 2)
    big_delta = max(g.degrees)
    lo2, hi2 = -omega, omega * (big_delta / (omega - 1) - 1)
    for x in lam_c:
        if x < lo - tol or x > hi + tol:
            return Report("eigen-bounds", False, f"clique eigenvalue {x} outside [{lo}, {hi}]")
        if x < lo2 - tol or x > hi2 + tol:
            return Report("eigen-bounds", False, f"clique eigenvalue {x} outside [{lo2}, {hi2}]")
    data = {"line_bounds": (lo, hi), "degree_bounds": (lo2, hi2)}
    k = regular_degree(g)
    if k is not None:
        floor = -k / (omega - 1)
        ev = numeric_eigenvalues(g)
        smallest = ev.min()
        data["smallest"] = float(smallest)
        if smallest < floor - tol:
            return Report("eigen-bounds", False, f"smallest eigenvalue {smallest} below {floor}")
        if k < omega * (omega - 1):
            if abs(smallest - floor) > tol:
                return Report("eigen-bounds", False, f"smallest eigenvalue {smallest} should equal {floor}")
            mult = int(np.sum(np.abs(ev - floor) <= CLUSTER_RADIUS))
            need = g.n - Fraction(g.n * k, omega * (omega - 1))
            if mult < need:
                return Report("eigen-bounds", False, f"multiplicity {mult} of {floor} below {need}")
    return Report("eigen-bounds", True, f"{c.n} clique eigenvalues within bounds", data)


# ---------------------------------------------------------------------------
# strongly regular parameters
# ---------------------------------------------------------------------------

def check_counting_identity(n: int, k: int, lam: int, mu: int) -> None:
    if min(n, k, lam, mu) < 0 or k >= n:
        raise ParameterError(f"parameters out of range: {(n, k, lam, mu)}")
    if (n - k - 1) * mu != k * (k - lam - 1):
        raise ParameterError(f"(n-k-1)mu != k(k-lambda-1) for {(n, k, lam, mu)}")


def srg_spectrum(n: int, k: int, lam: int, mu: int) -> tuple[int, int, int, int] | None:
    """(r, f, s, g) when the implied spectrum is integral with positive multiplicities."""
    check_counting_identity(n, k, lam, mu)
    return srg_eigen_data(n, k, lam, mu)


def feasible_params(n: int, k: int, lam: int, mu: int) -> SrgParams | None:
    eig = srg_spectrum(n, k, lam, mu)
    if eig is None:
        return None
    r, f, s, g = eig
    return SrgParams(n, k, lam, mu, r, f, s, g)


def satisfies_absolute_bound(p: SrgParams) -> bool:
    """n <= f(f+3)/2 and n <= g(g+3)/2 (only meaningful when s != -1)."""
    if p.f is None or p.g is None:
        raise ParameterError("absolute bound needs integral multiplicities")
    return 2 * p.n <= p.f * (p.f + 3) and 2 * p.n <= p.g * (p.g + 3)


def is_boring(p: SrgParams) -> bool:
    """Disjoint union of cliques (mu = 0) or a complete multipartite graph (mu = k)."""
    return p.mu == 0 or p.mu == p.k


def clique_srg_condition(p: SrgParams, omega: int) -> bool:
    """s = -k/(omega-1) or k = omega(omega-1)."""
    if p.s is not None and p.s * (omega - 1) == -p.k:
        return True
    return p.k == omega * (omega - 1)


def clique_srg_classification(p: SrgParams, omega: int) -> SrgParams | None:
    """Parameters of the clique graph when it is strongly regular, else None."""
    if is_boring(p):
        raise BoringParametersError(f"boring parameters {p.as_tuple()}")
    per_vertex = _clique_shift(p.k, omega)
    if (p.n * p.k) % (omega * (omega - 1)):
        raise ParameterError("omega(omega-1) does not divide nk")
    if not clique_srg_condition(p, omega):
        return None
    m = p.n * p.k // (omega * (omega - 1))
    k_star = omega * (per_vertex - 1)
    c = per_vertex - omega
    # eigenvalues of the clique graph are r+c and s+c; use only their sum and product
    sum_rs = (p.lam - p.mu) + 2 * c
    prod_rs = -(p.k - p.mu) + c * (p.lam - p.mu) + c * c
    mu_star = k_star + prod_rs
    lam_star = mu_star + sum_rs
    if p.lam == omega - 2:
        simple = (per_vertex - 2, p.mu + omega - per_vertex)
        if simple != (lam_star, mu_star):
            raise AssertionError(f"clique parameter formulas disagree: {simple} vs {(lam_star, mu_star)}")
    eig = srg_eigen_data(m, k_star, lam_star, mu_star)
    if eig is None:
        return SrgParams(m, k_star, lam_star, mu_star)
    r, f, s, g = eig
    return SrgParams(m, k_star, lam_star, mu_star, r, f, s, g)


# ---------------------------------------------------------------------------
# closed walks in the clique graph of an srg
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CliqueSpectrumData:
    m: int
    d: int
    r: int
    s: int
    f: int
    g: int
    extra: int  # multiplicity m - n of -omega
    omega: int


def clique_spectrum_data(p: SrgParams, omega: int) -> CliqueSpectrumData:
    if p.r is None or p.s is None or p.f is None or p.g is None:
        raise ParameterError("closed walk counts need an integral spectrum")
    per_vertex = _clique_shift(p.k, omega)
    if (p.n * p.k) % (omega * (omega - 1)):
        raise ParameterError("omega(omega-1) does not divide nk")
    m = p.n * p.k // (omega * (omega - 1))
    return CliqueSpectrumData(
        m=m,
        d=omega * (per_vertex - 1),
        r=per_vertex + p.r - omega,
        s=per_vertex + p.s - omega,
        f=p.f,
        g=p.g,
        extra=m - p.n,
        omega=omega,
    )


def walk_expression(p: SrgParams, omega: int, ell: int) -> int:
    """Trace of A_C^ell: d^ell + f r~^ell + g s~^ell + (m-n)(-omega)^ell."""
    if ell < 0:
        raise ValueError("ell must be nonnegative")
    c = clique_spectrum_data(p, omega)
    return c.d ** ell + c.f * c.r ** ell + c.g * c.s ** ell + c.extra * (-omega) ** ell


def closed_walk_count(p: SrgParams, omega: int, ell: int) -> int:
    """Closed walks of length ell at any vertex of the clique graph."""
    if ell < 1:
        raise ValueError("ell must be at least 1")
    c = clique_spectrum_data(p, omega)
    total = walk_expression(p, omega, ell)
    q, rem = divmod(total, c.m)
    if rem:
        raise ArithmeticError(f"walk count for ell={ell} is not an integer")
    return q


def triangle_quadrangle_per_vertex(p: SrgParams, omega: int) -> tuple[int, int]:
    """(triangles, quadrangles) through each vertex of the clique graph."""
    c = clique_spectrum_data(p, omega)
    t3 = closed_walk_count(p, omega, 3)
    t4 = closed_walk_count(p, omega, 4)
    if t3 % 2 or (t4 - 2 * c.d * c.d + c.d) % 2:
        raise ArithmeticError("odd closed-walk counts")
    return t3 // 2, (t4 - 2 * c.d * c.d + c.d) // 2


def walk_divisibility_check(p: SrgParams, omega: int, ell_max: int) -> Report:
    c = clique_spectrum_data(p, omega)
    for ell in range(ell_max + 1):
        total = walk_expression(p, omega, ell)
        if ell == 0 and total != c.m:
            return Report("walk-divisibility", False, f"ell=0 gives {total}, expected m={c.m}")
        if total % c.m:
            return Report("walk-divisibility", False, f"m={c.m} does not divide the ell={ell} sum", {"ell": ell})
    return Report("walk-divisibility", True, f"m={c.m} divides every sum for ell<={ell_max}")


# direct counts used to validate the spectral formulas

def triangles_at(g: Graph, v: int) -> int:
    nb = g.nbr_bits
    return sum((nb[u] & nb[v]).bit_count() for u in g.neighbors[v]) // 2


def quadrangles_at(g: Graph, v: int) -> int:
    nb = g.nbr_bits
    return sum(comb((nb[v] & nb[w]).bit_count(), 2) for w in range(g.n) if w != v)


def trace_power(g: Graph, ell: int) -> int:
    a = g.adjacency_matrix().astype(object)
    out = np.identity(g.n, dtype=object)
    for _ in range(ell):
        out = out.dot(a)
    return int(np.trace(out))

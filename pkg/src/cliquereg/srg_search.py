"""Feasible locally linear srg parameters and the tau/rho system of their clique graphs."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import ceil, comb, floor
from typing import Sequence

from sympy import factorint

from .errors import ParameterError
from .graph import Graph, SrgParams
from .intlinalg import IntMatrix, rank, solve_integer
from .spectral import clique_spectrum_data, closed_walk_count, feasible_params, triangle_quadrangle_per_vertex

VARIABLES = ("tau0", "tau1", "tau2", "tau3",
             "rho00", "rho01", "rho02", "rho11", "rho12", "rho13", "rho22", "rho23", "rho33")
RHO_INDEX = {(0, 0): 4, (0, 1): 5, (0, 2): 6, (1, 1): 7, (1, 2): 8, (1, 3): 9,
             (2, 2): 10, (2, 3): 11, (3, 3): 12}


def _divisors_from_factorization(fac: dict[int, int]) -> list[int]:
    divs = [1]
    for p, e in fac.items():
        divs = [d * p ** i for d in divs for i in range(e + 1)]
    return sorted(divs)


def mu_set(k: int) -> list[int]:
    """Positive divisors of k(k-2) below k, from the factorizations of k and k-2."""
    if k < 3:
        raise ParameterError("k must be at least 3")
    fac: dict[int, int] = dict(factorint(k))
    for p, e in factorint(k - 2).items():
        fac[p] = fac.get(p, 0) + e
    return [d for d in _divisors_from_factorization(fac) if d < k]


def enumerate_feasible_locally_linear(max_k: int) -> list[SrgParams]:
    """Every feasible (n, k, 1, mu) with 3 <= k <= max_k, sorted by (k, mu)."""
    if max_k < 3:
        raise ParameterError("K must be at least 3")
    out = []
    for k in range(3, max_k + 1):
        for mu in mu_set(k):
            n = k * (k - 2) // mu + k + 1
            p = feasible_params(n, k, 1, mu)
            if p is not None:
                out.append(p)
    return out


def enumerate_feasible_naive(max_k: int) -> list[tuple[int, int, int, int, int, int, int, int]]:
    """Slow independent route: scan every (k, mu), find integer eigenvalues from divisors of k - mu."""
    out = []
    for k in range(3, max_k + 1):
        for mu in range(1, k):
            if (k * (k - 2)) % mu:
                continue
            n = k * (k - 2) // mu + k + 1
            # r, s are the roots of x^2 - (1 - mu) x - (k - mu); s negative, -s divides k - mu
            for t in range(1, k - mu + 1):
                if (k - mu) % t:
                    continue
                s = -t
                r = (1 - mu) - s
                if r * s != mu - k or not (k > r > s):
                    continue
                f = Fraction(-k - (n - 1) * s, r - s)
                g = Fraction(n - 1) - f
                if f.denominator == 1 and g.denominator == 1 and f > 0 and g > 0:
                    out.append((n, k, 1, mu, r, int(f), s, int(g)))
    return out


def star_count(d: int) -> int:
    """Closed 5-walks at v staying inside v and its neighbourhood: d^4/27 + d^3/3 - d^2 - d."""
    if d % 3:
        raise ParameterError("d must be divisible by 3")
    return d ** 4 // 27 + d ** 3 // 3 - d * d - d


def star_count_matrix(d: int) -> int:
    """(B^5)[0,0] for the adjacency matrix of v joined to three disjoint K_{d/3}."""
    if d % 3:
        raise ParameterError("d must be divisible by 3")
    b = d // 3
    size = d + 1
    rows = [[0] * size for _ in range(size)]
    for i in range(1, size):
        rows[0][i] = rows[i][0] = 1
    for block in range(3):
        lo = 1 + block * b
        for i in range(lo, lo + b):
            for j in range(lo, lo + b):
                if i != j:
                    rows[i][j] = 1
    mat = IntMatrix.from_rows(rows, cols=size)
    power = mat
    for _ in range(4):
        power = power @ mat
    return power[0, 0]


@dataclass(frozen=True)
class TauRhoSystem:
    params: SrgParams
    coeffs: IntMatrix
    rhs: tuple[int, ...]
    m: int
    d: int
    omega_c: int
    delta: int
    xi: int
    theta5: int
    star: int

    def residual(self, x: Sequence[int]) -> list[int]:
        return [lhs - r for lhs, r in zip(self.coeffs.apply(x), self.rhs)]

    def is_satisfied(self, x: Sequence[int]) -> bool:
        return len(x) == len(VARIABLES) and not any(self.residual(x))


def build_tau_rho_system(p: SrgParams, check_rank: bool = True) -> TauRhoSystem:
    """The 12 linear equations in (tau_i, rho_ij) satisfied around any vertex of C_3."""
    if p.lam != 1:
        raise ParameterError("system is defined for lambda = 1")
    if p.k % 2:
        raise ParameterError("k must be even when lambda = 1")
    if p.r is None:
        raise ParameterError("parameters must be feasible")
    c = clique_spectrum_data(p, 3)
    m, d = c.m, c.d
    third = d // 3
    delta, xi = triangle_quadrangle_per_vertex(p, 3)
    theta5 = closed_walk_count(p, 3, 5)
    star = star_count(d)
    mu = p.mu
    pair_term = xi - comb(third - 1, 2) * d

    rows: list[list[int]] = []
    rhs: list[int] = []

    def row(entries: dict[int, int], value: int) -> None:
        r = [0] * len(VARIABLES)
        for j, v in entries.items():
            r[j] += v
        rows.append(r)
        rhs.append(value)

    row({0: 1, 1: 1, 2: 1, 3: 1}, m - d - 1)
    row({1: 1, 2: 2, 3: 3}, d * (d - 1) - 2 * delta)
    row({2: 1, 3: 3}, pair_term)

    def rho(i: int, j: int) -> int | None:
        key = (min(i, j), max(i, j))
        return RHO_INDEX.get(key)

    # edges leaving T_i
    for i in range(4):
        entries = {i: d - i}
        for j in range(4):
            idx = rho(i, j)
            if idx is not None:
                entries[idx] = entries.get(idx, 0) - (2 if i == j else 1)
        row(entries, 0)
    # 3-walks from T_i to v
    for i in range(4):
        entries = {i: 9 * mu + i * (third - 5 - mu)}
        for j in range(1, 4):
            idx = rho(i, j)
            if idx is not None:
                entries[idx] = entries.get(idx, 0) - (2 * j if i == j else j)
        row(entries, 0)
    # closed 5-walks at v
    five = {}
    for (i, j), idx in RHO_INDEX.items():
        if i * j:
            five[idx] = i * j
    twice = theta5 - star - 8 * delta * third - 4 * (third - 1) * pair_term
    if twice % 2:
        raise ArithmeticError("five-walk right-hand side is not an integer")
    row(five, twice // 2)

    coeffs = IntMatrix.from_rows(rows, cols=len(VARIABLES))
    system = TauRhoSystem(p, coeffs, tuple(rhs), m, d, p.k // 2, delta, xi, theta5, star)
    if check_rank:
        rk = rank(coeffs)
        if rk != 10:
            raise AssertionError(f"tau/rho system for {p.as_tuple()} has rank {rk}, expected 10")
    return system


def measure_tau_rho(cg: Graph, omega_c: int, v: int) -> tuple[int, ...]:
    """Direct counts of tau_i and rho_ij around vertex v of a clique graph."""
    nb = cg.nbr_bits
    d = cg.degree(v)
    bound = Fraction(d, omega_c - 1)
    cls = {}
    tau = [0, 0, 0, 0]
    for u in range(cg.n):
        if u == v or nb[v] >> u & 1:
            continue
        i = (nb[u] & nb[v]).bit_count()
        if i > bound or i > 3:
            raise ValueError(f"vertex {u} shares {i} neighbours with {v}, above the bound {bound}")
        cls[u] = i
        tau[i] += 1
    masks = [0, 0, 0, 0]
    for u, i in cls.items():
        masks[i] |= 1 << u
    # rho_ij: sum over u in T_i of |N(u) & T_j|, halved on the diagonal
    raw = [[0] * 4 for _ in range(4)]
    for u, i in cls.items():
        row = raw[i]
        for j in range(4):
            row[j] += (nb[u] & masks[j]).bit_count()
    if raw[0][3]:
        raise AssertionError("found an edge between T_0 and T_3")
    out = tau + [0] * 9
    for (i, j), idx in RHO_INDEX.items():
        out[idx] = raw[i][j] // 2 if i == j else raw[i][j]
    return tuple(out)


# ---------------------------------------------------------------------------
# nonnegative integer solutions
# ---------------------------------------------------------------------------

def _lll(basis: list[list[int]], delta: Fraction = Fraction(3, 4)) -> list[list[int]]:
    b = [list(v) for v in basis]
    n = len(b)
    if n <= 1:
        return b

    def dot(x, y):
        return sum(p * q for p, q in zip(x, y))

    def gram_schmidt():
        bs: list[list[Fraction]] = []
        mu = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            v = [Fraction(x) for x in b[i]]
            for j in range(i):
                mu[i][j] = Fraction(dot(b[i], bs[j])) / dot(bs[j], bs[j]) if any(bs[j]) else Fraction(0)
                v = [x - mu[i][j] * y for x, y in zip(v, bs[j])]
            bs.append(v)
        return bs, mu

    bs, mu = gram_schmidt()
    k = 1
    while k < n:
        for j in range(k - 1, -1, -1):
            q = round(mu[k][j])
            if q:
                b[k] = [x - q * y for x, y in zip(b[k], b[j])]
                bs, mu = gram_schmidt()
        if dot(bs[k], bs[k]) >= (delta - mu[k][k - 1] ** 2) * dot(bs[k - 1], bs[k - 1]):
            k += 1
        else:
            b[k], b[k - 1] = b[k - 1], b[k]
            bs, mu = gram_schmidt()
            k = max(k - 1, 1)
    return b


Ineq = tuple[tuple[Fraction, ...], Fraction]  # sum a_i z_i + c >= 0


def _normalize(ineq: Ineq) -> Ineq:
    a, c = ineq
    scale = max((abs(x) for x in a), default=Fraction(0))
    if scale == 0:
        return ineq
    return tuple(x / scale for x in a), c / scale


def _eliminate_last(ineqs: list[Ineq]) -> list[Ineq]:
    """Fourier-Motzkin projection removing the last variable."""
    pos, neg, out = [], [], []
    for a, c in ineqs:
        if a[-1] > 0:
            pos.append((a, c))
        elif a[-1] < 0:
            neg.append((a, c))
        else:
            out.append((a[:-1], c))
    for ap, cp in pos:
        for an, cn in neg:
            s, t = -an[-1], ap[-1]
            a = tuple(s * x + t * y for x, y in zip(ap[:-1], an[:-1]))
            out.append((a, s * cp + t * cn))
    seen: dict = {}
    for ineq in out:
        a, c = _normalize(ineq)
        if not any(a):
            if c < 0:
                return [(a, c)]  # infeasible marker
            continue
        # keep the tightest constant for each direction
        if a not in seen or c < seen[a]:
            seen[a] = c
    return [(a, c) for a, c in seen.items()]


def _bounds(ineqs: list[Ineq], prefix: Sequence[int]) -> tuple[int, int] | None:
    """Integer range of the next variable given fixed values for the earlier ones."""
    lo, hi = None, None
    j = len(prefix)
    for a, c in ineqs:
        const = c + sum(x * z for x, z in zip(a[:j], prefix))
        coef = a[j]
        if coef == 0:
            if const < 0:
                return None
            continue
        bound = -const / coef
        if coef > 0:
            lo = bound if lo is None or bound > lo else lo
        else:
            hi = bound if hi is None or bound < hi else hi
    if lo is None or hi is None:
        raise ArithmeticError("solution polytope is unbounded")
    lo_i, hi_i = ceil(lo), floor(hi)
    if lo_i > hi_i:
        return None
    return lo_i, hi_i


@dataclass
class SolveStats:
    nodes: int = 0
    kernel_dim: int = 0
    reason: str = ""


def solve_nonneg_linear(a: IntMatrix, b: Sequence[int], stats: SolveStats | None = None) -> list[int] | None:
    """First nonnegative integer solution of a x = b in lexicographic order of the lattice
    coordinates, or None after exhausting the bounded solution polytope."""
    sol = solve_integer(a, b)
    if sol is None:
        if stats is not None:
            stats.reason = "no integer solution"
        return None
    x0, kernel = sol
    kernel = _lll(kernel) if kernel else kernel
    dim = len(kernel)
    if stats is not None:
        stats.kernel_dim = dim
    if dim == 0:
        if any(x < 0 for x in x0):
            if stats is not None:
                stats.reason = "unique integer solution is negative"
            return None
        return x0
    # x = x0 + sum z_j kernel_j >= 0
    base: list[Ineq] = []
    for i in range(len(x0)):
        coeffs = tuple(Fraction(kernel[j][i]) for j in range(dim))
        base.append((coeffs, Fraction(x0[i])))
    levels = [base]
    for _ in range(dim - 1):
        levels.append(_eliminate_last(levels[-1]))
    levels.reverse()  # levels[t] involves variables z_0..z_t

    def search(prefix: list[int]) -> list[int] | None:
        t = len(prefix)
        rng = _bounds(levels[t], prefix)
        if stats is not None:
            stats.nodes += 1
        if rng is None:
            return None
        for z in range(rng[0], rng[1] + 1):
            prefix.append(z)
            if t + 1 == dim:
                return list(prefix)
            found = search(prefix)
            if found is not None:
                return found
            prefix.pop()
        return None

    z = search([])
    if z is None:
        if stats is not None:
            stats.reason = "bounded search exhausted"
        return None
    x = [x0[i] + sum(z[j] * kernel[j][i] for j in range(dim)) for i in range(len(x0))]
    if any(v < 0 for v in x):
        raise AssertionError("solver produced a negative entry")
    return x


def solve_nonneg_integer(system: TauRhoSystem, stats: SolveStats | None = None) -> tuple[int, ...] | None:
    x = solve_nonneg_linear(system.coeffs, system.rhs, stats)
    if x is None:
        return None
    if not system.is_satisfied(x):
        raise AssertionError("solver witness does not satisfy the system")
    return tuple(x)


def perturbed(system: TauRhoSystem, row: int = 0, delta: int = -1) -> TauRhoSystem:
    rhs = list(system.rhs)
    rhs[row] += delta
    return TauRhoSystem(system.params, system.coeffs, tuple(rhs), system.m, system.d, system.omega_c,
                        system.delta, system.xi, system.theta5, system.star)


def solution_space_dimension(system: TauRhoSystem) -> int:
    return len(VARIABLES) - rank(system.coeffs)


def brute_force_nonneg(system: TauRhoSystem, limit: int) -> list[tuple[int, ...]]:
    """Every solution with entries <= limit, for tiny systems (test oracle)."""
    out = []
    for tau in product(range(limit + 1), repeat=4):
        if sum(tau) != system.rhs[0]:
            continue
        for rho in product(range(limit + 1), repeat=9):
            x = tau + rho
            if system.is_satisfied(x):
                out.append(x)
    return out


# (tau, rho) vectors measured around a vertex of C_3 for the two known
# vertex-transitive locally linear srgs that the families module can build
REFERENCE_TAU_RHO: dict[tuple[int, int, int, int], tuple[int, ...]] = {
    (81, 20, 1, 6): (8, 0, 216, 18, 0, 0, 216, 0, 0, 0, 2376, 432, 0),
    (243, 22, 1, 2): (300, 540, 0, 20, 1800, 5400, 0, 4860, 0, 540, 0, 0, 0),
}

"""Generators for the example graph families and the specific strongly regular graphs."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

from .errors import ParameterError
from .graph import Graph
from .transforms import line_graph


def complete_graph(n: int) -> Graph:
    return Graph(n, tuple(combinations(range(n), 2)))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, tuple((i, a + j) for i in range(a) for j in range(b)))


def complete_multipartite(sizes: list[int]) -> Graph:
    label = [p for p, s in enumerate(sizes) for _ in range(s)]
    n = len(label)
    return Graph(n, tuple((u, v) for u, v in combinations(range(n), 2) if label[u] != label[v]))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ParameterError("a cycle needs at least 3 vertices")
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, tuple(outer + spokes + inner))


# ---------------------------------------------------------------------------
# orthogonal arrays and block graphs
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class OrthogonalArray:
    """n^2 rows over symbols 0..n-1, m columns; any two columns show every pair once."""

    n: int
    m: int
    rows: tuple[tuple[int, ...], ...]

    def is_valid(self) -> bool:
        if len(self.rows) != self.n * self.n:
            return False
        for a, b in combinations(range(self.m), 2):
            if len({(r[a], r[b]) for r in self.rows}) != self.n * self.n:
                return False
        return True


def orthogonal_array(n: int, m: int) -> OrthogonalArray:
    """The cyclic OA(n, 2) or OA(n, 3): rows (i, j) or (i, j, i+j mod n) in row-major order."""
    if n < 2:
        raise ParameterError("orthogonal array needs n >= 2")
    if m not in (2, 3):
        raise ParameterError("only m = 2 or m = 3 columns are supported")
    rows = []
    for i, j in product(range(n), repeat=2):
        rows.append((i, j) if m == 2 else (i, j, (i + j) % n))
    return OrthogonalArray(n, m, tuple(rows))


def block_graph(oa: OrthogonalArray) -> Graph:
    """Rows adjacent when they agree in some column."""
    if not oa.is_valid():
        raise ParameterError("not an orthogonal array")
    rows = oa.rows
    edges = [(u, v) for u, v in combinations(range(len(rows)), 2)
             if any(a == b for a, b in zip(rows[u], rows[v]))]
    return Graph(len(rows), tuple(edges))


def rook_graph(n: int) -> Graph:
    if n < 2:
        raise ParameterError("rook graph needs n >= 2")
    return block_graph(orthogonal_array(n, 2))


def triangular_graph(n: int) -> Graph:
    if n < 3:
        raise ParameterError("triangular graph needs n >= 3")
    return line_graph(complete_graph(n))


# ---------------------------------------------------------------------------
# generalized quadrangles
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Geometry:
    """Point-line incidence structure; each line is a sorted tuple of point indices."""

    points: int
    lines: tuple[tuple[int, ...], ...]

    def dual(self) -> Geometry:
        on: list[list[int]] = [[] for _ in range(self.points)]
        for j, line in enumerate(self.lines):
            for p in line:
                on[p].append(j)
        return Geometry(len(self.lines), tuple(tuple(x) for x in on))


def gq_parameters(geo: Geometry) -> tuple[int, int] | None:
    """(s, t) when geo is a generalized quadrangle, otherwise None."""
    if not geo.lines:
        return None
    sizes = {len(line) for line in geo.lines}
    if len(sizes) != 1:
        return None
    s = sizes.pop() - 1
    on: list[set[int]] = [set() for _ in range(geo.points)]
    for j, line in enumerate(geo.lines):
        if len(set(line)) != len(line):
            return None
        for p in line:
            on[p].add(j)
    degs = {len(x) for x in on}
    if len(degs) != 1:
        return None
    t = degs.pop() - 1
    line_sets = [set(line) for line in geo.lines]
    # two points lie on at most one line
    for a, b in combinations(range(len(line_sets)), 2):
        if len(line_sets[a] & line_sets[b]) > 1:
            return None
    # a point off a line is collinear with exactly one point of that line
    for j, line in enumerate(line_sets):
        for p in range(geo.points):
            if p in line:
                continue
            hits = sum(1 for q in line if on[p] & on[q])
            if hits != 1:
                return None
    return (s, t)


def collinearity_graph(geo: Geometry) -> Graph:
    edges = set()
    for line in geo.lines:
        edges.update(combinations(sorted(line), 2))
    return Graph(geo.points, tuple(edges))


def gq22() -> Geometry:
    """GQ(2,2): points are 2-subsets of a 6-set, lines are perfect matchings."""
    pts = list(combinations(range(6), 2))
    index = {p: i for i, p in enumerate(pts)}
    lines = set()
    for a, b in pts:
        rest = [x for x in range(6) if x not in (a, b)]
        for c, d in combinations(rest, 2):
            e, f = [x for x in rest if x not in (c, d)]
            match = sorted(index[x] for x in ((a, b), (c, d), (e, f)))
            lines.add(tuple(match))
    return Geometry(len(pts), tuple(sorted(lines)))


def gq24_graph() -> Graph:
    """Collinearity graph of GQ(2,4) as the intersection pattern of the 27 lines on a cubic surface."""
    labels: list[tuple] = [("a", i) for i in range(6)] + [("b", i) for i in range(6)]
    labels += [("c", i, j) for i, j in combinations(range(6), 2)]

    def adjacent(x: tuple, y: tuple) -> bool:
        if x[0] == "a" and y[0] == "b" or x[0] == "b" and y[0] == "a":
            return x[1] != y[1]
        if x[0] in "ab" and y[0] == "c":
            return x[1] in y[1:]
        if y[0] in "ab" and x[0] == "c":
            return y[1] in x[1:]
        if x[0] == "c" and y[0] == "c":
            return not set(x[1:]) & set(y[1:])
        return False

    n = len(labels)
    return Graph(n, tuple((u, v) for u, v in combinations(range(n), 2) if adjacent(labels[u], labels[v])))


# ---------------------------------------------------------------------------
# the field with 81 elements
# ---------------------------------------------------------------------------

GF81_MODULUS = (2, 1, 0, 0, 1)  # x^4 + x + 2 over GF(3), constant term first


def _is_irreducible_gf3(poly: tuple[int, ...]) -> bool:
    """Brute force: no monic factor of degree 1 or 2."""
    deg = len(poly) - 1

    def rem(a: list[int], b: list[int]) -> list[int]:
        a = a[:]
        while len(a) >= len(b) and any(a):
            if a[-1] == 0:
                a.pop()
                continue
            shift = len(a) - len(b)
            q = a[-1] * pow(b[-1], -1, 3) % 3
            for i, c in enumerate(b):
                a[shift + i] = (a[shift + i] - q * c) % 3
            a.pop()
        return a

    for d in range(1, deg // 2 + 1):
        for lower in product(range(3), repeat=d):
            divisor = list(lower) + [1]
            if not any(rem(list(poly), divisor)):
                return False
    return True


class GF81:
    """Elements a0 + a1 x + a2 x^2 + a3 x^3 encoded as a0 + 3 a1 + 9 a2 + 27 a3."""

    def __init__(self) -> None:
        if not _is_irreducible_gf3(GF81_MODULUS):
            raise ArithmeticError("modulus is reducible")
        self.size = 81

    @staticmethod
    def digits(x: int) -> list[int]:
        return [(x // 3 ** i) % 3 for i in range(4)]

    @staticmethod
    def encode(d: list[int]) -> int:
        return sum((c % 3) * 3 ** i for i, c in enumerate(d))

    def add(self, x: int, y: int) -> int:
        return self.encode([a + b for a, b in zip(self.digits(x), self.digits(y))])

    def neg(self, x: int) -> int:
        return self.encode([-a for a in self.digits(x)])

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def mul(self, x: int, y: int) -> int:
        a, b = self.digits(x), self.digits(y)
        prod = [0] * 7
        for i, p in enumerate(a):
            for j, q in enumerate(b):
                prod[i + j] += p * q
        # reduce using x^4 = -(x + 2)
        for k in range(6, 3, -1):
            c = prod[k] % 3
            prod[k] = 0
            for i in range(4):
                prod[k - 4 + i] -= c * GF81_MODULUS[i]
        return self.encode(prod[:4])

    def power(self, x: int, e: int) -> int:
        out = 1
        for _ in range(e):
            out = self.mul(out, x)
        return out

    def fourth_powers(self) -> set[int]:
        return {self.power(x, 4) for x in range(1, 81)}


def brouwer_haemers_graph() -> Graph:
    """Cayley graph on the additive group of GF(81); connection set = nonzero fourth powers."""
    f = GF81()
    conn = f.fourth_powers()
    if len(conn) != 20 or f.neg(next(iter(conn))) not in conn:
        raise ArithmeticError("unexpected fourth-power set")
    edges = [(x, y) for x, y in combinations(range(81), 2) if f.sub(x, y) in conn]
    return Graph(81, tuple(edges))


# ---------------------------------------------------------------------------
# optional: coset graph of the ternary Golay code
# ---------------------------------------------------------------------------

GOLAY_GENERATOR = (2, 0, 1, 2, 1, 1)  # x^5 + x^4 + 2x^3 + x^2 + 2 over GF(3), constant first


def golay_coset_graph() -> Graph:
    """Cosets of the ternary Golay code: GF(3)[x]/(g) with steps +-(x^j mod g), j < 11."""
    g = list(GOLAY_GENERATOR)

    def reduce(poly: list[int]) -> tuple[int, ...]:
        p = [c % 3 for c in poly]
        for k in range(len(p) - 1, 4, -1):
            c = p[k]
            if c:
                for i in range(6):
                    p[k - 5 + i] = (p[k - 5 + i] - c * g[i]) % 3
        return tuple((p + [0] * 5)[:5])

    steps = set()
    for j in range(11):
        mono = [0] * j + [1]
        r = reduce(mono)
        steps.add(r)
        steps.add(tuple((-c) % 3 for c in r))
    verts = list(product(range(3), repeat=5))
    index = {v: i for i, v in enumerate(verts)}
    edges = set()
    for v in verts:
        for s in steps:
            w = tuple((a + b) % 3 for a, b in zip(v, s))
            u, x = index[v], index[w]
            if u != x:
                edges.add((min(u, x), max(u, x)))
    return Graph(len(verts), tuple(edges))

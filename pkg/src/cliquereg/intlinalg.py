"""Exact integer linear algebra.

Everything here works on arbitrary-precision Python integers. The modular
routines use numpy int64 arithmetic for one prime at a time and recombine the
residues by CRT against a proven (Hadamard-type) bound, so their results are
exact, not probabilistic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np
from sympy import prevprime

_INT64_SAFE = 1 << 62


@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if len(self.entries) != self.rows:
            raise ValueError("row count mismatch")
        for r in self.entries:
            if len(r) != self.cols:
                raise ValueError("ragged matrix")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]], cols: int | None = None) -> IntMatrix:
        data = tuple(tuple(int(x) for x in r) for r in rows)
        if cols is None:
            cols = len(data[0]) if data else 0
        return cls(len(data), cols, data)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntMatrix:
        return cls(rows, cols, tuple((0,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n: int, scale: int = 1) -> IntMatrix:
        return cls(n, n, tuple(tuple(scale if i == j else 0 for j in range(n)) for i in range(n)))

    @classmethod
    def diagonal(cls, values: Sequence[int]) -> IntMatrix:
        n = len(values)
        return cls(n, n, tuple(tuple(int(values[i]) if i == j else 0 for j in range(n)) for i in range(n)))

    @classmethod
    def from_numpy(cls, arr: np.ndarray) -> IntMatrix:
        return cls.from_rows(arr.tolist(), cols=arr.shape[1] if arr.ndim == 2 else 0)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, idx: tuple[int, int]) -> int:
        i, j = idx
        return self.entries[i][j]

    def to_lists(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def max_abs(self) -> int:
        return max((abs(x) for r in self.entries for x in r), default=0)

    def to_numpy(self) -> np.ndarray:
        """int64 array when every entry fits, object array otherwise."""
        if self.max_abs() < _INT64_SAFE:
            return np.array(self.entries, dtype=np.int64).reshape(self.rows, self.cols)
        out = np.empty((self.rows, self.cols), dtype=object)
        for i, r in enumerate(self.entries):
            for j, x in enumerate(r):
                out[i, j] = x
        return out

    @property
    def T(self) -> IntMatrix:
        return IntMatrix(self.cols, self.rows, tuple(zip(*self.entries)) if self.rows else tuple(() for _ in range(self.cols)))

    def column(self, j: int) -> list[int]:
        return [r[j] for r in self.entries]

    def __add__(self, other: IntMatrix) -> IntMatrix:
        self._same_shape(other)
        return IntMatrix(self.rows, self.cols, tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.entries, other.entries)))

    def __sub__(self, other: IntMatrix) -> IntMatrix:
        self._same_shape(other)
        return IntMatrix(self.rows, self.cols, tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.entries, other.entries)))

    def __neg__(self) -> IntMatrix:
        return IntMatrix(self.rows, self.cols, tuple(tuple(-a for a in r) for r in self.entries))

    def scale(self, c: int) -> IntMatrix:
        return IntMatrix(self.rows, self.cols, tuple(tuple(c * a for a in r) for r in self.entries))

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        bound = self.max_abs() * other.max_abs() * max(self.cols, 1)
        if bound < _INT64_SAFE:
            a = np.array(self.entries, dtype=np.int64).reshape(self.rows, self.cols)
            b = np.array(other.entries, dtype=np.int64).reshape(other.rows, other.cols)
            return IntMatrix.from_rows((a @ b).tolist(), cols=other.cols)
        cols = list(zip(*other.entries))
        return IntMatrix(
            self.rows,
            other.cols,
            tuple(tuple(sum(x * y for x, y in zip(r, c)) for c in cols) for r in self.entries),
        )

    def apply(self, vec: Sequence[int]) -> list[int]:
        return [sum(a * b for a, b in zip(r, vec)) for r in self.entries]

    def _same_shape(self, other: IntMatrix) -> None:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def hstack(self, other: IntMatrix) -> IntMatrix:
        if self.rows != other.rows:
            raise ValueError("row mismatch in hstack")
        return IntMatrix(self.rows, self.cols + other.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))


def as_lists(m: IntMatrix | Sequence[Sequence[int]]) -> list[list[int]]:
    if isinstance(m, IntMatrix):
        return m.to_lists()
    return [list(map(int, r)) for r in m]


# ---------------------------------------------------------------------------
# determinants and rank
# ---------------------------------------------------------------------------

def bareiss_det(m: IntMatrix | Sequence[Sequence[int]]) -> int:
    """Fraction-free Gaussian elimination; exact for any integer matrix."""
    a = as_lists(m)
    n = len(a)
    if any(len(r) != n for r in a):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        rowk = a[k]
        for i in range(k + 1, n):
            rowi = a[i]
            aik = rowi[k]
            for j in range(k + 1, n):
                rowi[j] = (rowi[j] * akk - aik * rowk[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1]


def rank(m: IntMatrix | Sequence[Sequence[int]]) -> int:
    """Exact rank over the rationals."""
    a = [list(map(Fraction, r)) for r in as_lists(m)]
    if not a:
        return 0
    rows, cols = len(a), len(a[0])
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        for i in range(rows):
            if i != r and a[i][c] != 0:
                f = a[i][c] / a[r][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == rows:
            break
    return r


@lru_cache(maxsize=None)
def _primes(count: int) -> tuple[int, ...]:
    out = []
    p = 1 << 31
    while len(out) < count:
        p = prevprime(p)
        out.append(p)
    return tuple(out)


def primes_for_bits(bits: int) -> tuple[int, ...]:
    """Enough 31-bit primes for their product to exceed 2**bits."""
    count = bits // 30 + 2
    return _primes(count)


def crt_symmetric(residues: Sequence[int], moduli: Sequence[int]) -> int:
    x, mod = 0, 1
    for r, p in zip(residues, moduli):
        t = ((r - x) * pow(mod, -1, p)) % p
        x += mod * t
        mod *= p
    if x > mod // 2:
        x -= mod
    return x


def det_mod_p(a: np.ndarray, p: int) -> int:
    a = np.array(a, dtype=np.int64) % p
    n = a.shape[0]
    det = 1
    for k in range(n):
        nz = np.nonzero(a[k:, k])[0]
        if nz.size == 0:
            return 0
        piv = k + int(nz[0])
        if piv != k:
            a[[k, piv]] = a[[piv, k]]
            det = -det
        pv = int(a[k, k])
        det = det * pv % p
        if k + 1 < n:
            inv = pow(pv, p - 2, p)
            f = a[k + 1:, k] * inv % p
            a[k + 1:, k:] = (a[k + 1:, k:] - np.outer(f, a[k, k:]) % p) % p
    return det % p


def hadamard_bits(m: IntMatrix | Sequence[Sequence[int]]) -> int:
    prod = 1
    for r in as_lists(m):
        prod *= max(1, sum(x * x for x in r))
    return prod.bit_length() // 2 + 1


def modular_det(m: IntMatrix | Sequence[Sequence[int]], *, psd: bool = False) -> int:
    """Exact determinant from residues modulo enough primes.

    With ``psd=True`` the caller promises a symmetric positive semidefinite
    matrix, so the product of the diagonal bounds the determinant and fewer
    primes are needed.
    """
    rows = as_lists(m)
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return 1
    big = max((abs(x) for r in rows for x in r), default=0)
    if psd:
        prod = 1
        for i, r in enumerate(rows):
            prod *= max(1, r[i])
        bits = prod.bit_length() + 1
    else:
        bits = hadamard_bits(rows) + 1
    primes = primes_for_bits(bits)
    residues = []
    for p in primes:
        if big < _INT64_SAFE:
            arr = np.array(rows, dtype=np.int64) % p
        else:
            arr = np.array([[x % p for x in r] for r in rows], dtype=np.int64)
        residues.append(det_mod_p(arr, p))
    return crt_symmetric(residues, primes)


def det(m: IntMatrix | Sequence[Sequence[int]]) -> int:
    rows = as_lists(m)
    if len(rows) <= 40:
        return bareiss_det(rows)
    return modular_det(rows)


# ---------------------------------------------------------------------------
# Smith normal form
# ---------------------------------------------------------------------------

def _min_abs_position(a: list[list[int]], t: int) -> tuple[int, int] | None:
    best = None
    best_val = 0
    rows = len(a)
    cols = len(a[0]) if rows else 0
    for i in range(t, rows):
        row = a[i]
        for j in range(t, cols):
            x = row[j]
            if x:
                ax = -x if x < 0 else x
                if best is None or ax < best_val:
                    best, best_val = (i, j), ax
                    if ax == 1:
                        return best
    return best


def _snf_core(a: list[list[int]], track: bool):
    """In-place diagonalisation. Returns (a, U, VT) with U*A*V = diag."""
    rows = len(a)
    cols = len(a[0]) if rows else 0
    u = [[int(i == j) for j in range(rows)] for i in range(rows)] if track else None
    vt = [[int(i == j) for j in range(cols)] for i in range(cols)] if track else None

    def swap_rows(i, k):
        a[i], a[k] = a[k], a[i]
        if track:
            u[i], u[k] = u[k], u[i]

    def swap_cols(j, k):
        for r in a:
            r[j], r[k] = r[k], r[j]
        if track:
            vt[j], vt[k] = vt[k], vt[j]

    def add_row(dst, src, q):
        # row_dst -= q * row_src
        rs, rd = a[src], a[dst]
        a[dst] = [x - q * y for x, y in zip(rd, rs)]
        if track:
            u[dst] = [x - q * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, q):
        # col_dst -= q * col_src
        for r in a:
            if r[src]:
                r[dst] -= q * r[src]
        if track:
            vt[dst] = [x - q * y for x, y in zip(vt[dst], vt[src])]

    t = 0
    while t < min(rows, cols):
        pos = _min_abs_position(a, t)
        if pos is None:
            break
        i, j = pos
        if i != t:
            swap_rows(t, i)
        if j != t:
            swap_cols(t, j)
        while True:
            p = a[t][t]
            dirty = False
            for i in range(t + 1, rows):
                x = a[i][t]
                if x:
                    q = _round_div(x, p)
                    add_row(i, t, q)
                    if a[i][t]:
                        dirty = True
            for j in range(t + 1, cols):
                x = a[t][j]
                if x:
                    q = _round_div(x, p)
                    add_col(j, t, q)
                    if a[t][j]:
                        dirty = True
            if dirty:
                # move the smallest remainder in row/column t onto the pivot
                best, bi, bj = abs(p), t, t
                for i in range(t + 1, rows):
                    x = a[i][t]
                    if x and abs(x) < best:
                        best, bi, bj = abs(x), i, t
                for j in range(t + 1, cols):
                    x = a[t][j]
                    if x and abs(x) < best:
                        best, bi, bj = abs(x), t, j
                if bi != t:
                    swap_rows(t, bi)
                if bj != t:
                    swap_cols(t, bj)
                continue
            # row and column cleared; enforce divisibility of the remainder
            bad = None
            for i in range(t + 1, rows):
                row = a[i]
                for j in range(t + 1, cols):
                    if row[j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            add_row(t, bad, -1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            if track:
                u[t] = [-x for x in u[t]]
        t += 1
    return a, u, vt


def _round_div(x: int, p: int) -> int:
    q, r = divmod(x, p)
    if 2 * abs(r) > abs(p):
        q += 1 if (p > 0) else -1
        # keep |remainder| minimal
        if abs(x - q * p) > abs(r):
            q -= 1 if (p > 0) else -1
    return q


def smith_normal_form(m: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Return (S, U, V) with U @ m @ V == S diagonal, d1 | d2 | ..., U, V unimodular."""
    a, u, vt = _snf_core(m.to_lists(), track=True)
    s = IntMatrix.from_rows(a, cols=m.cols)
    return s, IntMatrix.from_rows(u, cols=m.rows), IntMatrix.from_rows(vt, cols=m.cols).T


def snf_diagonal(m: IntMatrix | Sequence[Sequence[int]]) -> list[int]:
    """Diagonal of the Smith form (length min(rows, cols)), without transforms."""
    a = as_lists(m)
    if not a or not a[0]:
        return []
    a, _, _ = _snf_core(a, track=False)
    return [a[i][i] for i in range(min(len(a), len(a[0])))]


# ---------------------------------------------------------------------------
# lattices (Hermite-style echelon bases)
# ---------------------------------------------------------------------------

def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


class Lattice:
    """Integer row lattice in Z^dim stored as a Hermite echelon basis.

    With ``modulus`` D the lattice is assumed to contain D*Z^dim; all entries are
    then kept reduced modulo D, which bounds coefficient growth.
    """

    def __init__(self, dim: int, modulus: int | None = None):
        self.dim = dim
        self.modulus = modulus
        self.basis: dict[int, list[int]] = {}  # pivot column -> row
        if modulus is not None:
            if modulus <= 0:
                raise ValueError("modulus must be positive")
            for i in range(dim):
                row = [0] * dim
                row[i] = modulus
                self.basis[i] = row

    def _reduce(self, v: list[int]) -> list[int]:
        if self.modulus is None:
            return v
        d = self.modulus
        return [x % d for x in v]

    def add(self, vec: Sequence[int]) -> None:
        v = self._reduce([int(x) for x in vec])
        d = self.modulus
        for j in range(self.dim):
            x = v[j]
            if x == 0:
                continue
            row = self.basis.get(j)
            if row is None:
                if x < 0:
                    v = [-y for y in v]
                self.basis[j] = v
                return
            p = row[j]
            if x % p == 0:
                q = x // p
                v = [a - q * b for a, b in zip(v, row)]
            else:
                g, s, t = _xgcd(p, x)
                new_row = [s * a + t * b for a, b in zip(row, v)]
                v = [(p // g) * b - (x // g) * a for a, b in zip(row, v)]
                if d is not None:
                    new_row = [y % d for y in new_row]
                    new_row[j] = g
                self.basis[j] = new_row
            if d is not None:
                v = [y % d for y in v]

    def add_all(self, vecs: Iterable[Sequence[int]]) -> Lattice:
        for v in vecs:
            self.add(v)
        return self

    def __contains__(self, vec: Sequence[int]) -> bool:
        v = [int(x) for x in vec]
        if len(v) != self.dim:
            raise ValueError("dimension mismatch")
        for j in range(self.dim):
            x = v[j]
            if x == 0:
                continue
            row = self.basis.get(j)
            if row is None or x % row[j]:
                return False
            q = x // row[j]
            v = [a - q * b for a, b in zip(v, row)]
        return True

    def rank(self) -> int:
        return len(self.basis)

    def index(self) -> int | None:
        """|Z^dim / L| for a full-rank lattice, else None."""
        if len(self.basis) < self.dim:
            return None
        out = 1
        for j, row in self.basis.items():
            out *= row[j]
        return abs(out)

    def basis_rows(self) -> list[list[int]]:
        return [self.basis[j] for j in sorted(self.basis)]


def integer_kernel(m: IntMatrix) -> list[list[int]]:
    """Basis of {x in Z^cols : m x = 0}."""
    s, _, v = smith_normal_form(m)
    r = sum(1 for i in range(min(s.rows, s.cols)) if s[i, i] != 0)
    return [v.column(j) for j in range(r, m.cols)]


def solve_integer(m: IntMatrix, b: Sequence[int]) -> tuple[list[int], list[list[int]]] | None:
    """All integer solutions of m x = b as (particular, kernel basis), or None."""
    s, u, v = smith_normal_form(m)
    ub = u.apply(b)
    r = sum(1 for i in range(min(s.rows, s.cols)) if s[i, i] != 0)
    y = [0] * m.cols
    for i in range(r):
        q, rem = divmod(ub[i], s[i, i])
        if rem:
            return None
        y[i] = q
    if any(ub[i] for i in range(r, m.rows)):
        return None
    x0 = v.apply(y)
    return x0, [v.column(j) for j in range(r, m.cols)]

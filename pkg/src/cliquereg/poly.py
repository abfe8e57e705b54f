"""Integer polynomials and exact characteristic polynomials."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

import numpy as np

from .intlinalg import IntMatrix, as_lists, crt_symmetric, primes_for_bits


@dataclass(frozen=True)
class IntPoly:
    """Polynomial with integer coefficients, constant term first."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        c = list(self.coeffs)
        while len(c) > 1 and c[-1] == 0:
            c.pop()
        if not c:
            c = [0]
        object.__setattr__(self, "coeffs", tuple(int(x) for x in c))

    @classmethod
    def from_roots(cls, roots: Sequence[int]) -> IntPoly:
        out = cls((1,))
        for r in roots:
            out = out * cls((-r, 1))
        return out

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> IntPoly:
        return cls((0,) * degree + (coeff,))

    @property
    def degree(self) -> int:
        if self.coeffs == (0,):
            return -1
        return len(self.coeffs) - 1

    def __add__(self, other: IntPoly) -> IntPoly:
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return IntPoly(tuple((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)))

    def __neg__(self) -> IntPoly:
        return IntPoly(tuple(-x for x in self.coeffs))

    def __sub__(self, other: IntPoly) -> IntPoly:
        return self + (-other)

    def __mul__(self, other: IntPoly) -> IntPoly:
        a, b = self.coeffs, other.coeffs
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPoly(tuple(out))

    def __pow__(self, e: int) -> IntPoly:
        if e < 0:
            raise ValueError("negative power")
        out, base = IntPoly((1,)), self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __call__(self, x: int | Fraction) -> int | Fraction:
        acc: int | Fraction = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def shift(self, a: int) -> IntPoly:
        """The polynomial x -> self(x + a), by repeated synthetic division."""
        c = list(self.coeffs)
        n = len(c)
        for i in range(n):
            for j in range(n - 2, i - 1, -1):
                c[j] += a * c[j + 1]
        return IntPoly(tuple(c))

    def __str__(self) -> str:
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0 and len(self.coeffs) > 1:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if mono and c == 1:
                terms.append(mono)
            elif mono and c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}{'*' if mono else ''}{mono}")
        return " + ".join(terms).replace("+ -", "- ")


def _hessenberg_charpoly_mod(a: np.ndarray, p: int) -> list[int]:
    """Coefficients (constant first) of det(xI - A) modulo p."""
    h = a.copy() % p
    n = h.shape[0]
    for j in range(n - 2):
        col = h[j + 1:, j]
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        i = j + 1 + int(nz[0])
        if i != j + 1:
            h[[i, j + 1]] = h[[j + 1, i]]
            h[:, [i, j + 1]] = h[:, [j + 1, i]]
        if j + 2 >= n:
            continue
        inv = pow(int(h[j + 1, j]), p - 2, p)
        u = h[j + 2:, j] * inv % p
        if not u.any():
            continue
        h[j + 2:, :] = (h[j + 2:, :] - np.outer(u, h[j + 1, :]) % p) % p
        h[:, j + 1] = (h[:, j + 1] + ((h[:, j + 2:] * u) % p).sum(axis=1)) % p
    # p_k = charpoly of the leading k x k block, stored as rows of polys
    polys = np.zeros((n + 1, n + 1), dtype=np.int64)
    polys[0, 0] = 1
    hl = h.tolist()
    for k in range(n):
        # (x - h_kk) p_k
        nxt = np.zeros(n + 1, dtype=np.int64)
        nxt[1:k + 2] = polys[k, :k + 1]
        nxt[:k + 1] = (nxt[:k + 1] - polys[k, :k + 1] * hl[k][k]) % p
        coeffs = [0] * k
        prod = 1
        for i in range(k - 1, -1, -1):
            prod = prod * hl[i + 1][i] % p
            if prod == 0:
                break
            coeffs[i] = hl[i][k] * prod % p
        if any(coeffs):
            c = np.array(coeffs, dtype=np.int64)
            acc = ((polys[:k, :k + 1] * c[:, None]) % p).sum(axis=0) % p
            nxt[:k + 1] = (nxt[:k + 1] - acc) % p
        polys[k + 1] = nxt
    return [int(x) for x in polys[n]]


def charpoly_bound_bits(rows: list[list[int]]) -> int:
    """Bits bounding every coefficient of det(xI - A) in absolute value."""
    n = len(rows)
    # principal-minor (Hadamard) bound: |e_j| <= C(n, j) * prod of row norms
    prod = 1
    for r in rows:
        prod *= max(1, sum(x * x for x in r))
    hadamard = n + prod.bit_length() // 2 + 1
    # eigenvalue bound: every |eigenvalue| <= max absolute row sum R
    big_r = max((sum(abs(x) for x in r) for r in rows), default=0)
    gersh = ((1 + big_r) ** n).bit_length()
    return min(hadamard, gersh) + 1


def char_poly(m: IntMatrix | Sequence[Sequence[int]]) -> IntPoly:
    """Exact det(xI - M) by Hessenberg reduction modulo primes and CRT."""
    rows = as_lists(m)
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("characteristic polynomial of a non-square matrix")
    if n == 0:
        return IntPoly((1,))
    primes = primes_for_bits(charpoly_bound_bits(rows))
    residues = []
    for p in primes:
        arr = np.array([[x % p for x in r] for r in rows], dtype=np.int64)
        residues.append(_hessenberg_charpoly_mod(arr, p))
    coeffs = [crt_symmetric([res[i] for res in residues], primes) for i in range(n + 1)]
    return IntPoly(tuple(coeffs))


def char_poly_bareiss(m: IntMatrix | Sequence[Sequence[int]]) -> IntPoly:
    """Independent slow route: evaluate det(xI - M) at n+1 integers and interpolate."""
    from .intlinalg import bareiss_det

    rows = as_lists(m)
    n = len(rows)
    xs = list(range(n + 1))
    ys = []
    for x in xs:
        mat = [[(x if i == j else 0) - rows[i][j] for j in range(n)] for i in range(n)]
        ys.append(bareiss_det(mat))
    # Newton divided differences over the rationals
    coef = [Fraction(y) for y in ys]
    for j in range(1, n + 1):
        for i in range(n, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    out = IntPoly((0,))
    basis = IntPoly((1,))
    for j in range(n + 1):
        c = coef[j]
        if c.denominator != 1:
            raise ArithmeticError("interpolation produced a non-integer coefficient")
        out = out + IntPoly(tuple(int(c) * b for b in basis.coeffs))
        basis = basis * IntPoly((-xs[j], 1))
    return out


def binomial_shift_check(poly: IntPoly, a: int) -> bool:
    """Cross-check of IntPoly.shift by direct binomial expansion."""
    out = [0] * len(poly.coeffs)
    for i, c in enumerate(poly.coeffs):
        for j in range(i + 1):
            out[j] += c * comb(i, j) * a ** (i - j)
    return IntPoly(tuple(out)) == poly.shift(a)

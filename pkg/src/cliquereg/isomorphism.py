"""Graph isomorphism by colour refinement and individualisation."""

from __future__ import annotations

from collections import Counter

from .errors import SizeGuardError
from .graph import Graph

MAX_VERTICES = 2000


def _multipartite_parts(g: Graph) -> list[list[int]] | None:
    """Parts of g when g is complete multipartite (complement a union of cliques)."""
    nb = g.nbr_bits
    full = (1 << g.n) - 1
    parts: dict[int, list[int]] = {}
    for v in range(g.n):
        non = full & ~nb[v]  # v together with its non-neighbours
        parts.setdefault(non, []).append(v)
    for key, members in parts.items():
        if key.bit_count() != len(members):
            return None
    return sorted(parts.values(), key=lambda p: (len(p), p))


def _fast_path(a: Graph, b: Graph) -> list[int] | None | bool:
    """Returns a bijection, None (not isomorphic), or False when no fast path applies."""
    pa, pb = _multipartite_parts(a), _multipartite_parts(b)
    if pa is None and pb is None:
        return False
    if pa is None or pb is None:
        return None
    if [len(p) for p in pa] != [len(p) for p in pb]:
        return None
    perm = [0] * a.n
    for xa, xb in zip(pa, pb):
        for u, v in zip(xa, xb):
            perm[u] = v
    return perm


def _refine(a: Graph, b: Graph, ca: list[int], cb: list[int]) -> tuple[list[int], list[int]]:
    na = a.neighbors
    nb = b.neighbors
    count = len(set(ca) | set(cb))
    while True:
        table: dict[tuple, int] = {}
        sig_a = [(ca[v], tuple(sorted(ca[u] for u in na[v]))) for v in range(a.n)]
        sig_b = [(cb[v], tuple(sorted(cb[u] for u in nb[v]))) for v in range(b.n)]
        for s in sorted(set(sig_a) | set(sig_b)):
            table[s] = len(table)
        ca = [table[s] for s in sig_a]
        cb = [table[s] for s in sig_b]
        if len(table) == count:
            return ca, cb
        count = len(table)


def _search(a: Graph, b: Graph, ca: list[int], cb: list[int]) -> list[int] | None:
    ca, cb = _refine(a, b, ca, cb)
    if Counter(ca) != Counter(cb):
        return None
    hist = Counter(ca)
    if all(c == 1 for c in hist.values()):
        where = {c: v for v, c in enumerate(cb)}
        perm = [where[c] for c in ca]
        for u, v in a.edges:
            if not b.has_edge(perm[u], perm[v]):
                return None
        return perm
    target = min((c for c, k in hist.items() if k > 1), key=lambda c: (hist[c], c))
    x = ca.index(target)
    fresh = max(max(ca), max(cb)) + 1
    ca2 = list(ca)
    ca2[x] = fresh
    for y in (v for v, c in enumerate(cb) if c == target):
        cb2 = list(cb)
        cb2[y] = fresh
        found = _search(a, b, ca2, cb2)
        if found is not None:
            return found
    return None


def is_isomorphic(a: Graph, b: Graph) -> list[int] | None:
    """A bijection perm with edges of a mapped onto edges of b, or None."""
    if max(a.n, b.n) > MAX_VERTICES:
        raise SizeGuardError(f"isomorphism test limited to {MAX_VERTICES} vertices")
    if a.n != b.n or a.m != b.m or sorted(a.degrees) != sorted(b.degrees):
        return None
    fast = _fast_path(a, b)
    if fast is not False:
        return fast  # type: ignore[return-value]
    return _search(a, b, list(a.degrees), list(b.degrees))


def check_isomorphism(a: Graph, b: Graph, perm: list[int]) -> bool:
    if sorted(perm) != list(range(a.n)) or a.n != b.n or a.m != b.m:
        return False
    return all(b.has_edge(perm[u], perm[v]) for u, v in a.edges)

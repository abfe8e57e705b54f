"""Text formats for graphs and point-line geometries."""

from __future__ import annotations

from .errors import ParseError
from .families import Geometry
from .graph import Graph


def emit_graph(g: Graph) -> str:
    """Header "n m", then one sorted "u v" line per edge (u < v)."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def _ints(line: str, lineno: int, count: int | None = None) -> list[int]:
    parts = line.split()
    if count is not None and len(parts) != count:
        raise ParseError(lineno, f"expected {count} integers, got {len(parts)}")
    out = []
    for p in parts:
        if not p.isdigit():
            raise ParseError(lineno, f"not a nonnegative decimal integer: {p!r}")
        out.append(int(p))
    return out


def _content_lines(text: str) -> list[str]:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    return lines


def parse_graph(text: str) -> Graph:
    lines = _content_lines(text)
    if not lines:
        raise ParseError(1, "missing header")
    n, m = _ints(lines[0], 1, 2)
    if n < 1:
        raise ParseError(1, "graph must have at least one vertex")
    if len(lines) - 1 != m:
        raise ParseError(len(lines) + 1 if len(lines) - 1 < m else m + 2,
                         f"header announces {m} edges, found {len(lines) - 1} lines")
    edges = []
    prev = None
    for i, line in enumerate(lines[1:], start=2):
        u, v = _ints(line, i, 2)
        if not u < v:
            raise ParseError(i, "edge must satisfy u < v")
        if v >= n:
            raise ParseError(i, f"vertex {v} out of range for n={n}")
        if prev is not None and (u, v) <= prev:
            raise ParseError(i, "edges must be sorted and distinct")
        prev = (u, v)
        edges.append((u, v))
    return Graph(n, tuple(edges))


def emit_geometry(geo: Geometry) -> str:
    """Header "P L", then one line of point indices per line of the geometry."""
    lines = [f"{geo.points} {len(geo.lines)}"]
    lines.extend(" ".join(str(p) for p in line) for line in geo.lines)
    return "\n".join(lines) + "\n"


def parse_geometry(text: str) -> Geometry:
    lines = _content_lines(text)
    if not lines:
        raise ParseError(1, "missing header")
    pts, nl = _ints(lines[0], 1, 2)
    if len(lines) - 1 != nl:
        raise ParseError(len(lines) + 1 if len(lines) - 1 < nl else nl + 2,
                         f"header announces {nl} lines, found {len(lines) - 1}")
    out = []
    for i, line in enumerate(lines[1:], start=2):
        members = _ints(line, i)
        if not members:
            raise ParseError(i, "empty line of the geometry")
        if len(set(members)) != len(members):
            raise ParseError(i, "repeated point")
        if max(members) >= pts:
            raise ParseError(i, f"point {max(members)} out of range for P={pts}")
        out.append(tuple(sorted(members)))
    return Geometry(pts, tuple(out))

"""Plain-text serialization of graphs, rotation systems, and edge colors.

Layout::

    n m
    u v            (m edge lines, 0 <= u < v < n)
    rotations      (optional block: n lines of clockwise neighbors)
    ...
    colors         (optional block: m lines "u v c")
    ...

Blank lines are ignored.  Parsing is strict otherwise; any deviation raises
GraphFormatError naming the offending line.
"""

from __future__ import annotations

from .errors import GraphFormatError
from .graphs import Embedding, Graph, normalize_edge

EdgeColors = dict[tuple[int, int], int]


def _ints(token_line: str, lineno: int) -> list[int]:
    try:
        return [int(t) for t in token_line.split()]
    except ValueError:
        raise GraphFormatError(f"line {lineno}: expected integers, got {token_line!r}") from None


def parse_graph(text: str) -> tuple[Graph, Embedding | None, EdgeColors | None]:
    """Parse the text format; returns (graph, embedding or None, colors or None)."""
    lines = [(i + 1, ln.strip()) for i, ln in enumerate(text.splitlines())]
    lines = [(no, ln) for no, ln in lines if ln]
    if not lines:
        raise GraphFormatError("empty input")

    pos = 0
    no, header = lines[pos]
    head = _ints(header, no)
    if len(head) != 2:
        raise GraphFormatError(f"line {no}: header must be 'n m'")
    n, m = head
    if n < 1 or m < 0:
        raise GraphFormatError(f"line {no}: need n >= 1 and m >= 0")
    pos += 1

    edges: set[tuple[int, int]] = set()
    for _ in range(m):
        if pos >= len(lines):
            raise GraphFormatError(f"expected {m} edge lines, got {len(edges)}")
        no, ln = lines[pos]
        pair = _ints(ln, no)
        if len(pair) != 2:
            raise GraphFormatError(f"line {no}: edge line must be 'u v'")
        u, v = pair
        if not (0 <= u < v < n):
            raise GraphFormatError(f"line {no}: edge ({u}, {v}) violates 0 <= u < v < n")
        if (u, v) in edges:
            raise GraphFormatError(f"line {no}: duplicate edge ({u}, {v})")
        edges.add((u, v))
        pos += 1
    g = Graph(n, frozenset(edges))

    rho: Embedding | None = None
    colors: EdgeColors | None = None
    while pos < len(lines):
        no, keyword = lines[pos]
        pos += 1
        if keyword == "rotations":
            if rho is not None:
                raise GraphFormatError(f"line {no}: repeated rotations block")
            rows: list[tuple[int, ...]] = []
            for v in range(n):
                if pos >= len(lines):
                    raise GraphFormatError(f"rotations block ends after {v} of {n} lines")
                rno, rln = lines[pos]
                rows.append(tuple(_ints(rln, rno)))
                pos += 1
            rho = Embedding(tuple(rows))
        elif keyword == "colors":
            if colors is not None:
                raise GraphFormatError(f"line {no}: repeated colors block")
            colors = {}
            for _ in range(m):
                if pos >= len(lines):
                    raise GraphFormatError(f"colors block ends after {len(colors)} of {m} lines")
                cno, cln = lines[pos]
                triple = _ints(cln, cno)
                if len(triple) != 3:
                    raise GraphFormatError(f"line {cno}: color line must be 'u v c'")
                u, v, c = triple
                e = normalize_edge(u, v)
                if e not in g.edges:
                    raise GraphFormatError(f"line {cno}: ({u}, {v}) is not an edge")
                if e in colors:
                    raise GraphFormatError(f"line {cno}: repeated color for edge {e}")
                colors[e] = c
                pos += 1
        else:
            raise GraphFormatError(f"line {no}: unexpected content {keyword!r}")

    if rho is not None:
        try:
            rho.validate_for(g)
        except Exception as exc:
            raise GraphFormatError(f"rotations block invalid: {exc}") from None
    return g, rho, colors


def format_graph(
    g: Graph, rho: Embedding | None = None, colors: EdgeColors | None = None
) -> str:
    """Serialize to the text format; inverse of parse_graph."""
    out = [f"{g.n} {g.m}"]
    ordered = sorted(g.edges)
    out += [f"{u} {v}" for u, v in ordered]
    if rho is not None:
        rho.validate_for(g)
        out.append("rotations")
        out += [" ".join(map(str, rot)) for rot in rho.rotation]
    if colors is not None:
        if set(colors) != g.edges:
            raise ValueError("colors must cover exactly the edge set")
        out.append("colors")
        out += [f"{u} {v} {colors[(u, v)]}" for u, v in ordered]
    return "\n".join(out) + "\n"

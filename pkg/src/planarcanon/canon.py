"""Canonical codes from first-occurrence walk labelings, and their contraction.

A walk that covers the graph induces a labeling of vertices 1..N by first
appearance.  The code records, for every label pair (i, j) with i < j, whether
the relabeled graph has that edge and in which color.  Contraction collapses
the color-1 cycles of an expanded code back to one vertex each, recovering a
colorless code of the original graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import MalformedColoredCanon
from .exploration import (
    EmbeddedGraph,
    ExplorationSequence,
    _as_sequence,
    _check_walk_inputs,
    _unpack,
)
from .graphs import DirectedEdge, Embedding, Graph
from .regularize import ColoredGraph

NONEDGE = "0"
COLOR1 = "1"
COLOR2 = "2"
_CHUNK = 8192


def pair_index(i: int, j: int, n: int) -> int:
    """Row-major upper-triangular cell index of the pair (i, j), 0 <= i < j < n."""
    if not 0 <= i < j < n:
        raise ValueError(f"need 0 <= i < j < n, got ({i}, {j}) with n={n}")
    return i * (2 * n - i - 1) // 2 + (j - i - 1)


@dataclass(frozen=True, eq=True)
class CanonCode:
    """Adjacency-cell code: vertex count plus one character per vertex pair.

    Cells run over all pairs (i, j) with i < j in row-major order; '0' marks a
    non-edge, '1' and '2' mark edges of that color ('1' doubles as the sole
    edge symbol in colorless codes).
    """

    vertex_count: int
    cells: str

    def __post_init__(self) -> None:
        n = self.vertex_count
        want = n * (n - 1) // 2
        if len(self.cells) != want:
            raise ValueError(f"expected {want} cells for {n} vertices, got {len(self.cells)}")
        if not set(self.cells) <= {NONEDGE, COLOR1, COLOR2}:
            raise ValueError("cells must be over {0, 1, 2}")

    def serialize(self) -> str:
        return f"{self.vertex_count}:{self.cells}"

    __str__ = serialize

    @classmethod
    def parse(cls, text: str) -> "CanonCode":
        head, sep, cells = text.strip().partition(":")
        if not sep or not head.isdigit():
            raise ValueError(f"not a code serialization: {text!r}")
        return cls(int(head), cells)

    def cell(self, i: int, j: int) -> str:
        return self.cells[pair_index(i, j, self.vertex_count)]

    def iter_cells(self) -> Iterator[tuple[tuple[int, int], str]]:
        n = self.vertex_count
        k = 0
        for i in range(n):
            for j in range(i + 1, n):
                yield (i, j), self.cells[k]
                k += 1


@dataclass(frozen=True, eq=True)
class LabeledWalk:
    """Walk transcript plus the 1-based first-occurrence label of each vertex."""

    transcript: tuple[int, ...]
    first_occurrence_label: dict[int, int]

    @property
    def order(self) -> tuple[int, ...]:
        """Vertices sorted by label, so order[k] carries label k + 1."""
        return tuple(
            v for v, _ in sorted(self.first_occurrence_label.items(), key=lambda kv: kv[1])
        )


def labeled_walk(
    c: EmbeddedGraph,
    start: DirectedEdge,
    seq: ExplorationSequence,
    *,
    stop_when_covered: bool = False,
) -> LabeledWalk:
    """Run a walk and label vertices by first occurrence.

    With stop_when_covered the transcript is truncated at the step that
    reaches the last unvisited vertex; the labeling is unaffected.
    """
    g, rho = _unpack(c)
    _check_walk_inputs(g, rho, start)
    seq = _as_sequence(seq)
    rotation = rho.rotation
    positions = rho.positions
    prev, cur = start
    labels: dict[int, int] = {prev: 1, cur: 2}
    transcript = [prev, cur]
    pos = 0
    while pos < seq.length:
        if stop_when_covered and len(labels) == g.n:
            break
        for t in seq.chunk(pos, pos + _CHUNK):
            rot = rotation[cur]
            nxt = rot[(positions[cur][prev] + t) % len(rot)]
            transcript.append(nxt)
            if nxt not in labels:
                labels[nxt] = len(labels) + 1
                if stop_when_covered and len(labels) == g.n:
                    prev, cur = cur, nxt
                    break
            prev, cur = cur, nxt
        else:
            pos += _CHUNK
            continue
        break
    return LabeledWalk(tuple(transcript), labels)


def code_from_labeling(c: ColoredGraph, labels: Sequence[int]) -> CanonCode:
    """Assemble the colored code of c under a complete 1-based labeling."""
    n = c.graph.n
    cells = bytearray(b"0" * (n * (n - 1) // 2))
    for (u, v), col in c.color.items():
        i, j = labels[u] - 1, labels[v] - 1
        if i > j:
            i, j = j, i
        cells[pair_index(i, j, n)] = ord("0") + col
    return CanonCode(n, cells.decode())


def canon(
    c: ColoredGraph, rho: Embedding, start: DirectedEdge, seq: ExplorationSequence
) -> CanonCode | None:
    """Canonical colored code of c from the walk over rho, or None when the
    walk does not reach every vertex (an expected outcome for candidate
    choices on non-isomorphic inputs, hence not an exception)."""
    result = canon_with_labeling(c, rho, start, seq)
    return None if result is None else result[0]


def canon_with_labeling(
    c: ColoredGraph, rho: Embedding, start: DirectedEdge, seq: ExplorationSequence
) -> tuple[CanonCode, LabeledWalk] | None:
    """As canon, but also returns the labeling that produced the code."""
    lw = labeled_walk((c.graph, rho), start, seq, stop_when_covered=True)
    if len(lw.first_occurrence_label) != c.graph.n:
        return None
    labels = [0] * c.graph.n
    for v, l in lw.first_occurrence_label.items():
        labels[v] = l
    return code_from_labeling(c, labels), lw


def decode_colored(code: CanonCode) -> tuple[Graph, dict[tuple[int, int], int]]:
    """Rebuild the graph and edge colors a code describes."""
    colors: dict[tuple[int, int], int] = {}
    for (i, j), ch in code.iter_cells():
        if ch != NONEDGE:
            colors[(i, j)] = int(ch)
    return Graph(code.vertex_count, frozenset(colors)), colors


def decode_graph(code: CanonCode) -> Graph:
    """Rebuild the graph of a colorless code; rejects color-2 cells."""
    if COLOR2 in code.cells:
        raise ValueError("colored code; use decode_colored")
    return decode_colored(code)[0]


def contract(sigma_prime: CanonCode) -> CanonCode:
    """Collapse each color-1 cycle of an expanded code to a single vertex.

    Every color-2 cell becomes an edge between the minimum labels of its two
    cycles; the surviving labels are rank-compressed.  The result is the
    colorless code of the pre-expansion graph.  Raises MalformedColoredCanon
    when the code lacks the two-cycle-edges/one-external-edge structure.
    """
    n = sigma_prime.vertex_count
    cycle_nbrs: list[list[int]] = [[] for _ in range(n)]
    external: list[tuple[int, int]] = []
    ext_degree = [0] * n
    for (i, j), ch in sigma_prime.iter_cells():
        if ch == COLOR1:
            cycle_nbrs[i].append(j)
            cycle_nbrs[j].append(i)
        elif ch == COLOR2:
            external.append((i, j))
            ext_degree[i] += 1
            ext_degree[j] += 1
    for v in range(n):
        if len(cycle_nbrs[v]) != 2 or ext_degree[v] != 1:
            raise MalformedColoredCanon(
                f"vertex {v} has color profile ({len(cycle_nbrs[v])}, {ext_degree[v]}), want (2, 1)"
            )

    component = [-1] * n
    comp_min: list[int] = []
    for v in range(n):
        if component[v] != -1:
            continue
        cid = len(comp_min)
        stack = [v]
        component[v] = cid
        lowest = v
        while stack:
            w = stack.pop()
            lowest = min(lowest, w)
            for x in cycle_nbrs[w]:
                if component[x] == -1:
                    component[x] = cid
                    stack.append(x)
        comp_min.append(lowest)

    contracted: set[tuple[int, int]] = set()
    for i, j in external:
        p, q = comp_min[component[i]], comp_min[component[j]]
        if p == q:
            raise MalformedColoredCanon("external edge inside a single cycle")
        e = (p, q) if p < q else (q, p)
        if e in contracted:
            raise MalformedColoredCanon(f"parallel contracted edge {e}")
        contracted.add(e)

    rank = {lbl: r for r, lbl in enumerate(sorted(comp_min))}
    n_out = len(comp_min)
    cells = bytearray(b"0" * (n_out * (n_out - 1) // 2))
    for p, q in contracted:
        cells[pair_index(rank[p], rank[q], n_out)] = ord(COLOR1)
    return CanonCode(n_out, cells.decode())

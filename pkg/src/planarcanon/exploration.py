"""Exploration sequences over {0, 1, 2} and the rotation-system walk engine.

A walk starts along a directed edge (prev, cur).  Each symbol t moves to the
neighbor t positions clockwise after the arrival edge: with s the index of
prev in the rotation at cur and d = degree(cur), the walk continues to
rotation[cur][(s + t) % d].  Only relative positions enter the rule, so walks
commute with vertex relabeling and with rotating any per-vertex neighbor
numbering.
"""

from __future__ import annotations

import itertools
import random
from typing import Iterable, Iterator, NamedTuple, Union

from .errors import CoverageTimeout, InfeasibleSize, InvalidStartEdge
from .graphs import DirectedEdge, Embedding, Graph
from .regularize import ColoredGraph

DEGREE_BOUND = 3
_CHUNK = 8192

EmbeddedGraph = Union[ColoredGraph, tuple[Graph, Embedding]]


def ceil_log2(x: int) -> int:
    """Smallest k with 2**k >= x, for x >= 1."""
    return (x - 1).bit_length()


def default_sequence_length(n_prime: int) -> int:
    """Base length 8 * n'^3 * ceil(log2(n' + 1)) used by provide_sequence."""
    return 8 * n_prime**3 * ceil_log2(n_prime + 1)


class ExplorationSequence:
    """Finite symbol sequence over {0, 1, 2}.

    Seeded sequences draw from random.Random(seed) and materialize lazily, so
    a sequence of nominal length in the billions costs only the prefix a walk
    actually consumes.  Explicit sequences are materialized up front.
    """

    __slots__ = ("length", "target_n", "provenance", "_seed", "_rng", "_buf")

    def __init__(
        self,
        *,
        length: int,
        target_n: int | None,
        provenance: str,
        seed: int | None = None,
        symbols: bytes | bytearray = b"",
    ):
        if length < 1:
            raise ValueError("sequence length must be at least 1")
        self.length = length
        self.target_n = target_n
        self.provenance = provenance
        self._seed = seed
        self._rng: random.Random | None = None
        self._buf = bytearray(symbols)

    @classmethod
    def explicit(
        cls, symbols: Iterable[int] | bytes | str, target_n: int | None = None
    ) -> "ExplorationSequence":
        """Wrap concrete symbols; accepts ints, bytes, or a digit string."""
        if isinstance(symbols, str):
            symbols = [int(ch) for ch in symbols]
        buf = bytearray(symbols)
        if any(s >= DEGREE_BOUND for s in buf):
            raise ValueError(f"symbols must lie in 0..{DEGREE_BOUND - 1}")
        return cls(length=len(buf), target_n=target_n, provenance="explicit", symbols=buf)

    @classmethod
    def seeded(
        cls, seed: int, length: int, target_n: int | None = None
    ) -> "ExplorationSequence":
        return cls(
            length=length,
            target_n=target_n,
            provenance=f"seeded(seed={seed}, length={length})",
            seed=seed,
        )

    def _materialize(self, k: int) -> None:
        k = min(k, self.length)
        buf = self._buf
        if len(buf) >= k:
            return
        if self._seed is None:
            raise AssertionError("explicit sequence shorter than its length")
        if self._rng is None:
            self._rng = random.Random(self._seed)
        rand = self._rng.randrange
        while len(buf) < k:
            step = min(_CHUNK, self.length - len(buf))
            buf.extend(rand(DEGREE_BOUND) for _ in range(step))

    def __len__(self) -> int:
        return self.length

    def __getitem__(self, i: int) -> int:
        if not isinstance(i, int):
            raise TypeError("only integer indexing is supported")
        if i < 0:
            i += self.length
        if not 0 <= i < self.length:
            raise IndexError(i)
        self._materialize(i + 1)
        return self._buf[i]

    def chunk(self, lo: int, hi: int) -> bytes:
        """Symbols in [lo, hi) clipped to the sequence length."""
        hi = min(hi, self.length)
        self._materialize(hi)
        return bytes(self._buf[lo:hi])

    def prefix(self, k: int) -> bytes:
        return self.chunk(0, k)

    @property
    def symbols(self) -> bytes:
        """All symbols; materializes the full sequence."""
        return self.prefix(self.length)

    def digits(self) -> str:
        """ASCII digit form, one character per symbol."""
        return "".join(str(s) for s in self.symbols)

    def __iter__(self) -> Iterator[int]:
        pos = 0
        while pos < self.length:
            yield from self.chunk(pos, pos + _CHUNK)
            pos += _CHUNK

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExplorationSequence):
            return NotImplemented
        if self.length != other.length:
            return False
        if self._seed is not None and self._seed == other._seed:
            return True
        pos = 0
        while pos < self.length:
            hi = pos + _CHUNK
            if self.chunk(pos, hi) != other.chunk(pos, hi):
                return False
            pos = hi
        return True

    def __repr__(self) -> str:
        return f"ExplorationSequence({self.provenance}, length={self.length})"


class WalkState(NamedTuple):
    """One step of a walk: where it came from, where it is, and how it arrived."""

    prev: int
    cur: int
    arrival_index: int


def _unpack(c: EmbeddedGraph) -> tuple[Graph, Embedding]:
    if isinstance(c, ColoredGraph):
        return c.graph, c.embedding
    g, rho = c
    return g, rho


def _check_walk_inputs(g: Graph, rho: Embedding, start: DirectedEdge) -> None:
    rho.validate_for(g)
    if max(g.degree(v) for v in range(g.n)) > DEGREE_BOUND:
        raise ValueError(f"walks are defined for degrees <= {DEGREE_BOUND}")
    u, v = start
    if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
        raise InvalidStartEdge(f"({u}, {v}) is not an edge of the graph")


def _as_sequence(seq: ExplorationSequence | Iterable[int]) -> ExplorationSequence:
    if isinstance(seq, ExplorationSequence):
        return seq
    return ExplorationSequence.explicit(seq)


def walk(
    c: EmbeddedGraph, start: DirectedEdge, seq: ExplorationSequence | Iterable[int]
) -> list[int]:
    """Full walk transcript: seq.length + 2 vertices starting with the edge ends."""
    g, rho = _unpack(c)
    _check_walk_inputs(g, rho, start)
    seq = _as_sequence(seq)
    rotation = rho.rotation
    positions = rho.positions
    prev, cur = start
    out = [prev, cur]
    for t in seq:
        rot = rotation[cur]
        nxt = rot[(positions[cur][prev] + t) % len(rot)]
        out.append(nxt)
        prev, cur = cur, nxt
    return out


def walk_states(
    c: EmbeddedGraph, start: DirectedEdge, seq: ExplorationSequence | Iterable[int]
) -> Iterator[WalkState]:
    """WalkState view of the same traversal, one state per visited position."""
    g, rho = _unpack(c)
    _check_walk_inputs(g, rho, start)
    seq = _as_sequence(seq)
    rotation = rho.rotation
    positions = rho.positions
    prev, cur = start
    yield WalkState(prev, cur, positions[cur][prev])
    for t in seq:
        rot = rotation[cur]
        nxt = rot[(positions[cur][prev] + t) % len(rot)]
        prev, cur = cur, nxt
        yield WalkState(prev, cur, positions[cur][prev])


def _coverage_steps(
    g: Graph, rho: Embedding, start: DirectedEdge, seq: ExplorationSequence
) -> int | None:
    """Symbols consumed until every vertex is visited, or None if seq runs out."""
    rotation = rho.rotation
    positions = rho.positions
    prev, cur = start
    visited = bytearray(g.n)
    visited[prev] = visited[cur] = 1
    remaining = g.n - 2
    if remaining == 0:
        return 0
    steps = 0
    pos = 0
    while pos < seq.length:
        for t in seq.chunk(pos, pos + _CHUNK):
            steps += 1
            rot = rotation[cur]
            nxt = rot[(positions[cur][prev] + t) % len(rot)]
            if not visited[nxt]:
                visited[nxt] = 1
                remaining -= 1
                if remaining == 0:
                    return steps
            prev, cur = cur, nxt
        pos += _CHUNK
    return None


def explores(
    c: EmbeddedGraph, start: DirectedEdge, seq: ExplorationSequence | Iterable[int]
) -> bool:
    """True when the walk visits every vertex; stops as soon as it has."""
    g, rho = _unpack(c)
    _check_walk_inputs(g, rho, start)
    return _coverage_steps(g, rho, start, _as_sequence(seq)) is not None


def provide_sequence(n_prime: int, seed: int) -> ExplorationSequence:
    """Seeded pseudorandom sequence sized for graphs on up to n_prime vertices.

    Deterministic in (n_prime, seed).  The length, 8 n'^3 ceil(log2(n'+1)),
    leaves random walks ample margin over expected cover time; it is a
    tunable default, not a guarantee.
    """
    if n_prime < 2:
        raise ValueError("n_prime must be at least 2")
    return ExplorationSequence.seeded(seed, default_sequence_length(n_prime), n_prime)


def ensure_exploring(
    c: EmbeddedGraph,
    start: DirectedEdge,
    seed: int = 0,
    *,
    base_length: int | None = None,
    chunk_length: int | None = None,
    cap_factor: int = 100,
) -> ExplorationSequence:
    """Shortest chunk-extension of the seeded stream that explores c from start.

    Returns provide_sequence(n, seed) itself when its length already covers,
    otherwise the base extended by whole chunks of the same stream.  Raises
    CoverageTimeout past cap_factor * base symbols without full coverage.
    """
    g, rho = _unpack(c)
    _check_walk_inputs(g, rho, start)
    base = base_length if base_length is not None else default_sequence_length(g.n)
    chunk = chunk_length if chunk_length is not None else base
    cap = cap_factor * base
    stream = ExplorationSequence.seeded(seed, cap, target_n=g.n)
    steps = _coverage_steps(g, rho, start, stream)
    if steps is None:
        raise CoverageTimeout(
            f"walk from {tuple(start)} missed vertices after {cap} symbols (seed {seed})"
        )
    if steps <= base:
        length = base
    else:
        length = base + -(-(steps - base) // chunk) * chunk
    return ExplorationSequence.seeded(seed, length, target_n=g.n)


def _cubic_rotation_systems(g: Graph) -> Iterator[Embedding]:
    """All rotation systems of a 3-regular graph: two cyclic orders per vertex."""
    options = []
    for v in range(g.n):
        a, b, c = g.adjacency[v]
        options.append(((a, b, c), (a, c, b)))
    for combo in itertools.product(*options):
        yield Embedding(combo)


def verify_uxs(n: int, seq: ExplorationSequence) -> bool:
    """Exhaustively test whether seq explores every connected 3-regular graph
    on at most n vertices, under every rotation system and every directed
    start edge.

    The space is graphs (up to isomorphism) x 2^n rotation systems x 2m
    starts; n is capped at 8 to keep the pass exhaustive yet feasible.
    Covers simple graphs only.
    """
    if n > 8:
        raise InfeasibleSize(f"verify_uxs handles n <= 8, got {n}")
    from .corpus import enumerate_connected_cubic

    for k in range(4, n + 1, 2):
        for g in enumerate_connected_cubic(k):
            for rho in _cubic_rotation_systems(g):
                for start in g.directed_edges():
                    if _coverage_steps(g, rho, start, seq) is None:
                        return False
    return True

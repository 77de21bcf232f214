"""Core graph and rotation-system types, face tracing, and the Euler check."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence

from .errors import InvalidEmbedding


class DirectedEdge(NamedTuple):
    """An undirected edge together with a direction of travel."""

    tail: int
    head: int

    def reversed(self) -> "DirectedEdge":
        return DirectedEdge(self.head, self.tail)


def normalize_edge(u: int, v: int) -> tuple[int, int]:
    """Return the (min, max) form used for undirected edge storage."""
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True, eq=True)
class Graph:
    """Simple undirected graph on vertex set {0, ..., n-1}.

    Edges are stored as (u, v) pairs with u < v.  Instances are immutable
    and hashable; construction validates the edge set.
    """

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"vertex count must be positive, got {self.n}")
        for e in self.edges:
            u, v = e
            if not (0 <= u < v < self.n):
                raise ValueError(f"edge {e} is not of the form (u, v) with 0 <= u < v < n")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph from unordered pairs, normalizing endpoint order.

        Raises ValueError on loops or repeated edges.
        """
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            e = normalize_edge(u, v)
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
        return cls(n, frozenset(seen))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        """Neighbor lists, each sorted ascending."""
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(a)) for a in nbrs)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return normalize_edge(u, v) in self.edges

    def directed_edges(self) -> list[DirectedEdge]:
        """Both orientations of every edge, sorted for deterministic iteration."""
        darts = [DirectedEdge(u, v) for u, v in self.edges]
        darts += [d.reversed() for d in darts]
        darts.sort()
        return darts


@dataclass(frozen=True, eq=True)
class Embedding:
    """Rotation system: for each vertex, its neighbors in clockwise order."""

    rotation: tuple[tuple[int, ...], ...]

    @cached_property
    def positions(self) -> tuple[dict[int, int], ...]:
        """Per-vertex map from neighbor to its index in the rotation."""
        return tuple({u: i for i, u in enumerate(rot)} for rot in self.rotation)

    def position(self, v: int, u: int) -> int:
        """Index of neighbor u within the rotation at v."""
        try:
            return self.positions[v][u]
        except KeyError:
            raise InvalidEmbedding(f"{u} is not a neighbor of {v} in this rotation") from None

    def validate_for(self, g: Graph) -> None:
        """Check that the rotation at each vertex is a permutation of its neighbors.

        Raises InvalidEmbedding on any mismatch.
        """
        if len(self.rotation) != g.n:
            raise InvalidEmbedding(
                f"rotation has {len(self.rotation)} vertices, graph has {g.n}"
            )
        for v, rot in enumerate(self.rotation):
            if len(set(rot)) != len(rot):
                raise InvalidEmbedding(f"rotation at {v} repeats a neighbor")
            if set(rot) != set(g.adjacency[v]):
                raise InvalidEmbedding(
                    f"rotation at {v} lists {sorted(rot)}, expected {list(g.adjacency[v])}"
                )


def trace_faces(g: Graph, rho: Embedding) -> list[list[DirectedEdge]]:
    """Decompose the directed edges into face cycles of the embedding.

    From a directed edge (u, v), the face continues with the neighbor that
    follows u in the rotation at v.  Every directed edge lies on exactly one
    face cycle.
    """
    rho.validate_for(g)
    rotation = rho.rotation
    positions = rho.positions
    faces: list[list[DirectedEdge]] = []
    seen: set[DirectedEdge] = set()
    for first in g.directed_edges():
        if first in seen:
            continue
        face: list[DirectedEdge] = []
        dart = first
        while True:
            face.append(dart)
            seen.add(dart)
            u, v = dart
            rot = rotation[v]
            dart = DirectedEdge(v, rot[(positions[v][u] + 1) % len(rot)])
            if dart == first:
                break
        faces.append(face)
    return faces


def euler_verify(g: Graph, rho: Embedding) -> bool:
    """True when the rotation system embeds the connected graph g in the sphere.

    Checks V - E + F = 2 with F obtained from face tracing.  A single
    isolated vertex counts as one face.
    """
    if g.m == 0:
        return g.n == 1
    return g.n - g.m + len(trace_faces(g, rho)) == 2


def degree_sequence(g: Graph) -> list[int]:
    """Vertex degrees sorted descending."""
    return sorted((len(a) for a in g.adjacency), reverse=True)


def check_permutation(pi: Sequence[int], n: int) -> None:
    """Raise ValueError unless pi is a permutation of range(n)."""
    if len(pi) != n or sorted(pi) != list(range(n)):
        raise ValueError(f"not a permutation of range({n}): {list(pi)}")


def relabel(g: Graph, pi: Sequence[int]) -> Graph:
    """Image of g under the vertex relabeling v -> pi[v]."""
    check_permutation(pi, g.n)
    return Graph(g.n, frozenset(normalize_edge(pi[u], pi[v]) for u, v in g.edges))


def relabel_embedding(rho: Embedding, pi: Sequence[int]) -> Embedding:
    """Carry a rotation system along the vertex relabeling v -> pi[v]."""
    check_permutation(pi, len(rho.rotation))
    new_rot: list[tuple[int, ...]] = [()] * len(rho.rotation)
    for v, rot in enumerate(rho.rotation):
        new_rot[pi[v]] = tuple(pi[u] for u in rot)
    return Embedding(tuple(new_rot))

"""Degree regularization: expand each vertex into a cycle of degree-3 vertices.

A vertex of degree d becomes a cycle of d expanded vertices, one per incident
edge, in rotation order.  Cycle edges get color 1, inherited edges color 2.
The expanded graph is 3-regular, keeps a sphere embedding, and remembers the
originating vertex of every expanded vertex.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Embedding, Graph, euler_verify

CYCLE_COLOR = 1
EXTERNAL_COLOR = 2


@dataclass(frozen=True, eq=True)
class ColoredGraph:
    """An edge-colored graph with its embedding and per-vertex origin tags."""

    graph: Graph
    embedding: Embedding
    color: dict[tuple[int, int], int]
    origin: tuple[int, ...]


def regularize(g: Graph, rho: Embedding) -> ColoredGraph:
    """Expand (g, rho) into a 3-regular colored graph with 2m vertices.

    Expanded vertex offset[i] + p handles the p-th rotation slot of original
    vertex i.  Its rotation is (previous cycle vertex, inherited edge partner,
    next cycle vertex), which keeps the embedding on the sphere.

    Requires minimum degree 3 so that every expansion cycle is simple.
    """
    rho.validate_for(g)
    degrees = [g.degree(v) for v in range(g.n)]
    if g.n and min(degrees) < 3:
        raise ValueError("regularize requires minimum degree 3")

    offset = [0] * g.n
    for i in range(1, g.n):
        offset[i] = offset[i - 1] + degrees[i - 1]
    n_exp = offset[-1] + degrees[-1]

    positions = rho.positions

    def expanded(i: int, p: int) -> int:
        return offset[i] + p

    color: dict[tuple[int, int], int] = {}
    rotation: list[tuple[int, int, int]] = [None] * n_exp  # type: ignore[list-item]
    origin: list[int] = [0] * n_exp
    for i in range(g.n):
        d = degrees[i]
        rot = rho.rotation[i]
        for p in range(d):
            a = expanded(i, p)
            origin[a] = i
            prev_cycle = expanded(i, (p - 1) % d)
            next_cycle = expanded(i, (p + 1) % d)
            j = rot[p]
            partner = expanded(j, positions[j][i])
            rotation[a] = (prev_cycle, partner, next_cycle)
            cyc = (a, next_cycle) if a < next_cycle else (next_cycle, a)
            color[cyc] = CYCLE_COLOR
            ext = (a, partner) if a < partner else (partner, a)
            color[ext] = EXTERNAL_COLOR

    expanded_graph = Graph(n_exp, frozenset(color))
    expanded_rho = Embedding(tuple(rotation))
    result = ColoredGraph(expanded_graph, expanded_rho, color, tuple(origin))
    assert euler_verify(expanded_graph, expanded_rho)
    return result


def color_respecting_iso_check(
    c1: ColoredGraph, c2: ColoredGraph, phi: dict[int, int]
) -> bool:
    """Verify that phi is a color-preserving isomorphism between colored graphs.

    Checks bijectivity, adjacency in both directions, and equal edge colors.
    """
    g1, g2 = c1.graph, c2.graph
    if g1.n != g2.n or g1.m != g2.m:
        return False
    if len(phi) != g1.n:
        return False
    image = set(phi.values())
    if len(image) != g1.n or not all(0 <= w < g2.n for w in image):
        return False
    for (u, v), col in c1.color.items():
        a, b = phi[u], phi[v]
        e = (a, b) if a < b else (b, a)
        if c2.color.get(e) != col:
            return False
    # Bijection plus injective edge transport over equal counts covers the
    # reverse direction.
    return True

"""Test-instance generation and independent ground truth.

Provides a seeded triangulation generator, a brute-force isomorphism oracle,
named small graphs, and exhaustive enumerations of connected cubic graphs and
3-connected planar graphs at sizes where that is feasible.
"""

from __future__ import annotations

import random
from collections import Counter
from functools import lru_cache
from itertools import combinations

from .connectivity import is_3_connected, is_connected
from .embedding import embed_planar
from .errors import InfeasibleSize
from .graphs import DirectedEdge, Graph, degree_sequence, trace_faces

ORACLE_MAX_N = 9
ENUM_MAX_N = 8


def gen_triangulation(n: int, seed: int) -> Graph:
    """Seeded stacked triangulation: K4 plus n - 4 vertex-in-face insertions.

    Simple planar triangulations on at least 4 vertices are 3-connected, so
    no rejection step is needed.  Deterministic in (n, seed); m = 3n - 6.
    """
    if n < 4:
        raise ValueError("triangulations need n >= 4")
    rng = random.Random(seed)
    edges = {(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)}
    faces = [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]
    for x in range(4, n):
        i = rng.randrange(len(faces))
        a, b, c = faces[i]
        # x exceeds a, b, c, so the new edges are already normalized.
        faces[i] = (a, b, x)
        faces.append((a, c, x))
        faces.append((b, c, x))
        edges.update(((a, x), (b, x), (c, x)))
    return Graph(n, frozenset(edges))


def k4() -> Graph:
    return Graph.from_edges(4, combinations(range(4), 2))


def k5() -> Graph:
    return Graph.from_edges(5, combinations(range(5), 2))


def k33() -> Graph:
    return Graph.from_edges(6, ((u, v) for u in (0, 1, 2) for v in (3, 4, 5)))


def wheel(k: int) -> Graph:
    """Cycle on k rim vertices plus a hub adjacent to all of them."""
    if k < 3:
        raise ValueError("wheel needs at least 3 rim vertices")
    rim = [(i, (i + 1) % k) for i in range(k)]
    return Graph.from_edges(k + 1, rim + [(i, k) for i in range(k)])


def prism() -> Graph:
    """Triangular prism: two triangles joined by a perfect matching."""
    return Graph.from_edges(
        6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]
    )


def cube() -> Graph:
    ring = [(i, (i + 1) % 4) for i in range(4)]
    return Graph.from_edges(
        8, ring + [(i + 4, (i + 1) % 4 + 4) for i in range(4)] + [(i, i + 4) for i in range(4)]
    )


def octahedron() -> Graph:
    """K_{2,2,2}: six vertices, all pairs adjacent except three antipodal ones."""
    skip = {(0, 1), (2, 3), (4, 5)}
    return Graph.from_edges(6, (e for e in combinations(range(6), 2) if e not in skip))


def oracle_iso(g1: Graph, g2: Graph) -> dict[int, int] | None:
    """Exhaustive isomorphism search; the ground truth for small graphs.

    Backtracking over vertex assignments, pruned by degree and by adjacency
    consistency with the partial map, so any returned bijection is an
    isomorphism by construction.  Limited to 9 vertices.
    """
    if max(g1.n, g2.n) > ORACLE_MAX_N:
        raise InfeasibleSize(f"oracle_iso handles n <= {ORACLE_MAX_N}")
    if g1.n != g2.n or g1.m != g2.m or degree_sequence(g1) != degree_sequence(g2):
        return None
    n = g1.n
    adj1 = [set(a) for a in g1.adjacency]
    adj2 = [set(a) for a in g2.adjacency]
    phi = [-1] * n
    used = [False] * n

    def extend(u: int) -> bool:
        if u == n:
            return True
        du = len(adj1[u])
        for w in range(n):
            if used[w] or len(adj2[w]) != du:
                continue
            if any((x in adj1[u]) != (phi[x] in adj2[w]) for x in range(u)):
                continue
            phi[u] = w
            used[w] = True
            if extend(u + 1):
                return True
            used[w] = False
        phi[u] = -1
        return False

    return {u: phi[u] for u in range(n)} if extend(0) else None


def _refinement_fingerprint(g: Graph) -> tuple:
    """Isomorphism-invariant bucket key: iterated degree refinement plus
    the triangle count (which separates vertex-transitive look-alikes)."""
    colors = [g.degree(v) for v in range(g.n)]
    for _ in range(3):
        signatures = [
            (colors[v], tuple(sorted(colors[u] for u in g.adjacency[v]))) for v in range(g.n)
        ]
        palette = {s: i for i, s in enumerate(sorted(set(signatures)))}
        colors = [palette[s] for s in signatures]
    triangles = sum(
        len(set(g.adjacency[u]) & set(g.adjacency[v])) for u, v in g.edges
    ) // 3
    return (g.n, g.m, triangles, tuple(sorted(Counter(colors).items())))


class _IsoSet:
    """Accumulates graphs modulo isomorphism, bucketed by fingerprint."""

    def __init__(self) -> None:
        self.reps: list[Graph] = []
        self._buckets: dict[tuple, list[Graph]] = {}

    def add(self, g: Graph) -> bool:
        """Insert g unless an isomorphic graph is present; True when new."""
        bucket = self._buckets.setdefault(_refinement_fingerprint(g), [])
        if any(oracle_iso(g, h) is not None for h in bucket):
            return False
        bucket.append(g)
        self.reps.append(g)
        return True


@lru_cache(maxsize=None)
def enumerate_connected_cubic(n: int) -> tuple[Graph, ...]:
    """Connected 3-regular graphs on n vertices, one per isomorphism class.

    Generates every labeled cubic graph by completing the lowest deficient
    vertex with all viable partner sets (each labeled graph arises exactly
    once), then deduplicates.  Capped at n = 8.
    """
    if n > ENUM_MAX_N:
        raise InfeasibleSize(f"cubic enumeration handles n <= {ENUM_MAX_N}")
    if n < 4 or n % 2:
        return ()
    out = _IsoSet()
    adj: list[set[int]] = [set() for _ in range(n)]

    def complete() -> None:
        u = next((v for v in range(n) if len(adj[v]) < 3), None)
        if u is None:
            g = Graph(n, frozenset((a, b) for a in range(n) for b in adj[a] if a < b))
            if is_connected(g):
                out.add(g)
            return
        need = 3 - len(adj[u])
        pool = [w for w in range(u + 1, n) if len(adj[w]) < 3 and w not in adj[u]]
        for partners in combinations(pool, need):
            for w in partners:
                adj[u].add(w)
                adj[w].add(u)
            complete()
            for w in partners:
                adj[u].remove(w)
                adj[w].remove(u)

    complete()
    return tuple(out.reps)


def _single_flips(t: Graph) -> list[Graph]:
    """Triangulations one diagonal flip away from t, still simple."""
    rho = embed_planar(t)
    third: dict[DirectedEdge, int] = {}
    for face in trace_faces(t, rho):
        if len(face) != 3:
            raise AssertionError("flip input must be a triangulation")
        for i, dart in enumerate(face):
            third[dart] = face[(i + 1) % 3].head
    out = []
    for u, v in sorted(t.edges):
        a = third[DirectedEdge(u, v)]
        b = third[DirectedEdge(v, u)]
        if a == b or t.has_edge(a, b):
            continue
        edges = set(t.edges)
        edges.remove((u, v))
        edges.add((a, b) if a < b else (b, a))
        out.append(Graph(t.n, frozenset(edges)))
    return out


@lru_cache(maxsize=None)
def _triangulation_classes(n: int) -> tuple[Graph, ...]:
    """Planar triangulations on n vertices up to isomorphism.

    Breadth search under diagonal flips from a stacked seed; flips connect
    the space of sphere triangulations on a fixed vertex count.
    """
    seen = _IsoSet()
    base = gen_triangulation(n, 0)
    seen.add(base)
    frontier = [base]
    while frontier:
        t = frontier.pop()
        for flipped in _single_flips(t):
            if seen.add(flipped):
                frontier.append(flipped)
    return tuple(seen.reps)


@lru_cache(maxsize=None)
def enumerate_small_3conn_planar(n: int) -> tuple[Graph, ...]:
    """All 3-connected planar graphs on exactly n vertices, one per class.

    Any simple planar graph extends to a triangulation on the same vertex
    set, so candidates are edge subsets of the triangulation classes with
    minimum degree 3; survivors of the connectivity checks are deduplicated
    and sorted for a stable order.  Capped at n = 8.
    """
    if n > ENUM_MAX_N:
        raise InfeasibleSize(f"enumeration handles n <= {ENUM_MAX_N}")
    if n < 4:
        return ()
    seen = _IsoSet()
    tried: set[frozenset[tuple[int, int]]] = set()
    min_m = (3 * n + 1) // 2  # degree sum >= 3n
    for t in _triangulation_classes(n):
        edges = sorted(t.edges)
        base_deg = [t.degree(v) for v in range(n)]
        for r in range(0, len(edges) - min_m + 1):
            for removal in combinations(range(len(edges)), r):
                deg = base_deg.copy()
                ok = True
                for i in removal:
                    u, v = edges[i]
                    deg[u] -= 1
                    deg[v] -= 1
                    if deg[u] < 3 or deg[v] < 3:
                        ok = False
                        break
                if not ok:
                    continue
                drop = set(removal)
                kept = frozenset(e for i, e in enumerate(edges) if i not in drop)
                if kept in tried:
                    continue
                tried.add(kept)
                g = Graph(n, kept)
                if is_3_connected(g):
                    seen.add(g)
    reps = sorted(
        seen.reps, key=lambda g: (g.m, degree_sequence(g), sorted(g.edges))
    )
    return tuple(reps)

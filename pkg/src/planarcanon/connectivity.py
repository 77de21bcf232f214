"""Connectivity predicates used to gate the main pipeline."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from .graphs import Graph


def _connected_avoiding(g: Graph, removed: frozenset[int]) -> bool:
    """BFS reachability of g minus a vertex set; empty remainder counts as connected."""
    remaining = [v for v in range(g.n) if v not in removed]
    if not remaining:
        return True
    adjacency = g.adjacency
    seen = {remaining[0]}
    queue = [remaining[0]]
    while queue:
        v = queue.pop()
        for u in adjacency[v]:
            if u not in removed and u not in seen:
                seen.add(u)
                queue.append(u)
    return len(seen) == len(remaining)


def is_connected(g: Graph) -> bool:
    return _connected_avoiding(g, frozenset())


@lru_cache(maxsize=4096)
def is_3_connected(g: Graph) -> bool:
    """Exhaustive separator check: no vertex set of size < 3 disconnects g.

    Graphs on fewer than four vertices are never 3-connected here, complete
    graphs included.  Memoized; Graph is immutable.
    """
    if g.n < 4:
        return False
    if not is_connected(g):
        return False
    if min(g.degree(v) for v in range(g.n)) < 3:
        return False
    for v in range(g.n):
        if not _connected_avoiding(g, frozenset((v,))):
            return False
    for pair in combinations(range(g.n), 2):
        if not _connected_avoiding(g, frozenset(pair)):
            return False
    return True

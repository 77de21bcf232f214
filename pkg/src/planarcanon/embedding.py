"""Planar embedding construction and mirror reversal."""

from __future__ import annotations

from functools import lru_cache

import networkx as nx

from .connectivity import is_connected
from .errors import NotPlanar
from .graphs import Embedding, Graph, euler_verify


def is_planar(g: Graph) -> bool:
    """Planarity alone, without requiring connectivity."""
    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.n))
    nxg.add_edges_from(sorted(g.edges))
    return nx.check_planarity(nxg)[0]


@lru_cache(maxsize=4096)
def embed_planar(g: Graph) -> Embedding:
    """Compute a clockwise rotation system for a connected planar graph.

    Deterministic: the same graph always yields the same embedding.  Each
    rotation is normalized to start at the smallest neighbor.  Raises
    NotPlanar when no embedding exists.  Results are memoized; inputs and
    outputs are immutable.
    """
    if not is_connected(g):
        raise ValueError("embed_planar requires a connected graph")
    if g.m == 0:
        return Embedding(((),))
    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.n))
    nxg.add_edges_from(sorted(g.edges))
    ok, cert = nx.check_planarity(nxg)
    if not ok:
        raise NotPlanar(f"graph with {g.n} vertices, {g.m} edges is not planar")
    data = cert.get_data()
    rotation = []
    for v in range(g.n):
        rot = list(data[v])
        if rot:
            k = rot.index(min(rot))
            rot = rot[k:] + rot[:k]
        rotation.append(tuple(rot))
    rho = Embedding(tuple(rotation))
    # The library guarantees planarity; the face count check guards against
    # any disagreement over rotation orientation conventions.
    if not euler_verify(g, rho):
        raise AssertionError("embedding failed the face count check")
    return rho


def mirror(rho: Embedding) -> Embedding:
    """Reflect an embedding by reversing every rotation.

    An involution: mirror(mirror(rho)) == rho.
    """
    return Embedding(tuple(tuple(reversed(rot)) for rot in rho.rotation))

"""Isomorphism decision for 3-connected planar graphs.

Reference choices (embedding, start edge, exploration sequence) are fixed on
the first graph.  The second graph is tried under both of its sphere
embeddings (the rotation system and its mirror) and every directed start
edge, reusing the same sequence.  Equal codes pin down a color-respecting
bijection of the expanded graphs, which collapses to a vertex bijection of
the originals.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .canon import code_from_labeling
from .connectivity import is_3_connected
from .embedding import embed_planar, mirror
from .errors import NotPlanarEmbedding, NotThreeConnected
from .exploration import ExplorationSequence, ensure_exploring
from .graphs import DirectedEdge, Embedding, Graph, degree_sequence, euler_verify
from .regularize import ColoredGraph, color_respecting_iso_check, regularize

_CHUNK = 8192


@dataclass(frozen=True)
class IsoResult:
    """Outcome of an isomorphism decision.

    On an isomorphic verdict, mapping is a verified vertex bijection,
    witness_choice names the matching (embedding selector, start edge) of the
    second graph, and expanded_mapping is the color-respecting bijection of
    the expanded graphs it came from.  trials counts candidate choices
    examined.
    """

    verdict: str
    mapping: dict[int, int] | None
    witness_choice: tuple[str, DirectedEdge] | None
    expanded_mapping: dict[int, int] | None = None
    trials: int = 0

    @property
    def is_isomorphic(self) -> bool:
        return self.verdict == "isomorphic"


def verify_mapping(g1: Graph, g2: Graph, phi: dict[int, int]) -> bool:
    """True iff phi is a bijection V(g1) -> V(g2) preserving adjacency both ways."""
    if g1.n != g2.n or g1.m != g2.m:
        return False
    if set(phi.keys()) != set(range(g1.n)):
        return False
    image = set(phi.values())
    if len(image) != g2.n or not image <= set(range(g2.n)):
        return False
    # Equal edge counts plus an injective edge transport give the reverse
    # direction for free.
    return all(g2.has_edge(phi[u], phi[v]) for u, v in g1.edges)


class _ReferenceWalk(NamedTuple):
    labels: list[int]  # vertex -> 1-based first-occurrence label
    order: list[int]  # label - 1 -> vertex
    label_transcript: list[int]
    steps: int  # symbols consumed up to full coverage


def _reference_walk(
    c: ColoredGraph, start: DirectedEdge, seq: ExplorationSequence
) -> _ReferenceWalk | None:
    g = c.graph
    rotation = c.embedding.rotation
    positions = c.embedding.positions
    prev, cur = start
    labels = [0] * g.n
    labels[prev] = 1
    labels[cur] = 2
    order = [prev, cur]
    transcript = [1, 2]
    count = 2
    steps = 0
    if count == g.n:
        return _ReferenceWalk(labels, order, transcript, steps)
    pos = 0
    while pos < seq.length:
        for t in seq.chunk(pos, pos + _CHUNK):
            steps += 1
            rot = rotation[cur]
            nxt = rot[(positions[cur][prev] + t) % len(rot)]
            lab = labels[nxt]
            covered = False
            if lab == 0:
                count += 1
                lab = count
                labels[nxt] = lab
                order.append(nxt)
                covered = count == g.n
            transcript.append(lab)
            prev, cur = cur, nxt
            if covered:
                return _ReferenceWalk(labels, order, transcript, steps)
        pos += _CHUNK
    return None


def _trial(
    rotation: tuple[tuple[int, ...], ...],
    positions: tuple[dict[int, int], ...],
    n: int,
    start: DirectedEdge,
    symbols: bytes,
    ref_transcript: list[int],
) -> tuple[list[int], list[int]] | None:
    """Candidate walk forced to reproduce the reference label transcript.

    Aborts on the first divergence; a full match means the candidate yields
    the same code as the reference up to the coverage step.
    """
    prev, cur = start
    labels = [0] * n
    labels[prev] = 1
    labels[cur] = 2
    order = [prev, cur]
    count = 2
    k = 2
    for t in symbols:
        rot = rotation[cur]
        nxt = rot[(positions[cur][prev] + t) % len(rot)]
        lab = labels[nxt]
        if lab == 0:
            count += 1
            lab = count
            labels[nxt] = lab
            order.append(nxt)
        if lab != ref_transcript[k]:
            return None
        k += 1
        prev, cur = cur, nxt
    if count != n:
        return None
    return labels, order


def _validated_embedding(g: Graph, rho: Embedding | None, which: str) -> Embedding:
    if not is_3_connected(g):
        raise NotThreeConnected(f"{which} is not 3-connected")
    if rho is None:
        return embed_planar(g)
    rho.validate_for(g)
    if not euler_verify(g, rho):
        raise NotPlanarEmbedding(f"{which}: rotation system is not a sphere embedding")
    return rho


def _contract_mapping(
    c1: ColoredGraph, c2: ColoredGraph, phi_exp: dict[int, int]
) -> dict[int, int] | None:
    """Collapse an expanded-level bijection to original vertices via origins.

    Color-respecting maps send each expansion cycle onto one expansion cycle,
    so the collapse is well defined; None flags a scattered image.
    """
    phi: dict[int, int] = {}
    for x, y in phi_exp.items():
        a, b = c1.origin[x], c2.origin[y]
        if phi.setdefault(a, b) != b:
            return None
    return phi


def isomorphic(
    g1: Graph,
    g2: Graph,
    seed: int = 0,
    *,
    rho1: Embedding | None = None,
    rho2: Embedding | None = None,
) -> IsoResult:
    """Decide whether two 3-connected planar graphs are isomorphic.

    Deterministic in (g1, g2, seed).  rho1/rho2 optionally present the inputs
    under caller-chosen sphere embeddings; otherwise embeddings are computed.
    Raises NotThreeConnected or NotPlanar when an input fails validation.
    """
    rho1 = _validated_embedding(g1, rho1, "first graph")
    rho2 = _validated_embedding(g2, rho2, "second graph")
    # Cheap invariants first; these can only reject, never accept.
    if g1.n != g2.n or g1.m != g2.m or degree_sequence(g1) != degree_sequence(g2):
        return IsoResult("not_isomorphic", None, None)

    c1 = regularize(g1, rho1)
    c2 = regularize(g2, rho2)
    n_exp = c1.graph.n
    start1 = DirectedEdge(0, c1.embedding.rotation[0][0])
    seq = ensure_exploring(c1, start1, seed)
    ref = _reference_walk(c1, start1, seq)
    assert ref is not None  # ensure_exploring guarantees coverage
    code1 = code_from_labeling(c1, ref.labels)
    symbols = seq.prefix(ref.steps)

    trials = 0
    for selector, r2 in (("plain", c2.embedding), ("mirror", mirror(c2.embedding))):
        rotation = r2.rotation
        positions = r2.positions
        for start2 in c2.graph.directed_edges():
            trials += 1
            got = _trial(rotation, positions, n_exp, start2, symbols, ref.label_transcript)
            if got is None:
                continue
            labels2, order2 = got
            if code_from_labeling(c2, labels2) != code1:
                continue
            phi_exp = {v: order2[ref.labels[v] - 1] for v in range(n_exp)}
            if not color_respecting_iso_check(c1, c2, phi_exp):
                continue
            phi = _contract_mapping(c1, c2, phi_exp)
            if phi is None or not verify_mapping(g1, g2, phi):
                continue
            return IsoResult("isomorphic", phi, (selector, start2), phi_exp, trials)
    return IsoResult("not_isomorphic", None, None, None, trials)

"""Canonical codes and isomorphism decision for 3-connected planar graphs.

Pipeline: embed (rotation system), regularize to a 3-regular colored graph,
walk it with an exploration sequence, read off a canonical code, and contract
the code back to the original graph.  Two graphs are isomorphic exactly when
some choice of embedding and start edge on the second reproduces the code of
the first.
"""

from .canon import CanonCode, LabeledWalk, canon, canon_with_labeling, contract, decode_colored, decode_graph, labeled_walk
from .connectivity import is_3_connected, is_connected
from .embedding import embed_planar, is_planar, mirror
from .errors import (
    CoverageTimeout,
    GraphFormatError,
    InfeasibleSize,
    InvalidEmbedding,
    InvalidStartEdge,
    MalformedColoredCanon,
    NotPlanar,
    NotPlanarEmbedding,
    NotThreeConnected,
    PlanarCanonError,
)
from .exploration import (
    ExplorationSequence,
    WalkState,
    default_sequence_length,
    ensure_exploring,
    explores,
    provide_sequence,
    verify_uxs,
    walk,
    walk_states,
)
from .graphs import (
    DirectedEdge,
    Embedding,
    Graph,
    degree_sequence,
    euler_verify,
    relabel,
    relabel_embedding,
    trace_faces,
)
from .iso import IsoResult, isomorphic, verify_mapping
from .regularize import ColoredGraph, color_respecting_iso_check, regularize
from .textio import format_graph, parse_graph

__version__ = "0.1.0"

__all__ = [
    "CanonCode",
    "ColoredGraph",
    "CoverageTimeout",
    "DirectedEdge",
    "Embedding",
    "ExplorationSequence",
    "Graph",
    "GraphFormatError",
    "InfeasibleSize",
    "InvalidEmbedding",
    "InvalidStartEdge",
    "IsoResult",
    "LabeledWalk",
    "MalformedColoredCanon",
    "NotPlanar",
    "NotPlanarEmbedding",
    "NotThreeConnected",
    "PlanarCanonError",
    "WalkState",
    "canon",
    "canon_with_labeling",
    "color_respecting_iso_check",
    "contract",
    "decode_colored",
    "decode_graph",
    "default_sequence_length",
    "degree_sequence",
    "embed_planar",
    "ensure_exploring",
    "euler_verify",
    "explores",
    "format_graph",
    "is_3_connected",
    "is_connected",
    "is_planar",
    "isomorphic",
    "labeled_walk",
    "mirror",
    "parse_graph",
    "provide_sequence",
    "regularize",
    "relabel",
    "relabel_embedding",
    "trace_faces",
    "verify_mapping",
    "verify_uxs",
    "walk",
    "walk_states",
]

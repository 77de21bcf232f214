import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from planarcanon.corpus import gen_triangulation, k4, wheel
from planarcanon.embedding import embed_planar
from planarcanon.errors import CoverageTimeout, InfeasibleSize, InvalidStartEdge
from planarcanon.exploration import (
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
from planarcanon.graphs import DirectedEdge, Embedding, Graph, relabel, relabel_embedding, trace_faces
from planarcanon.regularize import regularize


def _expand(g):
    return regularize(g, embed_planar(g))


class TestExplorationSequence:
    def test_explicit_from_string(self):
        seq = ExplorationSequence.explicit("0120")
        assert len(seq) == 4
        assert list(seq) == [0, 1, 2, 0]
        assert seq.digits() == "0120"

    def test_explicit_rejects_bad_symbol(self):
        with pytest.raises(ValueError, match="0..2"):
            ExplorationSequence.explicit([0, 3])

    def test_empty_rejected(self):
        with pytest.raises(ValueError, match="at least 1"):
            ExplorationSequence.explicit([])

    def test_indexing(self):
        seq = ExplorationSequence.explicit([2, 0, 1])
        assert seq[0] == 2 and seq[-1] == 1
        with pytest.raises(IndexError):
            seq[3]

    def test_seeded_deterministic(self):
        a = ExplorationSequence.seeded(9, 500)
        b = ExplorationSequence.seeded(9, 500)
        assert a == b
        assert a.prefix(500) == b.prefix(500)

    def test_seeds_differ(self):
        a = ExplorationSequence.seeded(0, 2000)
        b = ExplorationSequence.seeded(1, 2000)
        assert a.prefix(2000) != b.prefix(2000)

    def test_explicit_equals_seeded_with_same_symbols(self):
        a = ExplorationSequence.seeded(5, 64)
        b = ExplorationSequence.explicit(a.symbols)
        assert a == b and b == a

    def test_lazy_materialization(self):
        seq = ExplorationSequence.seeded(0, 10**12)
        seq.prefix(100)
        assert len(seq._buf) <= 8192  # one chunk, not a terabyte
        assert len(seq) == 10**12

    def test_chunk_clips(self):
        seq = ExplorationSequence.explicit("012")
        assert seq.chunk(1, 99) == bytes([1, 2])

    def test_symbols_in_range(self):
        assert set(ExplorationSequence.seeded(3, 3000).symbols) <= {0, 1, 2}


class TestWalk:
    def test_zero_symbol_oscillates(self):
        g = k4()
        rho = embed_planar(g)
        assert walk((g, rho), DirectedEdge(0, 1), [0]) == [0, 1, 0]
        assert walk((g, rho), DirectedEdge(0, 1), [0, 0, 0]) == [0, 1, 0, 1, 0]

    def test_transcript_length(self):
        c = _expand(k4())
        seq = ExplorationSequence.seeded(0, 57)
        assert len(walk(c, DirectedEdge(0, 1), seq)) == 59

    def test_all_ones_traces_a_face(self):
        c = _expand(k4())
        start = DirectedEdge(0, c.embedding.rotation[0][0])
        faces = trace_faces(c.graph, c.embedding)
        face = next(f for f in faces if start in f)
        steps = 2 * len(face) + 3
        got = walk(c, start, [1] * steps)
        expected = [start.tail] + [face[i % len(face)].head for i in range(steps + 1)]
        assert got == expected

    def test_colored_graph_and_pair_agree(self):
        c = _expand(k4())
        seq = [1, 2, 0, 2, 1]
        assert walk(c, DirectedEdge(3, 4), seq) == walk((c.graph, c.embedding), DirectedEdge(3, 4), seq)

    def test_invalid_start(self):
        g = k4()
        rho = embed_planar(g)
        with pytest.raises(InvalidStartEdge):
            walk((g, rho), DirectedEdge(0, 0), [1])
        with pytest.raises(InvalidStartEdge):
            walk((g, rho), DirectedEdge(0, 9), [1])

    def test_degree_bound_enforced(self):
        g = wheel(5)  # hub degree 5
        with pytest.raises(ValueError, match="degrees"):
            walk((g, embed_planar(g)), DirectedEdge(0, 1), [1])

    def test_rotating_a_rotation_leaves_walk_unchanged(self):
        # Only relative positions matter, so any cyclic shift of one
        # vertex's neighbor list is invisible to the walk.
        g = k4()
        rho = embed_planar(g)
        rot = list(rho.rotation)
        rot[2] = rot[2][1:] + rot[2][:1]
        shifted = Embedding(tuple(rot))
        seq = ExplorationSequence.seeded(4, 200)
        start = DirectedEdge(1, 2)
        assert walk((g, rho), start, seq) == walk((g, shifted), start, seq)

    @settings(max_examples=60, deadline=None)
    @given(st.integers(4, 10), st.integers(0, 9999), st.integers(0, 9999))
    def test_relabeling_equivariance(self, n, seed, pi_seed):
        c = _expand(gen_triangulation(n, seed))
        pi = list(range(c.graph.n))
        random.Random(pi_seed).shuffle(pi)
        g2 = relabel(c.graph, pi)
        rho2 = relabel_embedding(c.embedding, pi)
        seq = ExplorationSequence.seeded(seed, 300)
        start = DirectedEdge(0, c.embedding.rotation[0][0])
        mapped_start = DirectedEdge(pi[start.tail], pi[start.head])
        left = [pi[v] for v in walk(c, start, seq)]
        assert left == walk((g2, rho2), mapped_start, seq)

    def test_walk_states_are_consistent(self):
        c = _expand(k4())
        seq = ExplorationSequence.seeded(2, 40)
        states = list(walk_states(c, DirectedEdge(0, 1), seq))
        verts = walk(c, DirectedEdge(0, 1), seq)
        assert [s.cur for s in states] == verts[1:]
        for s in states:
            assert c.graph.has_edge(s.prev, s.cur)
            assert c.embedding.rotation[s.cur][s.arrival_index] == s.prev


class TestExplores:
    def test_k4_single_zero_does_not_cover(self):
        g = k4()
        assert not explores((g, embed_planar(g)), DirectedEdge(0, 1), [0])

    def test_single_edge_graph_always_covered(self):
        g = Graph.from_edges(2, [(0, 1)])
        rho = Embedding(((1,), (0,)))
        assert explores((g, rho), DirectedEdge(0, 1), [0])

    def test_monotone_under_extension(self):
        c = _expand(k4())
        start = DirectedEdge(0, 1)
        seq = ensure_exploring(c, start, seed=3, base_length=16, chunk_length=16)
        longer = ExplorationSequence.seeded(3, seq.length + 64)
        assert explores(c, start, seq)
        assert explores(c, start, longer)


class TestProvideSequence:
    def test_frozen_length_example(self):
        assert default_sequence_length(12) == 55296
        assert len(provide_sequence(12, 0)) == 55296

    def test_deterministic(self):
        assert provide_sequence(6, 42) == provide_sequence(6, 42)

    def test_requires_two_vertices(self):
        with pytest.raises(ValueError):
            provide_sequence(1, 0)

    def test_target_recorded(self):
        assert provide_sequence(7, 0).target_n == 7


class TestEnsureExploring:
    def test_result_explores(self):
        c = _expand(gen_triangulation(7, 3))
        start = DirectedEdge(0, c.embedding.rotation[0][0])
        seq = ensure_exploring(c, start, seed=0)
        assert explores(c, start, seq)

    def test_base_returned_when_sufficient(self):
        c = _expand(k4())
        start = DirectedEdge(0, c.embedding.rotation[0][0])
        seq = ensure_exploring(c, start, seed=0)
        assert seq.length == default_sequence_length(c.graph.n)

    def test_extension_is_minimal_in_chunks(self):
        c = _expand(gen_triangulation(8, 1))
        start = DirectedEdge(0, c.embedding.rotation[0][0])
        seq = ensure_exploring(c, start, seed=2, base_length=4, chunk_length=7)
        assert explores(c, start, seq)
        assert (seq.length - 4) % 7 == 0
        if seq.length > 4:
            shorter = ExplorationSequence.seeded(2, seq.length - 7)
            assert not explores(c, start, shorter)

    def test_timeout(self):
        c = _expand(k4())
        with pytest.raises(CoverageTimeout):
            ensure_exploring(c, DirectedEdge(0, 1), seed=0, base_length=1, cap_factor=2)

    def test_isomorphic_inputs_get_identical_sequences(self):
        c = _expand(gen_triangulation(6, 9))
        pi = list(range(c.graph.n))
        random.Random(1).shuffle(pi)
        g2 = relabel(c.graph, pi)
        rho2 = relabel_embedding(c.embedding, pi)
        start = DirectedEdge(0, c.embedding.rotation[0][0])
        mapped = DirectedEdge(pi[start.tail], pi[start.head])
        assert ensure_exploring(c, start, seed=5) == ensure_exploring((g2, rho2), mapped, seed=5)


class TestVerifyUxs:
    def test_seeded_sequence_passes_n4(self):
        assert verify_uxs(4, provide_sequence(4, 0))

    def test_oscillator_fails(self):
        assert not verify_uxs(4, ExplorationSequence.explicit([0]))

    def test_vacuous_below_four(self):
        # No connected 3-regular graphs exist on fewer than 4 vertices.
        assert verify_uxs(3, ExplorationSequence.explicit([0]))

    def test_size_cap(self):
        with pytest.raises(InfeasibleSize):
            verify_uxs(9, provide_sequence(4, 0))
